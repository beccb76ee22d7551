/*!
  \file bnctl.hpp
  \brief Umbrella header
*/

#pragma once

#include "bounds.hpp"
#include "error.hpp"
#include "example_networks.hpp"
#include "families.hpp"
#include "gf2.hpp"
#include "io.hpp"
#include "majority_control.hpp"
#include "network.hpp"
#include "oracle.hpp"
#include "random_networks.hpp"
#include "xor_control.hpp"
