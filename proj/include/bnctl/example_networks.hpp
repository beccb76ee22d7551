/*!
  \file example_networks.hpp
  \brief Small hand-specified networks used in documentation, tests and the CLI
*/

#pragma once

#include "gf2.hpp"
#include "network.hpp"

namespace bnctl
{

/*! \brief 3-node XOR network with matrix rows 011 / 111 / 100.

  Not controllable from {x1}; controllable from {x2}.
*/
inline boolean_network example_xor3()
{
  return boolean_network::from_matrix( gf2_matrix::from_strings( { "011", "111", "100" } ) );
}

/// 7-node 3-3 majority network: x1..x4 form a complete-ish block, x5..x7 read each other.
inline boolean_network example_majority7()
{
  return boolean_network( { node_rule::majority( { 2, 3, 4 } ), node_rule::majority( { 1, 2, 4 } ),
                            node_rule::majority( { 1, 3, 4 } ), node_rule::majority( { 1, 2, 3 } ),
                            node_rule::majority( { 5, 6, 7 } ), node_rule::majority( { 5, 6, 7 } ),
                            node_rule::majority( { 5, 6, 7 } ) } );
}

/// 8-node 4-4 majority network: x_i reads x_i, x_{i+1}, x_{i+2}, x_{i+3} (cyclically).
inline boolean_network example_majority8()
{
  std::vector<node_rule> rules;
  for ( std::size_t i = 1; i <= 8; ++i )
    rules.push_back( node_rule::majority( { i, i % 8 + 1, ( i + 1 ) % 8 + 1, ( i + 2 ) % 8 + 1 } ) );
  return boolean_network( std::move( rules ) );
}

} // namespace bnctl
