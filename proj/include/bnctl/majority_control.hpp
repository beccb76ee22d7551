/*!
  \file majority_control.hpp
  \brief Greedy group extraction and two-step control for regular majority networks

  In a K-K regular majority (or MTBI) network with K in {2k+1, 2k}, forcing
  k+1 inputs of a node y to a common value decides y's next state. The
  extraction repeatedly removes such a group together with its target y;
  every node except the targets becomes a control node, and any state can
  then be reached in two steps.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "gf2.hpp"
#include "network.hpp"

namespace bnctl
{

struct extraction
{
  std::vector<std::vector<node_index>> groups; ///< A: group i forces target i
  std::vector<node_index> targets;             ///< B: y^1..y^p
  std::vector<node_index> residual;            ///< R, sorted

  std::size_t p() const noexcept { return targets.size(); }
};

namespace detail
{

inline std::size_t regular_degree_or_throw( boolean_network const& bn )
{
  auto const d = bn.degrees().regular_degree();
  require( d.has_value(), errc::invalid_argument, "dependency digraph is not K-K regular" );
  return *d;
}

} // namespace detail

/*! \brief Greedy extraction of forcing groups of size `group_size` = k+1.

  At each round picks the smallest y in R having at least k+1 in-neighbours
  in R \ {y}, takes the k+1 smallest of them as the group, and removes the
  group and y from R. Stops when no such y remains.
*/
inline extraction greedy_extraction( boolean_network const& bn, std::size_t group_size )
{
  auto const big_k = detail::regular_degree_or_throw( bn );
  detail::require( group_size >= 2, errc::invalid_argument, "group size must be k+1 with k >= 1" );
  auto const k = group_size - 1;
  detail::require( big_k == 2 * k + 1 || big_k == 2 * k, errc::invalid_argument,
                   "group size " + std::to_string( group_size ) + " does not match degree " +
                       std::to_string( big_k ) + " (need K = 2k+1 or K = 2k)" );

  auto const n = bn.size();
  std::vector<bool> in_r( n + 1, true );
  in_r[0] = false;

  extraction ext;
  for ( ;; )
  {
    bool found = false;
    for ( node_index y = 1; y <= n && !found; ++y )
    {
      if ( !in_r[y] )
        continue;
      std::vector<node_index> candidates;
      for ( auto x : bn.in_neighbours( y ) )
        if ( x != y && in_r[x] )
          candidates.push_back( x );
      if ( candidates.size() < group_size )
        continue;
      candidates.resize( group_size );
      for ( auto x : candidates )
        in_r[x] = false;
      in_r[y] = false;
      ext.groups.push_back( std::move( candidates ) );
      ext.targets.push_back( y );
      found = true;
    }
    if ( !found )
      break;
  }
  for ( node_index i = 1; i <= n; ++i )
    if ( in_r[i] )
      ext.residual.push_back( i );
  return ext;
}

/// Group size k+1 derived from the regular degree K = 2k+1 or 2k.
inline extraction greedy_extraction( boolean_network const& bn )
{
  return greedy_extraction( bn, detail::regular_degree_or_throw( bn ) / 2 + 1 );
}

/// U = V \ B.
inline control_node_set control_set_from_extraction( extraction const& ext, std::size_t n )
{
  std::vector<bool> is_target( n + 1, false );
  for ( auto y : ext.targets )
  {
    detail::require( y >= 1 && y <= n, errc::invalid_argument, "extraction target outside 1..n" );
    is_target[y] = true;
  }
  std::vector<node_index> u;
  for ( node_index i = 1; i <= n; ++i )
    if ( !is_target[i] )
      u.push_back( i );
  return control_node_set( std::move( u ) );
}

/// Throws unless groups/targets are distinct and every group lies in the in-neighbourhood of its target.
inline void validate_extraction( boolean_network const& bn, extraction const& ext )
{
  auto const n = bn.size();
  detail::require( ext.groups.size() == ext.targets.size(), errc::invalid_argument,
                   "extraction needs one target per group" );
  std::vector<int> seen( n + 1, 0 );
  auto mark = [&]( node_index x ) {
    detail::require( x >= 1 && x <= n, errc::invalid_argument, "extraction node outside 1..n" );
    detail::require( seen[x]++ == 0, errc::invalid_argument,
                     "node x" + std::to_string( x ) + " appears twice in the extraction" );
  };
  for ( std::size_t i = 0; i < ext.groups.size(); ++i )
  {
    for ( auto x : ext.groups[i] )
      mark( x );
    mark( ext.targets[i] );
    auto const in = bn.in_neighbours( ext.targets[i] );
    for ( auto x : ext.groups[i] )
      detail::require( std::binary_search( in.begin(), in.end(), x ), errc::invalid_argument,
                       "x" + std::to_string( x ) + " is not an input of target x" +
                           std::to_string( ext.targets[i] ) );
  }
  for ( auto z : ext.residual )
    mark( z );
}

/// True iff every z in R has at most `bound` in-neighbours in R \ {z}.
inline bool residual_saturated( boolean_network const& bn, std::vector<node_index> const& r, std::size_t bound )
{
  std::vector<bool> in_r( bn.size() + 1, false );
  for ( auto z : r )
    in_r[z] = true;
  for ( auto z : r )
  {
    std::size_t c = 0;
    for ( auto x : bn.rule( z ).inputs )
      if ( x != z && in_r[x] )
        ++c;
    if ( c > bound )
      return false;
  }
  return true;
}

/*! \brief Drives a to b in exactly two steps using U = V \ B.

  u(0) sets every member of group i to b's value at y^i, so y^i takes that
  value in F(x(1)); u(1) then sets every control node to its value in b.
*/
inline control_scheme two_step_control( boolean_network const& bn, extraction const& ext, gf2_vector const& a,
                                        gf2_vector const& b )
{
  validate_extraction( bn, ext );
  auto const n = bn.size();
  detail::require( a.size() == n && b.size() == n, errc::dimension_mismatch,
                   "initial and target states must have length " + std::to_string( n ) );
  for ( std::size_t i = 0; i < ext.groups.size(); ++i )
  {
    auto const& r = bn.rule( ext.targets[i] );
    detail::require( r.kind == rule_kind::majority || r.kind == rule_kind::mtbi, errc::invalid_argument,
                     "target x" + std::to_string( ext.targets[i] ) + " is not a majority-type node" );
    detail::require( 2 * ext.groups[i].size() > r.arity(), errc::invalid_argument,
                     "group of target x" + std::to_string( ext.targets[i] ) + " is too small to force it" );
  }

  auto const u_set = control_set_from_extraction( ext, n );

  std::vector<std::pair<node_index, bool>> first;
  for ( std::size_t i = 0; i < ext.groups.size(); ++i )
    for ( auto x : ext.groups[i] )
      first.emplace_back( x, b.get( ext.targets[i] ) );

  control_scheme scheme;
  scheme.signals.push_back( bn.control_for_target( u_set, a, first ) );
  auto const x1 = bn.controlled_step( u_set, a, scheme.signals[0] );

  std::vector<std::pair<node_index, bool>> second;
  for ( auto i : u_set )
    second.emplace_back( i, b.get( i ) );
  scheme.signals.push_back( bn.control_for_target( u_set, x1, second ) );
  return scheme;
}

enum class residual_status
{
  ok,
  hypothesis_violated,
  bound_violated
};

struct residual_bound_result
{
  residual_status status;
  std::uint64_t numerator;   ///< bound = numerator / denominator = K n / (2K - L - 1)
  std::uint64_t denominator;

  bool holds() const noexcept { return status == residual_status::ok; }
};

/*! \brief Checks |R| <= K n / (2K - L - 1) for a set R whose nodes have at most L in-neighbours in R.

  The hypothesis on R is checked first and reported separately.
*/
inline residual_bound_result residual_bound_check( boolean_network const& bn, std::vector<node_index> const& r,
                                                   std::size_t big_k, std::size_t l )
{
  auto const n = bn.size();
  detail::require( big_k >= 1 && n >= big_k, errc::invalid_argument, "need n >= K >= 1" );
  detail::require( l <= big_k - 1, errc::invalid_argument, "need L in [0, K-1]" );
  detail::require( bn.degrees().is_regular( big_k ), errc::invalid_argument,
                   "dependency digraph is not " + std::to_string( big_k ) + "-" + std::to_string( big_k ) +
                       " regular" );
  for ( auto z : r )
    detail::require( z >= 1 && z <= n, errc::invalid_argument, "residual node outside 1..n" );

  residual_bound_result res{ residual_status::ok, big_k * n, 2 * big_k - l - 1 };
  if ( !residual_saturated( bn, r, l ) )
    res.status = residual_status::hypothesis_violated;
  else if ( r.size() * res.denominator > res.numerator )
    res.status = residual_status::bound_violated;
  return res;
}

} // namespace bnctl
