/*!
  \file random_networks.hpp
  \brief Seeded random generators for regular digraphs and networks
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "error.hpp"
#include "gf2.hpp"
#include "network.hpp"

namespace bnctl
{

/*! \brief Input lists of a random K-K regular digraph on n nodes.

  Superposes K random permutations pi_1..pi_K; node v receives inputs
  (pi_1(v), ..., pi_K(v)). A permutation that would repeat an input of some
  node is redrawn. After too many redraws the generator falls back to a
  relabelled circulant, which is always valid. Every node has in- and
  out-degree K and at most one self-loop.
*/
inline std::vector<std::vector<node_index>> random_regular_inputs( std::size_t n, std::size_t k, std::uint64_t seed )
{
  detail::require( n >= 1 && k >= 1 && k <= n, errc::invalid_argument, "random regular digraph needs 1 <= K <= n" );
  std::mt19937_64 rng( seed );

  std::vector<std::vector<node_index>> inputs( n );
  std::vector<node_index> perm( n );
  std::iota( perm.begin(), perm.end(), node_index{ 1 } );

  constexpr std::size_t max_redraws = 2000;
  bool ok = true;
  for ( std::size_t j = 0; j < k && ok; ++j )
  {
    std::size_t tries = 0;
    for ( ;; )
    {
      std::shuffle( perm.begin(), perm.end(), rng );
      bool clash = false;
      for ( std::size_t v = 0; v < n && !clash; ++v )
        clash = std::find( inputs[v].begin(), inputs[v].end(), perm[v] ) != inputs[v].end();
      if ( !clash )
        break;
      if ( ++tries == max_redraws )
      {
        ok = false;
        break;
      }
    }
    if ( ok )
      for ( std::size_t v = 0; v < n; ++v )
        inputs[v].push_back( perm[v] );
  }
  if ( ok )
    return inputs;

  // relabelled circulant: sigma(v) takes inputs sigma(v + d_j mod n)
  std::vector<std::size_t> offsets( n );
  std::iota( offsets.begin(), offsets.end(), 0u );
  std::shuffle( offsets.begin(), offsets.end(), rng );
  offsets.resize( k );
  std::shuffle( perm.begin(), perm.end(), rng );
  for ( auto& in : inputs )
    in.clear();
  for ( std::size_t v = 0; v < n; ++v )
    for ( auto d : offsets )
      inputs[perm[v] - 1].push_back( perm[( v + d ) % n] );
  return inputs;
}

/// K-K regular network whose every rule is `kind` (majority, mtbi, or xor).
inline boolean_network random_regular_network( std::size_t n, std::size_t k, rule_kind kind, std::uint64_t seed )
{
  std::vector<node_rule> rules;
  for ( auto& in : random_regular_inputs( n, k, seed ) )
    rules.push_back( node_rule{ kind, std::move( in ), {}, 0, {} } );
  return boolean_network( std::move( rules ) );
}

/// XOR network whose matrix entries are independent with P(1) = density.
inline boolean_network random_xor_network( std::size_t n, double density, std::uint64_t seed )
{
  detail::require( n >= 1, errc::invalid_argument, "random XOR network needs n >= 1" );
  detail::require( density >= 0.0 && density <= 1.0, errc::invalid_argument, "density must lie in [0, 1]" );
  std::mt19937_64 rng( seed );
  std::bernoulli_distribution coin( density );
  gf2_matrix a( n, n );
  for ( std::size_t i = 1; i <= n; ++i )
    for ( std::size_t j = 1; j <= n; ++j )
      a.set( i, j, coin( rng ) );
  return boolean_network::from_matrix( a );
}

/// Uniformly random subset of {1..n} (each node independently with probability 1/2).
inline control_node_set random_control_set( std::size_t n, std::uint64_t seed )
{
  std::mt19937_64 rng( seed );
  std::bernoulli_distribution coin( 0.5 );
  std::vector<node_index> m;
  for ( std::size_t i = 1; i <= n; ++i )
    if ( coin( rng ) )
      m.push_back( i );
  return control_node_set( std::move( m ) );
}

inline gf2_vector random_state( std::size_t n, std::mt19937_64& rng )
{
  std::bernoulli_distribution coin( 0.5 );
  gf2_vector v( n );
  for ( std::size_t i = 1; i <= n; ++i )
    v.set( i, coin( rng ) );
  return v;
}

} // namespace bnctl
