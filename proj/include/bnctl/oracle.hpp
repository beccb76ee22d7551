/*!
  \file oracle.hpp
  \brief Exhaustive controllability checks over the full state space

  States are packed into machine integers (bit i-1 holds x_i). From state a
  the controlled successors are exactly the states y with
  y & ~U == F(a) & ~U, so a successor set is one coset of the control mask;
  searches work on these cosets instead of enumerating 2^|U| edges.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "gf2.hpp"
#include "network.hpp"

namespace bnctl
{

/// Hard cap on the node count accepted by the exhaustive routines.
inline constexpr std::size_t oracle_max_nodes = 20;

/*! \brief Precomputed image table F for all 2^n states. */
class state_space
{
public:
  using state = std::uint32_t;

  explicit state_space( boolean_network const& bn ) : n_( bn.size() )
  {
    detail::require( n_ <= oracle_max_nodes, errc::oracle_limit,
                     "exhaustive search supports at most " + std::to_string( oracle_max_nodes ) + " nodes (got " +
                         std::to_string( n_ ) + "); memory grows as 2^n" );
    image_.resize( std::size_t{ 1 } << n_ );
    std::vector<bool> tuple;
    for ( std::size_t s = 0; s < image_.size(); ++s )
    {
      state y = 0;
      for ( std::size_t i = 0; i < n_; ++i )
      {
        auto const& r = bn.rules()[i];
        tuple.resize( r.arity() );
        for ( std::size_t j = 0; j < r.arity(); ++j )
          tuple[j] = ( s >> ( r.inputs[j] - 1 ) ) & 1u;
        if ( r.eval_tuple( tuple ) )
          y |= state{ 1 } << i;
      }
      image_[s] = y;
    }
  }

  std::size_t nodes() const noexcept { return n_; }
  std::size_t states() const noexcept { return image_.size(); }
  state image( state s ) const { return image_[s]; }

  state mask_of( control_node_set const& u_set ) const
  {
    u_set.validate( n_ );
    state m = 0;
    for ( auto i : u_set )
      m |= state{ 1 } << ( i - 1 );
    return m;
  }

private:
  std::size_t n_;
  std::vector<state> image_;
};

namespace detail
{

/// Calls f(y) for every y in the coset key ^ (subsets of mask).
template<class Fn>
void for_each_in_coset( std::uint32_t key, std::uint32_t mask, Fn&& f )
{
  std::uint32_t sub = 0;
  do
  {
    f( key | sub );
    sub = ( sub - mask ) & mask;
  } while ( sub != 0 );
}

/// Number of states reachable from `start` (forward) under control mask.
inline std::size_t forward_reach_count( state_space const& sp, std::uint32_t mask, std::uint32_t start )
{
  auto const total = sp.states();
  std::vector<bool> seen( total, false ), key_done( total, false );
  std::vector<std::uint32_t> stack{ start };
  seen[start] = true;
  std::size_t count = 1;
  while ( !stack.empty() )
  {
    auto const s = stack.back();
    stack.pop_back();
    auto const key = sp.image( s ) & ~mask;
    if ( key_done[key] )
      continue;
    key_done[key] = true;
    for_each_in_coset( key, mask, [&]( std::uint32_t y ) {
      if ( !seen[y] )
      {
        seen[y] = true;
        ++count;
        stack.push_back( y );
      }
    } );
  }
  return count;
}

/// Number of states that can reach `target` under control mask.
inline std::size_t backward_reach_count( state_space const& sp, std::uint32_t mask, std::uint32_t target )
{
  auto const total = sp.states();
  // bucket states by the coset key of their image (counting sort)
  std::vector<std::uint32_t> offset( total + 1, 0 ), order( total );
  for ( std::uint32_t s = 0; s < total; ++s )
    ++offset[( sp.image( s ) & ~mask ) + 1];
  for ( std::size_t i = 1; i <= total; ++i )
    offset[i] += offset[i - 1];
  {
    auto fill = offset;
    for ( std::uint32_t s = 0; s < total; ++s )
      order[fill[sp.image( s ) & ~mask]++] = s;
  }

  std::vector<bool> seen( total, false ), key_done( total, false );
  std::vector<std::uint32_t> stack{ target };
  seen[target] = true;
  std::size_t count = 1;
  while ( !stack.empty() )
  {
    auto const y = stack.back();
    stack.pop_back();
    auto const key = y & ~mask;
    if ( key_done[key] )
      continue;
    key_done[key] = true;
    for ( auto i = offset[key]; i < offset[key + 1]; ++i )
    {
      auto const s = order[i];
      if ( !seen[s] )
      {
        seen[s] = true;
        ++count;
        stack.push_back( s );
      }
    }
  }
  return count;
}

} // namespace detail

/// True iff every state reaches every other state (one forward and one backward search from state 0).
inline bool is_controllable_bruteforce( state_space const& sp, control_node_set const& u_set )
{
  auto const mask = sp.mask_of( u_set );
  return detail::forward_reach_count( sp, mask, 0 ) == sp.states() &&
         detail::backward_reach_count( sp, mask, 0 ) == sp.states();
}

inline bool is_controllable_bruteforce( boolean_network const& bn, control_node_set const& u_set )
{
  return is_controllable_bruteforce( state_space( bn ), u_set );
}

/*! \brief Smallest controllable control set with at most `max_size` nodes.

  Candidates are tried by ascending size, and lexicographically within a size.
*/
inline std::optional<control_node_set> min_control_set_bruteforce( boolean_network const& bn, std::size_t max_size )
{
  state_space const sp( bn );
  auto const n = bn.size();
  max_size = std::min( max_size, n );
  for ( std::size_t size = 0; size <= max_size; ++size )
  {
    std::vector<node_index> pick( size );
    for ( std::size_t i = 0; i < size; ++i )
      pick[i] = i + 1;
    for ( ;; )
    {
      control_node_set cand( pick );
      if ( is_controllable_bruteforce( sp, cand ) )
        return cand;
      // next combination in lexicographic order
      std::size_t i = size;
      while ( i > 0 && pick[i - 1] == n - size + i )
        --i;
      if ( i == 0 )
        break;
      ++pick[i - 1];
      for ( auto j = i; j < size; ++j )
        pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

/*! \brief Shortest control scheme from a to b, or std::nullopt if b is unreachable.

  Returns the empty scheme when a == b.
*/
inline std::optional<control_scheme> shortest_drive( boolean_network const& bn, control_node_set const& u_set,
                                                     gf2_vector const& a, gf2_vector const& b )
{
  state_space const sp( bn );
  auto const n = bn.size();
  detail::require( a.size() == n && b.size() == n, errc::dimension_mismatch,
                   "initial and target states must have length " + std::to_string( n ) );
  auto const mask = sp.mask_of( u_set );
  auto const src = static_cast<std::uint32_t>( a.to_index() );
  auto const dst = static_cast<std::uint32_t>( b.to_index() );
  if ( src == dst )
    return control_scheme{};

  constexpr std::uint32_t none = ~std::uint32_t{ 0 };
  std::vector<std::uint32_t> parent( sp.states(), none );
  std::vector<bool> key_done( sp.states(), false );
  std::vector<std::uint32_t> frontier{ src }, next;
  bool found = false;
  while ( !frontier.empty() && !found )
  {
    next.clear();
    for ( auto s : frontier )
    {
      auto const key = sp.image( s ) & ~mask;
      if ( key_done[key] )
        continue;
      key_done[key] = true;
      detail::for_each_in_coset( key, mask, [&]( std::uint32_t y ) {
        if ( parent[y] == none && y != src )
        {
          parent[y] = s;
          next.push_back( y );
        }
      } );
      if ( parent[dst] != none )
      {
        found = true;
        break;
      }
    }
    frontier.swap( next );
  }
  if ( parent[dst] == none )
    return std::nullopt;

  std::vector<std::uint32_t> path{ dst };
  while ( path.back() != src )
    path.push_back( parent[path.back()] );
  std::reverse( path.begin(), path.end() );

  control_scheme scheme;
  for ( std::size_t t = 0; t + 1 < path.size(); ++t )
    scheme.signals.push_back( gf2_vector::from_index( n, path[t + 1] ^ sp.image( path[t] ) ) );
  return scheme;
}

/*! \brief Largest shortest-drive length over all ordered pairs a != b.

  Returns std::nullopt if some pair is unreachable.
*/
inline std::optional<std::size_t> drive_horizon( boolean_network const& bn, control_node_set const& u_set )
{
  state_space const sp( bn );
  auto const mask = sp.mask_of( u_set );
  auto const total = sp.states();
  std::size_t worst = 0;
  std::vector<std::uint32_t> dist( total );
  std::vector<bool> key_done( total );
  std::vector<std::uint32_t> frontier, next;
  constexpr std::uint32_t unseen = ~std::uint32_t{ 0 };
  for ( std::uint32_t src = 0; src < total; ++src )
  {
    std::fill( dist.begin(), dist.end(), unseen );
    std::fill( key_done.begin(), key_done.end(), false );
    dist[src] = 0;
    std::size_t reached = 1;
    frontier.assign( 1, src );
    for ( std::uint32_t level = 1; !frontier.empty(); ++level )
    {
      next.clear();
      for ( auto s : frontier )
      {
        auto const key = sp.image( s ) & ~mask;
        if ( key_done[key] )
          continue;
        key_done[key] = true;
        detail::for_each_in_coset( key, mask, [&]( std::uint32_t y ) {
          if ( dist[y] == unseen )
          {
            dist[y] = level;
            ++reached;
            next.push_back( y );
          }
        } );
      }
      frontier.swap( next );
    }
    if ( reached != total )
      return std::nullopt;
    for ( std::uint32_t y = 0; y < total; ++y )
      if ( y != src )
        worst = std::max<std::size_t>( worst, dist[y] );
  }
  return worst;
}

} // namespace bnctl
