/*!
  \file xor_control.hpp
  \brief Controllability, control-node sets and control synthesis for XOR networks

  An all-XOR network is the linear map x(t+1) = A x(t) over F_2. With
  control nodes U it is controllable exactly when the span W_U of all
  vectors A^k e_i (i in U, k >= 0) is the whole space.
*/

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gf2.hpp"
#include "network.hpp"

namespace bnctl
{

/// A generator A^k e_i is identified by the pair (i, k).
struct krylov_pair
{
  node_index node;
  std::size_t power;

  friend bool operator==( krylov_pair const&, krylov_pair const& ) = default;
};

struct controllability_certificate
{
  bool controllable = false;
  echelon_basis basis{ 0 };
  std::vector<krylov_pair> generators; ///< one per basis vector, in insertion order

  std::size_t rank() const noexcept { return basis.size(); }
};

using basis_schedule_t = std::vector<krylov_pair>;

namespace detail
{

inline void require_square( gf2_matrix const& a )
{
  require( a.is_square() && a.rows() > 0, errc::dimension_mismatch, "expected a non-empty square matrix" );
}

} // namespace detail

/*! \brief Computes W_U and decides controllability.

  The basis is seeded with e_i for i in U; then every vector added in the
  previous pass is multiplied by A and inserted, until a pass adds nothing.
  The span found this way is A-invariant and contains every e_i, so it is W_U.
*/
inline controllability_certificate is_controllable_xor( gf2_matrix const& a, control_node_set const& u_set )
{
  detail::require_square( a );
  auto const n = a.rows();
  u_set.validate( n );

  controllability_certificate cert;
  cert.basis = echelon_basis( n );

  std::vector<std::pair<krylov_pair, gf2_vector>> frontier;
  for ( auto i : u_set )
  {
    auto e = gf2_vector::unit( n, i );
    if ( cert.basis.insert( e ) )
    {
      cert.generators.push_back( { i, 0 } );
      frontier.emplace_back( krylov_pair{ i, 0 }, std::move( e ) );
    }
  }

  while ( !frontier.empty() && !cert.basis.is_full() )
  {
    std::vector<std::pair<krylov_pair, gf2_vector>> next;
    for ( auto const& [gen, v] : frontier )
    {
      auto w = mat_vec_mul( a, v );
      if ( cert.basis.insert( w ) )
      {
        krylov_pair g{ gen.node, gen.power + 1 };
        cert.generators.push_back( g );
        next.emplace_back( g, std::move( w ) );
      }
    }
    frontier = std::move( next );
  }

  cert.controllable = cert.basis.is_full();
  return cert;
}

inline controllability_certificate is_controllable_xor( boolean_network const& bn, control_node_set const& u_set )
{
  return is_controllable_xor( bn.xor_matrix(), u_set );
}

/*! \brief Greedy control-node set for an XOR network.

  Scans i = 1, 2, ...; whenever e_i is outside the current span V, x_i joins
  U and e_i, A e_i, A^2 e_i, ... are added to V while they stay independent.
  Stops once V spans F_2^n. The result need not be minimal.
*/
inline control_node_set construct_control_node_set( gf2_matrix const& a )
{
  detail::require_square( a );
  auto const n = a.rows();
  echelon_basis v( n, false );
  std::vector<node_index> u;
  for ( node_index i = 1; !v.is_full(); ++i )
  {
    detail::require( i <= n, errc::internal, "standard basis exhausted before the span was full" );
    auto e = gf2_vector::unit( n, i );
    if ( !v.insert( e ) )
      continue;
    u.push_back( i );
    for ( auto w = mat_vec_mul( a, e ); v.insert( w ); w = mat_vec_mul( a, w ) )
      ;
  }
  return control_node_set( std::move( u ) );
}

/*! \brief Ordered list of n pairs (i, k) whose vectors A^k e_i form a basis.

  Control nodes are consumed in ascending order; for each, powers k = 0, 1, ...
  are taken while independent. Returns std::nullopt if U is exhausted first,
  i.e. when (A, U) is not controllable.
*/
inline std::optional<basis_schedule_t> basis_schedule( gf2_matrix const& a, control_node_set const& u_set )
{
  detail::require_square( a );
  auto const n = a.rows();
  u_set.validate( n );

  basis_schedule_t pairs;
  echelon_basis v( n, false );
  for ( auto j : u_set )
  {
    if ( pairs.size() == n )
      break;
    auto w = gf2_vector::unit( n, j );
    for ( std::size_t k = 0; v.insert( w ); ++k )
    {
      pairs.push_back( { j, k } );
      w = mat_vec_mul( a, w );
    }
  }
  if ( pairs.size() < n )
    return std::nullopt;
  for ( auto const& p : pairs )
    detail::require( p.power < n, errc::internal, "schedule power reached n" );
  return pairs;
}

/*! \brief Control scheme driving a to b in exactly k*+1 steps, k* = max k_s.

  Solves b - A^{k*+1} a = sum_s c_s A^{k_s} e_{i_s} and sets
  u_{i_s}(k* - k_s) = 1 for every s with c_s = 1.
*/
inline control_scheme synthesize_control( gf2_matrix const& a, control_node_set const& u_set,
                                          basis_schedule_t const& schedule, gf2_vector const& from,
                                          gf2_vector const& to )
{
  detail::require_square( a );
  auto const n = a.rows();
  u_set.validate( n );
  detail::require( from.size() == n && to.size() == n, errc::dimension_mismatch,
                   "initial and target states must have length " + std::to_string( n ) );
  detail::require( schedule.size() == n, errc::invalid_argument, "schedule must contain exactly n pairs" );

  std::size_t k_star = 0;
  std::vector<gf2_vector> columns;
  columns.reserve( n );
  for ( auto const& p : schedule )
  {
    detail::require( u_set.contains( p.node ), errc::invalid_argument,
                     "schedule node x" + std::to_string( p.node ) + " is not a control node" );
    k_star = std::max( k_star, p.power );
    columns.push_back( mat_pow_vec( a, p.power, gf2_vector::unit( n, p.node ) ) );
  }

  auto const rhs = to ^ mat_pow_vec( a, k_star + 1, from );
  auto const c = solve_coeffs( columns, rhs );
  if ( !c )
    detail::fail( errc::internal, "schedule vectors do not span the state space" );

  control_scheme scheme;
  scheme.signals.assign( k_star + 1, gf2_vector( n ) );
  for ( std::size_t s = 0; s < n; ++s )
    if ( ( *c )[s] )
      scheme.signals[k_star - schedule[s].power].set( schedule[s].node, true );
  return scheme;
}

} // namespace bnctl
