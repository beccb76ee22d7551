/*!
  \file families.hpp
  \brief Constructive controllable families and their control strategies

  Layered families consist of m layers x^1..x^m of equal width; layer l+1
  is computed from layer l and layer 1 from layer m. Node x^l_j has flat
  index (l-1)*width + j.

  | family         | width | rule of x^{l+1}_j                              |
  |----------------|-------|------------------------------------------------|
  | majority_odd   | 2k+2  | (2k+1)-ary majority of layer l without x^l_j   |
  | majority_even  | 2k+1  | 2k-ary majority of layer l without x^l_j       |
  | mtbi           | 2k    | MTBI of layer l, tie-breaker x^l_j             |
  | phi            | k     | phi_k of x^l_j, x^l_{j+1}, ... (cyclic)        |

  The XOR families are the shifted window x_i <- x_i + ... + x_{i+k-1}
  and the circulants I + P + ... + P^{k-1} / P + ... + P^k on 2^m nodes.
*/

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gf2.hpp"
#include "network.hpp"

namespace bnctl
{

enum class layered_family
{
  majority_odd,
  majority_even,
  mtbi,
  phi
};

inline char const* to_string( layered_family f )
{
  switch ( f )
  {
  case layered_family::majority_odd:
    return "majority-odd";
  case layered_family::majority_even:
    return "majority-even";
  case layered_family::mtbi:
    return "mtbi";
  case layered_family::phi:
    return "phi";
  }
  return "?";
}

inline std::optional<layered_family> layered_family_from_string( std::string const& s )
{
  for ( auto f : { layered_family::majority_odd, layered_family::majority_even, layered_family::mtbi,
                   layered_family::phi } )
    if ( s == to_string( f ) )
      return f;
  return std::nullopt;
}

inline std::size_t layer_width( layered_family f, std::size_t k )
{
  switch ( f )
  {
  case layered_family::majority_odd:
    return 2 * k + 2;
  case layered_family::majority_even:
    return 2 * k + 1;
  case layered_family::mtbi:
    return 2 * k;
  case layered_family::phi:
    return k;
  }
  return 0;
}

struct layered_family_spec
{
  layered_family family;
  std::size_t k;
  std::size_t m;

  std::size_t width() const { return layer_width( family, k ); }
  std::size_t size() const { return m * width(); }

  /// Flat index of x^l_j.
  node_index node( std::size_t l, std::size_t j ) const { return ( l - 1 ) * width() + j; }

  void validate() const
  {
    detail::require( k >= 1, errc::invalid_argument, "k must be at least 1" );
    detail::require( m >= 1, errc::invalid_argument, "m must be at least 1" );
    if ( family == layered_family::phi )
      detail::require( k >= 3, errc::invalid_argument, "the phi family needs k >= 3" );
  }

  /// Closed-form size of the designated control-node set.
  std::size_t control_set_size() const
  {
    switch ( family )
    {
    case layered_family::majority_odd:
      return ( 2 * k + 2 ) + ( m - 1 ) * k;
    case layered_family::majority_even:
      return ( 2 * k + 1 ) + ( m - 1 ) * k;
    case layered_family::mtbi:
      return 2 * k + ( m - 1 ) * ( k - 1 );
    case layered_family::phi:
      return k;
    }
    return 0;
  }

  friend bool operator==( layered_family_spec const&, layered_family_spec const& ) = default;
};

struct family_instance
{
  boolean_network bn;
  control_node_set control;
};

namespace detail
{

/// Input list of x^{l+1}_j expressed as layer-l positions (1-based).
inline std::vector<std::size_t> layer_inputs( layered_family f, std::size_t k, std::size_t j )
{
  auto const w = layer_width( f, k );
  std::vector<std::size_t> pos;
  switch ( f )
  {
  case layered_family::majority_odd:
  case layered_family::majority_even:
    for ( std::size_t i = 1; i <= w; ++i )
      if ( i != j )
        pos.push_back( i );
    break;
  case layered_family::mtbi:
    pos.push_back( j );
    for ( std::size_t i = 1; i <= w; ++i )
      if ( i != j )
        pos.push_back( i );
    break;
  case layered_family::phi:
    for ( std::size_t s = 0; s < k; ++s )
      pos.push_back( ( j - 1 + s ) % w + 1 );
    break;
  }
  return pos;
}

inline node_rule layer_rule( layered_family f, std::vector<node_index> inputs )
{
  switch ( f )
  {
  case layered_family::majority_odd:
  case layered_family::majority_even:
    return node_rule::majority( std::move( inputs ) );
  case layered_family::mtbi:
    return node_rule::mtbi( std::move( inputs ) );
  case layered_family::phi:
    return node_rule::phi( std::move( inputs ) );
  }
  fail( errc::internal, "unknown family" );
}

inline bool is_constant( gf2_vector const& v ) { return v.is_zero() || v.popcount() == v.size(); }

} // namespace detail

inline family_instance gen_family( layered_family_spec const& spec )
{
  spec.validate();
  auto const w = spec.width();
  auto const m = spec.m;

  std::vector<node_rule> rules;
  rules.reserve( spec.size() );
  for ( std::size_t l = 1; l <= m; ++l )
  {
    auto const src = l == 1 ? m : l - 1;
    for ( std::size_t j = 1; j <= w; ++j )
    {
      std::vector<node_index> in;
      for ( auto p : detail::layer_inputs( spec.family, spec.k, j ) )
        in.push_back( spec.node( src, p ) );
      rules.push_back( detail::layer_rule( spec.family, std::move( in ) ) );
    }
  }

  std::vector<node_index> u;
  for ( std::size_t j = 1; j <= w; ++j )
    u.push_back( spec.node( 1, j ) );
  std::size_t const head = spec.family == layered_family::mtbi ? spec.k - 1
                           : spec.family == layered_family::phi ? 0
                                                                : spec.k;
  for ( std::size_t l = 2; l <= m; ++l )
    for ( std::size_t j = 1; j <= head; ++j )
      u.push_back( spec.node( l, j ) );

  return { boolean_network( std::move( rules ) ), control_node_set( std::move( u ) ) };
}

/// G_1 / G_2 / G_3 / G_4 applied to one layer state.
inline gf2_vector layer_map_eval( layered_family f, std::size_t k, gf2_vector const& y )
{
  auto const w = layer_width( f, k );
  detail::require( y.size() == w, errc::dimension_mismatch,
                   "layer state has length " + std::to_string( y.size() ) + ", expected " + std::to_string( w ) );
  gf2_vector out( w );
  for ( std::size_t j = 1; j <= w; ++j )
  {
    std::vector<node_index> in;
    for ( auto p : detail::layer_inputs( f, k, j ) )
      in.push_back( p );
    out.set( j, eval_rule( detail::layer_rule( f, std::move( in ) ), y ) );
  }
  return out;
}

namespace detail
{

inline std::size_t mixed_ones( gf2_vector const& v, std::size_t expected_len, char const* name )
{
  require( v.size() == expected_len, errc::dimension_mismatch,
           std::string( name ) + " expects a vector of length " + std::to_string( expected_len ) );
  require( !is_constant( v ), errc::invalid_argument, std::string( name ) + " needs both a 0 and a 1 entry" );
  return v.popcount();
}

inline gf2_vector ones_then_zeros( std::size_t ones, std::size_t zeros )
{
  gf2_vector r( ones + zeros );
  for ( std::size_t i = 1; i <= ones; ++i )
    r.set( i, true );
  return r;
}

} // namespace detail

/// v of length k+2 with d ones (both values present) -> 1^{k+1-d} 0^{d-1}.
inline gf2_vector alpha1( gf2_vector const& v )
{
  detail::require( v.size() >= 3, errc::invalid_argument, "alpha1 needs k >= 1" );
  auto const k = v.size() - 2;
  auto const d = detail::mixed_ones( v, k + 2, "alpha1" );
  return detail::ones_then_zeros( k + 1 - d, d - 1 );
}

/// v of length k+1 with d ones (both values present) -> 1^{k-d} 0^{d}.
inline gf2_vector alpha2( gf2_vector const& v )
{
  detail::require( v.size() >= 2, errc::invalid_argument, "alpha2 needs k >= 1" );
  auto const k = v.size() - 1;
  auto const d = detail::mixed_ones( v, k + 1, "alpha2" );
  return detail::ones_then_zeros( k - d, d );
}

/// v of length k+1 with d ones (both values present) -> 1^{k-d} 0^{d-1}, length k-1.
inline gf2_vector alpha3( gf2_vector const& v )
{
  detail::require( v.size() >= 2, errc::invalid_argument, "alpha3 needs k >= 1" );
  auto const k = v.size() - 1;
  auto const d = detail::mixed_ones( v, k + 1, "alpha3" );
  return detail::ones_then_zeros( k - d, d - 1 );
}

namespace detail
{

inline void require_family_network( layered_family_spec const& spec, boolean_network const& bn,
                                    control_node_set const& u_set )
{
  auto const inst = gen_family( spec );
  require( bn == inst.bn, errc::invalid_argument,
           std::string( "network is not the generated " ) + to_string( spec.family ) + " family with k=" +
               std::to_string( spec.k ) + ", m=" + std::to_string( spec.m ) );
  require( u_set == inst.control, errc::invalid_argument, "control set differs from the family's control set" );
}

/// Runs one controlled step realizing the requested overwrites and records the control vector.
struct strategy_runner
{
  boolean_network const& bn;
  control_node_set const& u_set;
  layered_family_spec const& spec;
  gf2_vector x;
  control_scheme scheme;
  std::vector<std::pair<node_index, bool>> desired{};

  void write_layer( std::size_t l, std::size_t first_j, gf2_vector const& values )
  {
    for ( std::size_t s = 1; s <= values.size(); ++s )
      desired.emplace_back( spec.node( l, first_j + s - 1 ), values.get( s ) );
  }

  void commit()
  {
    auto u = bn.control_for_target( u_set, x, desired );
    x = bn.controlled_step( u_set, x, u );
    scheme.signals.push_back( std::move( u ) );
    desired.clear();
  }

  void finish( gf2_vector const& b )
  {
    for ( auto i : u_set )
      desired.emplace_back( i, b.get( i ) );
    commit();
  }
};

inline gf2_vector block( layered_family_spec const& spec, gf2_vector const& v, std::size_t l, std::size_t first_j,
                         std::size_t count )
{
  return v.slice( spec.node( l, first_j ), count );
}

inline void require_states( layered_family_spec const& spec, gf2_vector const& a, gf2_vector const& b )
{
  require( a.size() == spec.size() && b.size() == spec.size(), errc::dimension_mismatch,
           "initial and target states must have length " + std::to_string( spec.size() ) );
}

} // namespace detail

/// Drives a to b in m steps on the (2k+1)-(2k+1) majority family.
inline control_scheme strategy_majority_odd( layered_family_spec const& spec, boolean_network const& bn,
                                             control_node_set const& u_set, gf2_vector const& a, gf2_vector const& b )
{
  detail::require( spec.family == layered_family::majority_odd, errc::invalid_argument, "wrong family" );
  detail::require_family_network( spec, bn, u_set );
  detail::require_states( spec, a, b );
  auto const k = spec.k, m = spec.m, w = spec.width();

  detail::strategy_runner run{ bn, u_set, spec, a, {} };
  for ( std::size_t t = 0; t + 1 < m; ++t )
  {
    auto const p = detail::block( spec, b, m - t, k + 1, k + 2 );
    if ( p.popcount() == p.size() )
      run.write_layer( 1, 1, gf2_vector::ones( w ) );
    else if ( p.is_zero() )
      run.write_layer( 1, 1, gf2_vector( w ) );
    else
    {
      auto target = alpha1( p ).concat( p );
      run.write_layer( 1, 1, ( m - t ) % 2 == 1 ? target : ~target );
    }
    run.commit();
  }
  run.finish( b );
  return std::move( run.scheme );
}

/// Drives a to b in m steps on the 2k-2k majority family.
inline control_scheme strategy_majority_even( layered_family_spec const& spec, boolean_network const& bn,
                                              control_node_set const& u_set, gf2_vector const& a, gf2_vector const& b )
{
  detail::require( spec.family == layered_family::majority_even, errc::invalid_argument, "wrong family" );
  detail::require_family_network( spec, bn, u_set );
  detail::require_states( spec, a, b );
  auto const k = spec.k, m = spec.m, w = spec.width();

  detail::strategy_runner run{ bn, u_set, spec, a, {} };
  for ( std::size_t t = 0; t + 1 < m; ++t )
  {
    auto const y = bn.step( run.x );
    auto const p = detail::block( spec, b, m - t, k + 1, k + 1 );
    if ( p.popcount() == p.size() )
      run.write_layer( 1, 1, gf2_vector::ones( w ) );
    else if ( p.is_zero() )
      run.write_layer( 1, 1, gf2_vector( w ) );
    else
    {
      auto const q = ( m - t ) % 2 == 1 ? p : ~p;
      run.write_layer( 1, 1, alpha2( q ).concat( q ) );
    }
    for ( std::size_t l = 2; l <= m; ++l )
    {
      auto const q = detail::block( spec, y, l, k + 1, k + 1 );
      if ( !detail::is_constant( q ) )
        run.write_layer( l, 1, alpha2( q ) );
    }
    run.commit();
  }
  run.finish( b );
  return std::move( run.scheme );
}

/// Drives a to b in m steps on the 2k-2k MTBI family.
inline control_scheme strategy_mtbi( layered_family_spec const& spec, boolean_network const& bn,
                                     control_node_set const& u_set, gf2_vector const& a, gf2_vector const& b )
{
  detail::require( spec.family == layered_family::mtbi, errc::invalid_argument, "wrong family" );
  detail::require_family_network( spec, bn, u_set );
  detail::require_states( spec, a, b );
  auto const k = spec.k, m = spec.m, w = spec.width();

  detail::strategy_runner run{ bn, u_set, spec, a, {} };
  for ( std::size_t t = 0; t + 1 < m; ++t )
  {
    auto const p = detail::block( spec, b, m - t, k, k + 1 );
    if ( p.popcount() == p.size() )
      run.write_layer( 1, 1, gf2_vector::ones( w ) );
    else if ( p.is_zero() )
      run.write_layer( 1, 1, gf2_vector( w ) );
    else
      run.write_layer( 1, 1, alpha3( p ).concat( p ) );
    run.commit();
  }
  run.finish( b );
  return std::move( run.scheme );
}

/// Drives a to b in m steps on the phi_k family, controlling layer 1 only.
inline control_scheme strategy_phi( layered_family_spec const& spec, boolean_network const& bn,
                                    control_node_set const& u_set, gf2_vector const& a, gf2_vector const& b )
{
  detail::require( spec.family == layered_family::phi, errc::invalid_argument, "wrong family" );
  detail::require_family_network( spec, bn, u_set );
  detail::require_states( spec, a, b );
  auto const m = spec.m, w = spec.width();

  detail::strategy_runner run{ bn, u_set, spec, a, {} };
  for ( std::size_t t = 0; t < m; ++t )
  {
    auto const target = detail::block( spec, b, m - t, 1, w );
    bool const flip = detail::is_constant( target ) && ( m - t ) % 2 == 0;
    run.write_layer( 1, 1, flip ? ~target : target );
    run.commit();
  }
  return std::move( run.scheme );
}

inline control_scheme strategy_for( layered_family_spec const& spec, boolean_network const& bn,
                                    control_node_set const& u_set, gf2_vector const& a, gf2_vector const& b )
{
  switch ( spec.family )
  {
  case layered_family::majority_odd:
    return strategy_majority_odd( spec, bn, u_set, a, b );
  case layered_family::majority_even:
    return strategy_majority_even( spec, bn, u_set, a, b );
  case layered_family::mtbi:
    return strategy_mtbi( spec, bn, u_set, a, b );
  case layered_family::phi:
    return strategy_phi( spec, bn, u_set, a, b );
  }
  detail::fail( errc::internal, "unknown family" );
}

/// x_i <- x_i + x_{i+1} + ... + x_{i+k-1} (indices mod n), U = {x_{n-k+2}, ..., x_n}.
inline family_instance gen_xor_window( std::size_t n, std::size_t k )
{
  detail::require( k >= 2 && n > k, errc::invalid_argument, "window family needs n > k >= 2" );
  std::vector<node_rule> rules;
  for ( std::size_t i = 1; i <= n; ++i )
  {
    std::vector<node_index> in;
    for ( std::size_t s = 0; s < k; ++s )
      in.push_back( ( i - 1 + s ) % n + 1 );
    rules.push_back( node_rule::xor_of( std::move( in ) ) );
  }
  std::vector<node_index> u;
  for ( auto i = n - k + 2; i <= n; ++i )
    u.push_back( i );
  return { boolean_network( std::move( rules ) ), control_node_set( std::move( u ) ) };
}

/// The cyclic shift P on n nodes: P[i][i+1 mod n] = 1.
inline gf2_matrix cyclic_shift_matrix( std::size_t n )
{
  detail::require( n >= 1, errc::invalid_argument, "shift matrix needs n >= 1" );
  gf2_matrix p( n, n );
  for ( std::size_t i = 1; i <= n; ++i )
    p.set( i, i % n + 1, true );
  return p;
}

/*! \brief Circulant k-k XOR network on n = 2^m nodes controllable from x_n alone.

  k = 3 mod 4 uses A = I + P + ... + P^{k-1} (node i reads x_i .. x_{i+k-1});
  k = 1 mod 4 uses A = P + ... + P^k (node i reads x_{i+1} .. x_{i+k}).
*/
inline family_instance gen_xor_circulant( std::size_t m, std::size_t k )
{
  detail::require( m >= 2 && m < 20, errc::invalid_argument, "circulant family needs 2 <= m < 20" );
  std::size_t const n = std::size_t{ 1 } << m;
  detail::require( k % 2 == 1 && k >= 3 && k <= n - 1, errc::invalid_argument,
                   "circulant family needs odd k with 3 <= k <= 2^m - 1" );
  std::size_t const first = k % 4 == 3 ? 0 : 1;
  std::vector<node_rule> rules;
  for ( std::size_t i = 1; i <= n; ++i )
  {
    std::vector<node_index> in;
    for ( std::size_t s = first; s < first + k; ++s )
      in.push_back( ( i - 1 + s ) % n + 1 );
    rules.push_back( node_rule::xor_of( std::move( in ) ) );
  }
  return { boolean_network( std::move( rules ) ), control_node_set{ n } };
}

} // namespace bnctl
