/*!
  \file bounds.hpp
  \brief Exact evaluation of control-set size bounds

  Lower bounds: a controllable network with m control nodes that reaches
  every b != a within s+1 steps must satisfy

    2^n <= 2^{(s+1)m} - (sum_{i=1}^{c-1} C(m, i)) * sum_{t=1}^{s} 2^{tm}

  with c = ceil(k/2) for k-in majority networks and c = k for 2k-in MTBI
  networks. Upper bounds: the two-step construction on regular networks
  needs at most a fixed fraction of the nodes.
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace bnctl
{

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

enum class bound_family
{
  majority_odd,  ///< (2k+1)-(2k+1) majority
  majority_even, ///< 2k-2k majority
  mtbi           ///< 2k-2k MTBI
};

inline char const* to_string( bound_family f )
{
  switch ( f )
  {
  case bound_family::majority_odd:
    return "majority-odd";
  case bound_family::majority_even:
    return "majority-even";
  case bound_family::mtbi:
    return "mtbi";
  }
  return "?";
}

inline std::optional<bound_family> bound_family_from_string( std::string const& s )
{
  for ( auto f : { bound_family::majority_odd, bound_family::majority_even, bound_family::mtbi } )
    if ( s == to_string( f ) )
      return f;
  return std::nullopt;
}

namespace detail
{

inline big_int pow2( std::size_t e )
{
  big_int r = 1;
  r <<= e;
  return r;
}

inline big_int binomial( std::size_t m, std::size_t i )
{
  if ( i > m )
    return 0;
  big_int r = 1;
  for ( std::size_t j = 1; j <= i; ++j )
  {
    r *= m - i + j;
    r /= j;
  }
  return r;
}

inline std::size_t ceil_div( std::size_t a, std::size_t b ) { return ( a + b - 1 ) / b; }

/// 2^n <= 2^{(s+1)m} - (sum_{i=1}^{c-1} C(m,i)) * sum_{t=1}^{s} 2^{tm}
inline bool lower_bound_inequality( std::size_t n, std::size_t c, std::size_t s, std::size_t m )
{
  big_int binom_sum = 0;
  for ( std::size_t i = 1; i + 1 <= c; ++i )
    binom_sum += binomial( m, i );
  big_int geo = 0;
  for ( std::size_t t = 1; t <= s; ++t )
    geo += pow2( t * m );
  return pow2( n ) <= pow2( ( s + 1 ) * m ) - binom_sum * geo;
}

} // namespace detail

inline bool majority_inequality_holds( std::size_t n, std::size_t k, std::size_t s, std::size_t m )
{
  detail::require( k >= 3 && n >= k, errc::invalid_argument, "majority bound needs n >= k >= 3" );
  detail::require( s >= 1 && m >= 1, errc::invalid_argument, "majority bound needs s >= 1 and m >= 1" );
  return detail::lower_bound_inequality( n, detail::ceil_div( k, 2 ), s, m );
}

inline bool mtbi_inequality_holds( std::size_t n, std::size_t k, std::size_t s, std::size_t m )
{
  detail::require( k >= 2 && n >= 2 * k, errc::invalid_argument, "MTBI bound needs n >= 2k >= 4" );
  detail::require( s >= 1 && m >= 1, errc::invalid_argument, "MTBI bound needs s >= 1 and m >= 1" );
  return detail::lower_bound_inequality( n, k, s, m );
}

struct lower_bound_result
{
  std::size_t closed_form;    ///< max(c, ceil((n+1)/(s+1)))
  std::size_t inequality_min; ///< smallest m in 1..n satisfying the inequality
};

namespace detail
{

template<class Holds>
std::size_t scan_inequality( std::size_t n, Holds&& holds )
{
  for ( std::size_t m = 1; m <= n; ++m )
    if ( holds( m ) )
      return m;
  fail( errc::internal, "inequality fails even with every node controlled" );
}

} // namespace detail

inline lower_bound_result majority_lower_bound( std::size_t n, std::size_t k, std::size_t s )
{
  detail::require( k >= 3 && n >= k && s >= 1, errc::invalid_argument, "majority bound needs n >= k >= 3, s >= 1" );
  auto const cf = std::max( detail::ceil_div( k, 2 ), detail::ceil_div( n + 1, s + 1 ) );
  auto const im = detail::scan_inequality( n, [&]( std::size_t m ) { return majority_inequality_holds( n, k, s, m ); } );
  return { cf, im };
}

inline lower_bound_result mtbi_lower_bound( std::size_t n, std::size_t k, std::size_t s )
{
  detail::require( k >= 2 && n >= 2 * k && s >= 1, errc::invalid_argument, "MTBI bound needs n >= 2k >= 4, s >= 1" );
  auto const cf = std::max( k, detail::ceil_div( n + 1, s + 1 ) );
  auto const im = detail::scan_inequality( n, [&]( std::size_t m ) { return mtbi_inequality_holds( n, k, s, m ); } );
  return { cf, im };
}

/*! \brief Upper bound on the size of the two-step control set.

  (3k^2+6k+2)/(3k^2+7k+2) n for (2k+1)-(2k+1) majority networks and
  (3k^2+4k-1)/(3k^2+5k-2) n for 2k-2k majority or MTBI networks.
*/
inline big_rational general_upper_bound( std::size_t n, std::size_t k, bound_family family )
{
  detail::require( k >= 1, errc::invalid_argument, "upper bound needs k >= 1" );
  big_int const kk = k;
  big_int num, den;
  if ( family == bound_family::majority_odd )
  {
    detail::require( n >= 2 * k + 1, errc::invalid_argument, "upper bound needs n >= 2k+1" );
    num = 3 * kk * kk + 6 * kk + 2;
    den = 3 * kk * kk + 7 * kk + 2;
  }
  else
  {
    detail::require( n >= 2 * k, errc::invalid_argument, "upper bound needs n >= 2k" );
    num = 3 * kk * kk + 4 * kk - 1;
    den = 3 * kk * kk + 5 * kk - 2;
  }
  return big_rational( num * n, den );
}

inline big_int floor_of( big_rational const& q )
{
  return boost::multiprecision::numerator( q ) / boost::multiprecision::denominator( q );
}

struct bounds_report
{
  std::size_t n, k, s;
  bound_family family;
  std::optional<lower_bound_result> lower; ///< absent when the parameters fall outside the lower-bound range
  std::optional<big_rational> upper;       ///< absent when the parameters fall outside the upper-bound range

  std::optional<big_int> upper_floor() const
  {
    return upper ? std::optional<big_int>( floor_of( *upper ) ) : std::nullopt;
  }
};

/*! \brief Evaluates every bound that applies to (n, k, s, family).

  For the majority families the lower bound is taken for in-degree K
  (2k+1 or 2k); for MTBI it is the 2k-in MTBI bound.
*/
inline bounds_report evaluate_bounds( std::size_t n, std::size_t k, std::size_t s, bound_family family )
{
  detail::require( k >= 1 && s >= 1 && n >= 1, errc::invalid_argument, "need n, k, s >= 1" );
  bounds_report r{ n, k, s, family, std::nullopt, std::nullopt };
  switch ( family )
  {
  case bound_family::majority_odd:
    if ( n >= 2 * k + 1 )
      r.lower = majority_lower_bound( n, 2 * k + 1, s );
    break;
  case bound_family::majority_even:
    if ( 2 * k >= 3 && n >= 2 * k )
      r.lower = majority_lower_bound( n, 2 * k, s );
    break;
  case bound_family::mtbi:
    if ( k >= 2 && n >= 2 * k )
      r.lower = mtbi_lower_bound( n, k, s );
    break;
  }
  if ( n >= ( family == bound_family::majority_odd ? 2 * k + 1 : 2 * k ) )
    r.upper = general_upper_bound( n, k, family );
  return r;
}

} // namespace bnctl
