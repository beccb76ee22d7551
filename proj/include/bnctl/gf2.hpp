/*!
  \file gf2.hpp
  \brief Bit-packed linear algebra over the two-element field

  Vectors and matrices pack 64 coordinates per machine word. All public
  indices are 1-based so that coordinate i corresponds to node x_i; the
  packing is an implementation detail.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace bnctl
{

using node_index = std::size_t;

class gf2_vector
{
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  gf2_vector() = default;
  explicit gf2_vector( std::size_t len ) : len_( len ), words_( ( len + word_bits - 1 ) / word_bits, 0u ) {}

  /// Standard unit vector e_i of length `len`.
  static gf2_vector unit( std::size_t len, node_index i )
  {
    gf2_vector v( len );
    v.set( i, true );
    return v;
  }

  static gf2_vector ones( std::size_t len )
  {
    gf2_vector v( len );
    for ( auto& w : v.words_ )
      w = ~word_type{ 0 };
    v.trim();
    return v;
  }

  /// Parses "0110" with x_1 leftmost.
  static gf2_vector from_string( std::string_view bits )
  {
    gf2_vector v( bits.size() );
    for ( std::size_t i = 0; i < bits.size(); ++i )
    {
      if ( bits[i] == '1' )
        v.set( i + 1, true );
      else
        detail::require( bits[i] == '0', errc::invalid_argument,
                         "bitstring may only contain '0' and '1', got '" + std::string( bits ) + "'" );
    }
    return v;
  }

  static gf2_vector from_bits( std::span<const bool> bits )
  {
    gf2_vector v( bits.size() );
    for ( std::size_t i = 0; i < bits.size(); ++i )
      v.set( i + 1, bits[i] );
    return v;
  }

  static gf2_vector from_bits( std::initializer_list<int> bits )
  {
    gf2_vector v( bits.size() );
    std::size_t i = 1;
    for ( auto b : bits )
      v.set( i++, b != 0 );
    return v;
  }

  /// Packs the low `len` bits of `index`; bit (i-1) becomes coordinate i. Requires len <= 64.
  static gf2_vector from_index( std::size_t len, std::uint64_t index )
  {
    detail::require( len <= word_bits, errc::invalid_argument, "from_index supports at most 64 coordinates" );
    gf2_vector v( len );
    if ( len > 0 )
    {
      v.words_[0] = index;
      v.trim();
    }
    return v;
  }

  std::uint64_t to_index() const
  {
    detail::require( len_ <= word_bits, errc::invalid_argument, "to_index supports at most 64 coordinates" );
    return words_.empty() ? 0u : words_[0];
  }

  std::size_t size() const noexcept { return len_; }

  bool get( node_index i ) const
  {
    check_index( i );
    return ( words_[( i - 1 ) / word_bits] >> ( ( i - 1 ) % word_bits ) ) & 1u;
  }

  void set( node_index i, bool value )
  {
    check_index( i );
    auto const mask = word_type{ 1 } << ( ( i - 1 ) % word_bits );
    auto& w = words_[( i - 1 ) / word_bits];
    w = value ? ( w | mask ) : ( w & ~mask );
  }

  void flip( node_index i )
  {
    check_index( i );
    words_[( i - 1 ) / word_bits] ^= word_type{ 1 } << ( ( i - 1 ) % word_bits );
  }

  bool is_zero() const noexcept
  {
    return std::all_of( words_.begin(), words_.end(), []( auto w ) { return w == 0u; } );
  }

  std::size_t popcount() const noexcept
  {
    std::size_t c = 0;
    for ( auto w : words_ )
      c += std::popcount( w );
    return c;
  }

  /// Smallest 1-based index holding a one, or 0 for the zero vector.
  node_index lowest_set() const noexcept
  {
    for ( std::size_t w = 0; w < words_.size(); ++w )
      if ( words_[w] != 0u )
        return w * word_bits + std::countr_zero( words_[w] ) + 1;
    return 0;
  }

  /// Parity of the coordinate-wise product, i.e. the dot product over F_2.
  bool dot( gf2_vector const& other ) const
  {
    check_same_length( other );
    word_type acc = 0;
    for ( std::size_t w = 0; w < words_.size(); ++w )
      acc ^= words_[w] & other.words_[w];
    return std::popcount( acc ) & 1u;
  }

  gf2_vector& operator^=( gf2_vector const& other )
  {
    check_same_length( other );
    for ( std::size_t w = 0; w < words_.size(); ++w )
      words_[w] ^= other.words_[w];
    return *this;
  }

  gf2_vector& operator&=( gf2_vector const& other )
  {
    check_same_length( other );
    for ( std::size_t w = 0; w < words_.size(); ++w )
      words_[w] &= other.words_[w];
    return *this;
  }

  friend gf2_vector operator^( gf2_vector lhs, gf2_vector const& rhs ) { return lhs ^= rhs; }
  friend gf2_vector operator+( gf2_vector lhs, gf2_vector const& rhs ) { return lhs ^= rhs; }
  friend gf2_vector operator&( gf2_vector lhs, gf2_vector const& rhs ) { return lhs &= rhs; }

  gf2_vector operator~() const
  {
    auto r = *this;
    for ( auto& w : r.words_ )
      w = ~w;
    r.trim();
    return r;
  }

  friend bool operator==( gf2_vector const&, gf2_vector const& ) = default;

  std::span<const word_type> words() const noexcept { return words_; }

  /// Coordinates [first, first+count) as a new vector (1-based `first`).
  gf2_vector slice( node_index first, std::size_t count ) const
  {
    detail::require( first >= 1 && first - 1 + count <= len_, errc::dimension_mismatch, "slice out of range" );
    gf2_vector r( count );
    for ( std::size_t j = 0; j < count; ++j )
      r.set( j + 1, get( first + j ) );
    return r;
  }

  /// Concatenation (this, other).
  gf2_vector concat( gf2_vector const& other ) const
  {
    gf2_vector r( len_ + other.len_ );
    for ( std::size_t i = 1; i <= len_; ++i )
      r.set( i, get( i ) );
    for ( std::size_t i = 1; i <= other.len_; ++i )
      r.set( len_ + i, other.get( i ) );
    return r;
  }

  std::string to_string() const
  {
    std::string s( len_, '0' );
    for ( std::size_t i = 1; i <= len_; ++i )
      if ( get( i ) )
        s[i - 1] = '1';
    return s;
  }

private:
  void trim() noexcept
  {
    if ( auto const rem = len_ % word_bits; rem != 0 && !words_.empty() )
      words_.back() &= ( word_type{ 1 } << rem ) - 1u;
  }

  void check_index( node_index i ) const
  {
    if ( i < 1 || i > len_ )
      detail::fail( errc::dimension_mismatch,
                    "coordinate " + std::to_string( i ) + " outside 1.." + std::to_string( len_ ) );
  }

  void check_same_length( gf2_vector const& other ) const
  {
    if ( other.len_ != len_ )
      detail::fail( errc::dimension_mismatch, "vector lengths differ: " + std::to_string( len_ ) + " vs " +
                                                  std::to_string( other.len_ ) );
  }

  std::size_t len_ = 0;
  std::vector<word_type> words_;
};

inline std::ostream& operator<<( std::ostream& os, gf2_vector const& v ) { return os << v.to_string(); }

/*! \brief Dense row-major matrix over F_2. */
class gf2_matrix
{
public:
  gf2_matrix() = default;
  gf2_matrix( std::size_t rows, std::size_t cols ) : cols_( cols ), rows_( rows, gf2_vector( cols ) ) {}

  static gf2_matrix identity( std::size_t n )
  {
    gf2_matrix m( n, n );
    for ( std::size_t i = 1; i <= n; ++i )
      m.set( i, i, true );
    return m;
  }

  static gf2_matrix from_rows( std::vector<gf2_vector> rows )
  {
    detail::require( !rows.empty(), errc::invalid_argument, "matrix needs at least one row" );
    gf2_matrix m;
    m.cols_ = rows.front().size();
    for ( auto const& r : rows )
      detail::require( r.size() == m.cols_, errc::dimension_mismatch, "ragged matrix rows" );
    m.rows_ = std::move( rows );
    return m;
  }

  static gf2_matrix from_columns( std::vector<gf2_vector> const& columns )
  {
    detail::require( !columns.empty(), errc::invalid_argument, "matrix needs at least one column" );
    gf2_matrix m( columns.front().size(), columns.size() );
    for ( std::size_t j = 1; j <= columns.size(); ++j )
    {
      detail::require( columns[j - 1].size() == m.rows(), errc::dimension_mismatch, "ragged matrix columns" );
      for ( std::size_t i = 1; i <= m.rows(); ++i )
        m.set( i, j, columns[j - 1].get( i ) );
    }
    return m;
  }

  /// Parses rows given as bitstrings, e.g. {"011", "111", "100"}.
  static gf2_matrix from_strings( std::vector<std::string> const& rows )
  {
    std::vector<gf2_vector> rs;
    rs.reserve( rows.size() );
    for ( auto const& r : rows )
      rs.push_back( gf2_vector::from_string( r ) );
    return from_rows( std::move( rs ) );
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows() == cols(); }

  bool get( std::size_t i, std::size_t j ) const { return row( i ).get( j ); }
  void set( std::size_t i, std::size_t j, bool value ) { mutable_row( i ).set( j, value ); }

  gf2_vector const& row( std::size_t i ) const
  {
    check_row( i );
    return rows_[i - 1];
  }

  gf2_vector column( std::size_t j ) const
  {
    gf2_vector c( rows() );
    for ( std::size_t i = 1; i <= rows(); ++i )
      c.set( i, get( i, j ) );
    return c;
  }

  gf2_matrix transposed() const
  {
    gf2_matrix t( cols(), rows() );
    for ( std::size_t i = 1; i <= rows(); ++i )
      for ( std::size_t j = 1; j <= cols(); ++j )
        t.set( j, i, get( i, j ) );
    return t;
  }

  gf2_matrix& operator+=( gf2_matrix const& other )
  {
    detail::require( other.rows() == rows() && other.cols() == cols(), errc::dimension_mismatch,
                     "matrix sum dimension mismatch" );
    for ( std::size_t i = 0; i < rows_.size(); ++i )
      rows_[i] ^= other.rows_[i];
    return *this;
  }

  friend gf2_matrix operator+( gf2_matrix lhs, gf2_matrix const& rhs ) { return lhs += rhs; }

  friend gf2_matrix operator*( gf2_matrix const& lhs, gf2_matrix const& rhs )
  {
    detail::require( lhs.cols() == rhs.rows(), errc::dimension_mismatch, "matrix product dimension mismatch" );
    gf2_matrix r( lhs.rows(), rhs.cols() );
    for ( std::size_t i = 1; i <= lhs.rows(); ++i )
    {
      auto& out = r.rows_[i - 1];
      auto const& lr = lhs.rows_[i - 1];
      for ( auto j = lr.lowest_set(); j != 0; )
      {
        out ^= rhs.rows_[j - 1];
        j = next_set( lr, j );
      }
    }
    return r;
  }

  friend bool operator==( gf2_matrix const&, gf2_matrix const& ) = default;

private:
  static std::size_t next_set( gf2_vector const& v, std::size_t after )
  {
    for ( auto j = after + 1; j <= v.size(); ++j )
      if ( v.get( j ) )
        return j;
    return 0;
  }

  gf2_vector& mutable_row( std::size_t i )
  {
    check_row( i );
    return rows_[i - 1];
  }

  void check_row( std::size_t i ) const
  {
    if ( i < 1 || i > rows_.size() )
      detail::fail( errc::dimension_mismatch, "row " + std::to_string( i ) + " outside 1.." +
                                                  std::to_string( rows_.size() ) );
  }

  std::size_t cols_ = 0;
  std::vector<gf2_vector> rows_;
};

/// Av over F_2.
inline gf2_vector mat_vec_mul( gf2_matrix const& a, gf2_vector const& v )
{
  detail::require( a.cols() == v.size(), errc::dimension_mismatch,
                   "matrix has " + std::to_string( a.cols() ) + " columns but vector has length " +
                       std::to_string( v.size() ) );
  gf2_vector r( a.rows() );
  for ( std::size_t i = 1; i <= a.rows(); ++i )
    if ( a.row( i ).dot( v ) )
      r.set( i, true );
  return r;
}

/// A^k v by k successive products; k may exceed the dimension.
inline gf2_vector mat_pow_vec( gf2_matrix const& a, std::size_t k, gf2_vector v )
{
  detail::require( a.is_square(), errc::dimension_mismatch, "mat_pow_vec needs a square matrix" );
  detail::require( a.cols() == v.size(), errc::dimension_mismatch, "mat_pow_vec dimension mismatch" );
  for ( std::size_t s = 0; s < k; ++s )
    v = mat_vec_mul( a, v );
  return v;
}

inline gf2_matrix mat_pow( gf2_matrix const& a, std::size_t k )
{
  detail::require( a.is_square(), errc::dimension_mismatch, "mat_pow needs a square matrix" );
  auto result = gf2_matrix::identity( a.rows() );
  auto base = a;
  while ( k > 0 )
  {
    if ( k & 1u )
      result = result * base;
    base = base * base;
    k >>= 1u;
  }
  return result;
}

/*! \brief Incrementally maintained reduced row-echelon spanning set.

  Reduced vectors are kept sorted by pivot column (the lowest set coordinate)
  and every reduced vector is zero in all other pivot columns, so reducing a
  query vector takes a single pass. The raw inserted vectors are kept in
  insertion order when `keep_originals` is set.
*/
class echelon_basis
{
public:
  struct pivot_row
  {
    node_index column;
    gf2_vector vector;
  };

  explicit echelon_basis( std::size_t dim_ambient, bool keep_originals = true )
      : dim_( dim_ambient ), keep_originals_( keep_originals ) {}

  std::size_t dim_ambient() const noexcept { return dim_; }
  std::size_t size() const noexcept { return pivots_.size(); }
  bool is_full() const noexcept { return pivots_.size() == dim_; }

  std::vector<pivot_row> const& pivots() const noexcept { return pivots_; }
  std::vector<gf2_vector> const& originals() const noexcept { return originals_; }

  /// Reduces `v` against the current basis; the result is zero iff v is in the span.
  gf2_vector reduce( gf2_vector v ) const
  {
    check( v );
    for ( auto const& p : pivots_ )
      if ( v.get( p.column ) )
        v ^= p.vector;
    return v;
  }

  bool contains( gf2_vector const& v ) const { return reduce( v ).is_zero(); }

  /// Adds v if it is independent of the current span; returns whether it was added.
  bool insert( gf2_vector const& v )
  {
    auto r = reduce( v );
    if ( r.is_zero() )
      return false;

    auto const col = r.lowest_set();
    for ( auto& p : pivots_ )
      if ( p.vector.get( col ) )
        p.vector ^= r;

    auto pos = std::lower_bound( pivots_.begin(), pivots_.end(), col,
                                 []( pivot_row const& p, node_index c ) { return p.column < c; } );
    pivots_.insert( pos, pivot_row{ col, std::move( r ) } );
    if ( keep_originals_ )
      originals_.push_back( v );
    return true;
  }

private:
  void check( gf2_vector const& v ) const
  {
    if ( v.size() != dim_ )
      detail::fail( errc::dimension_mismatch, "basis lives in dimension " + std::to_string( dim_ ) +
                                                  " but vector has length " + std::to_string( v.size() ) );
  }

  std::size_t dim_;
  bool keep_originals_;
  std::vector<pivot_row> pivots_;
  std::vector<gf2_vector> originals_;
};

inline bool echelon_insert( echelon_basis& basis, gf2_vector const& v ) { return basis.insert( v ); }
inline bool span_contains( echelon_basis const& basis, gf2_vector const& v ) { return basis.contains( v ); }

inline std::size_t rank_of( std::vector<gf2_vector> const& vectors )
{
  if ( vectors.empty() )
    return 0;
  echelon_basis b( vectors.front().size(), false );
  for ( auto const& v : vectors )
    b.insert( v );
  return b.size();
}

/*! \brief Finds c with sum_j c_j * columns[j] = b.

  Returns std::nullopt when b lies outside the column span. When the columns
  are independent the solution is unique; otherwise free coefficients are 0.
*/
inline std::optional<std::vector<bool>> solve_coeffs( std::vector<gf2_vector> const& columns, gf2_vector const& b )
{
  auto const m = columns.size();
  for ( auto const& c : columns )
    detail::require( c.size() == b.size(), errc::dimension_mismatch, "solve_coeffs: column length differs from b" );

  // Each reduced row carries the combination of input columns that produced it.
  struct tracked
  {
    node_index column;
    gf2_vector value;
    gf2_vector combo;
  };
  std::vector<tracked> rows;
  for ( std::size_t j = 0; j < m; ++j )
  {
    auto value = columns[j];
    auto combo = gf2_vector::unit( m, j + 1 );
    for ( auto const& r : rows )
      if ( value.get( r.column ) )
      {
        value ^= r.value;
        combo ^= r.combo;
      }
    if ( value.is_zero() )
      continue;
    auto const col = value.lowest_set();
    for ( auto& r : rows )
      if ( r.value.get( col ) )
      {
        r.value ^= value;
        r.combo ^= combo;
      }
    rows.push_back( { col, std::move( value ), std::move( combo ) } );
  }

  auto residual = b;
  gf2_vector coeffs( m );
  for ( auto const& r : rows )
    if ( residual.get( r.column ) )
    {
      residual ^= r.value;
      coeffs ^= r.combo;
    }
  if ( !residual.is_zero() )
    return std::nullopt;

  std::vector<bool> out( m );
  for ( std::size_t j = 0; j < m; ++j )
    out[j] = coeffs.get( j + 1 );
  return out;
}

/// True iff the n given length-n vectors are independent (determinant 1 over F_2).
inline bool is_full_rank( std::vector<gf2_vector> const& columns )
{
  detail::require( !columns.empty(), errc::invalid_argument, "is_full_rank needs at least one vector" );
  auto const n = columns.front().size();
  detail::require( columns.size() == n, errc::dimension_mismatch,
                   "is_full_rank needs exactly n vectors of length n (got " + std::to_string( columns.size() ) +
                       " of length " + std::to_string( n ) + ")" );
  return rank_of( columns ) == n;
}

} // namespace bnctl
