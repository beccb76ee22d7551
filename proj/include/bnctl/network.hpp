/*!
  \file network.hpp
  \brief Boolean networks with typed update rules and XOR-additive control

  A network has n nodes x_1..x_n; node i is updated synchronously by its
  rule f_i applied to an ordered list of distinct input nodes. Under a
  control-node set U and control vector u, the next state of node i is
  u_i XOR f_i(x) for i in U and f_i(x) otherwise.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gf2.hpp"

namespace bnctl
{

enum class rule_kind
{
  xor_,
  majority,
  mtbi,
  phi_k,
  int_threshold,
  truth_table
};

inline char const* to_string( rule_kind k )
{
  switch ( k )
  {
  case rule_kind::xor_:
    return "xor";
  case rule_kind::majority:
    return "majority";
  case rule_kind::mtbi:
    return "mtbi";
  case rule_kind::phi_k:
    return "phi";
  case rule_kind::int_threshold:
    return "threshold";
  case rule_kind::truth_table:
    return "table";
  }
  return "?";
}

inline std::optional<rule_kind> rule_kind_from_string( std::string const& s )
{
  for ( auto k : { rule_kind::xor_, rule_kind::majority, rule_kind::mtbi, rule_kind::phi_k, rule_kind::int_threshold,
                   rule_kind::truth_table } )
    if ( s == to_string( k ) )
      return k;
  return std::nullopt;
}

/*! \brief Update rule of a single node.

  For `mtbi` the first input is the tie-breaker, for `phi_k` the first input
  is the key input. An `xor_` rule with no inputs is the constant 0.
  Truth tables are indexed by sum_j v_j 2^(j-1), so the first input is the
  least significant bit.
*/
struct node_rule
{
  rule_kind kind = rule_kind::xor_;
  std::vector<node_index> inputs;
  std::vector<std::int64_t> coefficients; ///< int_threshold only
  std::int64_t threshold = 0;             ///< int_threshold only
  std::vector<bool> table;                ///< truth_table only

  static node_rule xor_of( std::vector<node_index> in ) { return { rule_kind::xor_, std::move( in ), {}, 0, {} }; }
  static node_rule majority( std::vector<node_index> in ) { return { rule_kind::majority, std::move( in ), {}, 0, {} }; }
  static node_rule mtbi( std::vector<node_index> in ) { return { rule_kind::mtbi, std::move( in ), {}, 0, {} }; }
  static node_rule phi( std::vector<node_index> in ) { return { rule_kind::phi_k, std::move( in ), {}, 0, {} }; }

  static node_rule int_threshold( std::vector<node_index> in, std::vector<std::int64_t> coeffs, std::int64_t b )
  {
    return { rule_kind::int_threshold, std::move( in ), std::move( coeffs ), b, {} };
  }

  static node_rule truth_table( std::vector<node_index> in, std::vector<bool> tt )
  {
    return { rule_kind::truth_table, std::move( in ), {}, 0, std::move( tt ) };
  }

  std::size_t arity() const noexcept { return inputs.size(); }

  /// Throws bn_error if the rule is structurally invalid for an n-node network.
  void validate( std::size_t n ) const
  {
    for ( auto i : inputs )
      detail::require( i >= 1 && i <= n, errc::invalid_argument,
                       "rule input " + std::to_string( i ) + " outside 1.." + std::to_string( n ) );
    auto sorted = inputs;
    std::sort( sorted.begin(), sorted.end() );
    detail::require( std::adjacent_find( sorted.begin(), sorted.end() ) == sorted.end(), errc::invalid_argument,
                     "rule inputs must be pairwise distinct" );

    switch ( kind )
    {
    case rule_kind::xor_:
      break;
    case rule_kind::majority:
      detail::require( arity() >= 1, errc::invalid_argument, "majority rule needs at least one input" );
      break;
    case rule_kind::mtbi:
      detail::require( arity() >= 2 && arity() % 2 == 0, errc::invalid_argument,
                       "mtbi rule needs an even, positive number of inputs" );
      break;
    case rule_kind::phi_k:
      detail::require( arity() >= 1, errc::invalid_argument, "phi rule needs at least one input" );
      break;
    case rule_kind::int_threshold:
      detail::require( coefficients.size() == arity(), errc::invalid_argument,
                       "threshold rule needs one coefficient per input" );
      break;
    case rule_kind::truth_table:
      detail::require( arity() < 24, errc::invalid_argument, "truth table arity too large" );
      detail::require( table.size() == ( std::size_t{ 1 } << arity() ), errc::invalid_argument,
                       "truth table needs 2^arity entries" );
      break;
    }
  }

  /// Evaluates the rule on an already projected input tuple (one bit per input, in order).
  bool eval_tuple( std::vector<bool> const& v ) const
  {
    detail::require( v.size() == arity(), errc::dimension_mismatch, "input tuple length differs from arity" );
    std::size_t ones = std::count( v.begin(), v.end(), true );
    switch ( kind )
    {
    case rule_kind::xor_:
      return ones & 1u;
    case rule_kind::majority:
      return 2 * ones >= arity();
    case rule_kind::mtbi:
    {
      auto const k = arity() / 2;
      if ( ones >= k + 1 )
        return true;
      if ( ones == k )
        return v[0];
      return false;
    }
    case rule_kind::phi_k:
    {
      // (k-2) x_1 - x_2 - ... - x_k >= 0
      auto const k = static_cast<std::int64_t>( arity() );
      std::int64_t const rest = static_cast<std::int64_t>( ones ) - ( v[0] ? 1 : 0 );
      return ( k - 2 ) * ( v[0] ? 1 : 0 ) - rest >= 0;
    }
    case rule_kind::int_threshold:
    {
      std::int64_t acc = 0;
      for ( std::size_t j = 0; j < v.size(); ++j )
        if ( v[j] )
          acc += coefficients[j];
      return acc >= threshold;
    }
    case rule_kind::truth_table:
    {
      std::size_t idx = 0;
      for ( std::size_t j = 0; j < v.size(); ++j )
        if ( v[j] )
          idx |= std::size_t{ 1 } << j;
      return table[idx];
    }
    }
    detail::fail( errc::internal, "unknown rule kind" );
  }

  friend bool operator==( node_rule const&, node_rule const& ) = default;
};

inline bool eval_rule( node_rule const& rule, gf2_vector const& state )
{
  std::vector<bool> v( rule.arity() );
  for ( std::size_t j = 0; j < v.size(); ++j )
  {
    detail::require( rule.inputs[j] >= 1 && rule.inputs[j] <= state.size(), errc::dimension_mismatch,
                     "rule input " + std::to_string( rule.inputs[j] ) + " outside state of length " +
                         std::to_string( state.size() ) );
    v[j] = state.get( rule.inputs[j] );
  }
  return rule.eval_tuple( v );
}

/*! \brief Sorted, duplicate-free set of control nodes. */
class control_node_set
{
public:
  control_node_set() = default;

  explicit control_node_set( std::vector<node_index> members ) : members_( std::move( members ) )
  {
    std::sort( members_.begin(), members_.end() );
    detail::require( std::adjacent_find( members_.begin(), members_.end() ) == members_.end(),
                     errc::invalid_argument, "control set contains duplicate nodes" );
    detail::require( members_.empty() || members_.front() >= 1, errc::invalid_argument,
                     "control nodes are numbered from 1" );
  }

  control_node_set( std::initializer_list<node_index> members ) : control_node_set( std::vector<node_index>( members ) ) {}

  static control_node_set all( std::size_t n )
  {
    std::vector<node_index> m( n );
    for ( std::size_t i = 0; i < n; ++i )
      m[i] = i + 1;
    return control_node_set( std::move( m ) );
  }

  static control_node_set from_mask( gf2_vector const& mask )
  {
    std::vector<node_index> m;
    for ( std::size_t i = 1; i <= mask.size(); ++i )
      if ( mask.get( i ) )
        m.push_back( i );
    return control_node_set( std::move( m ) );
  }

  std::vector<node_index> const& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains( node_index i ) const { return std::binary_search( members_.begin(), members_.end(), i ); }

  void validate( std::size_t n ) const
  {
    detail::require( members_.empty() || members_.back() <= n, errc::invalid_argument,
                     "control node " + ( members_.empty() ? std::string() : std::to_string( members_.back() ) ) +
                         " outside 1.." + std::to_string( n ) );
  }

  gf2_vector mask( std::size_t n ) const
  {
    validate( n );
    gf2_vector m( n );
    for ( auto i : members_ )
      m.set( i, true );
    return m;
  }

  /// "x2,x5" style listing.
  std::string to_string() const
  {
    std::string s;
    for ( auto i : members_ )
    {
      if ( !s.empty() )
        s += ',';
      s += 'x' + std::to_string( i );
    }
    return s;
  }

  friend bool operator==( control_node_set const&, control_node_set const& ) = default;

private:
  std::vector<node_index> members_;
};

/*! \brief Control signals u(0), u(1), ...; applying all of them takes `steps()` updates. */
struct control_scheme
{
  std::vector<gf2_vector> signals;

  std::size_t steps() const noexcept { return signals.size(); }

  friend bool operator==( control_scheme const&, control_scheme const& ) = default;
};

struct degree_profile
{
  std::vector<std::size_t> in_degree;  ///< indexed 0..n-1 for node 1..n
  std::vector<std::size_t> out_degree;
  std::vector<std::size_t> self_loops;

  std::size_t total_self_loops() const
  {
    std::size_t s = 0;
    for ( auto c : self_loops )
      s += c;
    return s;
  }

  bool is_regular( std::size_t k ) const
  {
    return std::all_of( in_degree.begin(), in_degree.end(), [k]( auto d ) { return d == k; } ) &&
           std::all_of( out_degree.begin(), out_degree.end(), [k]( auto d ) { return d == k; } );
  }

  /// The common degree if every in- and out-degree agrees.
  std::optional<std::size_t> regular_degree() const
  {
    if ( in_degree.empty() )
      return std::nullopt;
    auto const k = in_degree.front();
    return is_regular( k ) ? std::optional<std::size_t>( k ) : std::nullopt;
  }
};

class boolean_network
{
public:
  boolean_network() = default;

  explicit boolean_network( std::vector<node_rule> rules ) : rules_( std::move( rules ) )
  {
    detail::require( !rules_.empty(), errc::invalid_argument, "a network needs at least one node" );
    for ( auto const& r : rules_ )
      r.validate( rules_.size() );
  }

  /// All-XOR network whose row i lists the inputs of node i.
  static boolean_network from_matrix( gf2_matrix const& a )
  {
    detail::require( a.is_square(), errc::dimension_mismatch, "XOR networks need a square matrix" );
    std::vector<node_rule> rules;
    for ( std::size_t i = 1; i <= a.rows(); ++i )
    {
      std::vector<node_index> in;
      for ( std::size_t j = 1; j <= a.cols(); ++j )
        if ( a.get( i, j ) )
          in.push_back( j );
      rules.push_back( node_rule::xor_of( std::move( in ) ) );
    }
    return boolean_network( std::move( rules ) );
  }

  std::size_t size() const noexcept { return rules_.size(); }
  std::vector<node_rule> const& rules() const noexcept { return rules_; }
  node_rule const& rule( node_index i ) const
  {
    detail::require( i >= 1 && i <= size(), errc::invalid_argument, "node index out of range" );
    return rules_[i - 1];
  }

  bool is_all( rule_kind k ) const
  {
    return std::all_of( rules_.begin(), rules_.end(), [k]( auto const& r ) { return r.kind == k; } );
  }

  /// F(state).
  gf2_vector step( gf2_vector const& state ) const
  {
    check_state( state, "state" );
    gf2_vector next( size() );
    for ( std::size_t i = 0; i < size(); ++i )
      if ( eval_rule( rules_[i], state ) )
        next.set( i + 1, true );
    return next;
  }

  gf2_vector controlled_step( control_node_set const& u_set, gf2_vector const& state, gf2_vector const& u ) const
  {
    check_state( u, "control vector" );
    auto const off = u & ~u_set.mask( size() );
    detail::require( off.is_zero(), errc::invalid_argument,
                     "control vector is nonzero at node x" + std::to_string( off.lowest_set() ) +
                         " which is not a control node" );
    return step( state ) ^ u;
  }

  /*! \brief Control vector that overwrites selected control nodes.

    Each (i, bit) in `desired` must name a node of U; the returned u satisfies
    u_i = bit XOR f_i(state) there and is zero elsewhere, so unassigned
    control nodes keep f_i(state).
  */
  gf2_vector control_for_target( control_node_set const& u_set, gf2_vector const& state,
                                 std::vector<std::pair<node_index, bool>> const& desired ) const
  {
    check_state( state, "state" );
    u_set.validate( size() );
    gf2_vector u( size() );
    for ( auto const& [i, bit] : desired )
    {
      detail::require( u_set.contains( i ), errc::invalid_argument,
                       "cannot assign node x" + std::to_string( i ) + " which is not a control node" );
      u.set( i, bit != eval_rule( rules_[i - 1], state ) );
    }
    return u;
  }

  degree_profile degrees() const
  {
    degree_profile p;
    p.in_degree.assign( size(), 0 );
    p.out_degree.assign( size(), 0 );
    p.self_loops.assign( size(), 0 );
    for ( std::size_t i = 0; i < size(); ++i )
    {
      p.in_degree[i] = rules_[i].arity();
      for ( auto j : rules_[i].inputs )
      {
        ++p.out_degree[j - 1];
        if ( j == i + 1 )
          ++p.self_loops[i];
      }
    }
    return p;
  }

  /// Γ⁻(i): the inputs of node i as a sorted list.
  std::vector<node_index> in_neighbours( node_index i ) const
  {
    auto in = rule( i ).inputs;
    std::sort( in.begin(), in.end() );
    return in;
  }

  gf2_matrix xor_matrix() const
  {
    gf2_matrix a( size(), size() );
    for ( std::size_t i = 0; i < size(); ++i )
    {
      detail::require( rules_[i].kind == rule_kind::xor_, errc::invalid_argument,
                       "node x" + std::to_string( i + 1 ) + " is not an XOR rule; no matrix view exists" );
      for ( auto j : rules_[i].inputs )
        a.set( i + 1, j, true );
    }
    return a;
  }

  friend bool operator==( boolean_network const&, boolean_network const& ) = default;

private:
  void check_state( gf2_vector const& v, char const* what ) const
  {
    if ( v.size() != size() )
      detail::fail( errc::dimension_mismatch, std::string( what ) + " has length " + std::to_string( v.size() ) +
                                                  " but the network has " + std::to_string( size() ) + " nodes" );
  }

  std::vector<node_rule> rules_;
};

inline gf2_vector step( boolean_network const& bn, gf2_vector const& s ) { return bn.step( s ); }
inline gf2_matrix xor_matrix( boolean_network const& bn ) { return bn.xor_matrix(); }
inline degree_profile degrees( boolean_network const& bn ) { return bn.degrees(); }

/*! \brief States x(0..T) and images F(x(0..T)) of a controlled run. */
struct trajectory
{
  std::vector<gf2_vector> states;
  std::vector<gf2_vector> images;

  gf2_vector const& final_state() const { return states.back(); }
};

inline trajectory simulate( boolean_network const& bn, control_node_set const& u_set, gf2_vector const& a,
                            control_scheme const& scheme )
{
  trajectory tr;
  tr.states.push_back( a );
  tr.images.push_back( bn.step( a ) );
  for ( auto const& u : scheme.signals )
  {
    tr.states.push_back( bn.controlled_step( u_set, tr.states.back(), u ) );
    tr.images.push_back( bn.step( tr.states.back() ) );
  }
  return tr;
}

/// True iff applying the whole scheme from a ends exactly in b.
inline bool verify_scheme( boolean_network const& bn, control_node_set const& u_set, gf2_vector const& a,
                           gf2_vector const& b, control_scheme const& scheme )
{
  return simulate( bn, u_set, a, scheme ).final_state() == b;
}

} // namespace bnctl
