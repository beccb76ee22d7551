/*!
  \file io.hpp
  \brief JSON network and scheme files

  Network file:

      {
        "format": "bnctl-network", "version": 1, "n": 3,
        "rules": [ {"kind": "xor", "inputs": [2, 3]}, ... ],
        "control_set": [2],                  (optional)
        "metadata": {"family": "phi", ...}   (optional)
      }

  Rule kinds: xor, majority, mtbi, phi, threshold (with "coefficients" and
  "threshold"), table (with "table", a bitstring of 2^arity outputs where
  character i is the output for input index i, first input least
  significant). Input order is kept as written.

  Scheme file:

      { "format": "bnctl-scheme", "version": 1, "n": 3,
        "control_set": [2], "signals": ["010", "000", "010"] }

  Canonical form is the two-space indented dump with keys sorted.
*/

#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "gf2.hpp"
#include "network.hpp"

namespace bnctl
{

using json = nlohmann::json;

inline constexpr int network_format_version = 1;
inline constexpr int scheme_format_version = 1;

struct network_file
{
  boolean_network bn;
  std::optional<control_node_set> control;
  json metadata = json::object();
};

struct scheme_file
{
  std::size_t n = 0;
  control_node_set control;
  control_scheme scheme;
};

namespace detail
{

[[noreturn]] inline void malformed( std::string const& what ) { fail( errc::malformed_input, what ); }

inline json const& field( json const& j, char const* key, char const* where )
{
  if ( !j.is_object() || !j.contains( key ) )
    malformed( std::string( where ) + ": missing field \"" + key + "\"" );
  return j.at( key );
}

inline std::size_t positive_index( json const& v, char const* where )
{
  if ( !v.is_number_integer() || v.get<std::int64_t>() < 1 )
    malformed( std::string( where ) + ": expected a positive integer, got " + v.dump() );
  return v.get<std::size_t>();
}

inline std::vector<node_index> index_list( json const& v, char const* where )
{
  if ( !v.is_array() )
    malformed( std::string( where ) + ": expected an array" );
  std::vector<node_index> out;
  for ( auto const& e : v )
    out.push_back( positive_index( e, where ) );
  return out;
}

inline void check_header( json const& j, char const* format, int version )
{
  auto const& f = field( j, "format", "file" );
  if ( !f.is_string() || f.get<std::string>() != format )
    malformed( std::string( "expected \"format\": \"" ) + format + "\"" );
  auto const& v = field( j, "version", "file" );
  if ( !v.is_number_integer() || v.get<int>() != version )
    malformed( "unsupported version " + v.dump() );
}

inline json parse_text( std::string const& text )
{
  try
  {
    return json::parse( text );
  }
  catch ( json::parse_error const& e )
  {
    malformed( std::string( "invalid JSON: " ) + e.what() );
  }
}

inline std::string read_file( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    fail( errc::malformed_input, "cannot open " + path );
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace detail

inline json rule_to_json( node_rule const& r )
{
  json j;
  j["kind"] = to_string( r.kind );
  j["inputs"] = r.inputs;
  if ( r.kind == rule_kind::int_threshold )
  {
    j["coefficients"] = r.coefficients;
    j["threshold"] = r.threshold;
  }
  if ( r.kind == rule_kind::truth_table )
  {
    std::string s;
    for ( bool bit : r.table )
      s += bit ? '1' : '0';
    j["table"] = s;
  }
  return j;
}

inline node_rule rule_from_json( json const& j )
{
  auto const& kind = detail::field( j, "kind", "rule" );
  if ( !kind.is_string() )
    detail::malformed( "rule: \"kind\" must be a string" );
  auto const k = rule_kind_from_string( kind.get<std::string>() );
  if ( !k )
    detail::malformed( "rule: unknown kind \"" + kind.get<std::string>() + "\"" );

  node_rule r;
  r.kind = *k;
  r.inputs = detail::index_list( detail::field( j, "inputs", "rule" ), "rule inputs" );
  if ( r.kind == rule_kind::int_threshold )
  {
    auto const& c = detail::field( j, "coefficients", "threshold rule" );
    auto const& b = detail::field( j, "threshold", "threshold rule" );
    if ( !c.is_array() || !b.is_number_integer() )
      detail::malformed( "threshold rule: coefficients must be an integer array and threshold an integer" );
    for ( auto const& e : c )
    {
      if ( !e.is_number_integer() )
        detail::malformed( "threshold rule: non-integer coefficient " + e.dump() );
      r.coefficients.push_back( e.get<std::int64_t>() );
    }
    r.threshold = b.get<std::int64_t>();
  }
  if ( r.kind == rule_kind::truth_table )
  {
    auto const& t = detail::field( j, "table", "table rule" );
    if ( !t.is_string() )
      detail::malformed( "table rule: \"table\" must be a bitstring" );
    for ( char ch : t.get<std::string>() )
    {
      if ( ch != '0' && ch != '1' )
        detail::malformed( "table rule: \"table\" must contain only 0 and 1" );
      r.table.push_back( ch == '1' );
    }
  }
  return r;
}

inline json network_to_json( network_file const& f )
{
  json j;
  j["format"] = "bnctl-network";
  j["version"] = network_format_version;
  j["n"] = f.bn.size();
  j["rules"] = json::array();
  for ( auto const& r : f.bn.rules() )
    j["rules"].push_back( rule_to_json( r ) );
  if ( f.control )
    j["control_set"] = f.control->members();
  if ( !f.metadata.empty() )
    j["metadata"] = f.metadata;
  return j;
}

inline network_file network_from_json( json const& j )
{
  detail::check_header( j, "bnctl-network", network_format_version );
  auto const n = detail::positive_index( detail::field( j, "n", "network" ), "network n" );
  auto const& rules = detail::field( j, "rules", "network" );
  if ( !rules.is_array() )
    detail::malformed( "network: \"rules\" must be an array" );
  if ( rules.size() != n )
    detail::fail( errc::dimension_mismatch, "network declares n = " + std::to_string( n ) + " but lists " +
                                                std::to_string( rules.size() ) + " rules" );

  std::vector<node_rule> rs;
  for ( auto const& r : rules )
    rs.push_back( rule_from_json( r ) );

  network_file f;
  try
  {
    f.bn = boolean_network( std::move( rs ) );
  }
  catch ( bn_error const& e )
  {
    detail::malformed( std::string( "network: " ) + e.what() );
  }
  if ( j.contains( "control_set" ) )
  {
    control_node_set u( detail::index_list( j.at( "control_set" ), "control_set" ) );
    u.validate( n );
    f.control = std::move( u );
  }
  if ( j.contains( "metadata" ) )
  {
    if ( !j.at( "metadata" ).is_object() )
      detail::malformed( "network: \"metadata\" must be an object" );
    f.metadata = j.at( "metadata" );
  }
  return f;
}

inline std::string dump_canonical( json const& j ) { return j.dump( 2 ) + "\n"; }

inline std::string network_to_string( network_file const& f ) { return dump_canonical( network_to_json( f ) ); }
inline network_file network_from_string( std::string const& s ) { return network_from_json( detail::parse_text( s ) ); }
inline network_file load_network( std::string const& path ) { return network_from_string( detail::read_file( path ) ); }

inline json scheme_to_json( scheme_file const& f )
{
  json j;
  j["format"] = "bnctl-scheme";
  j["version"] = scheme_format_version;
  j["n"] = f.n;
  j["control_set"] = f.control.members();
  j["signals"] = json::array();
  for ( auto const& u : f.scheme.signals )
    j["signals"].push_back( u.to_string() );
  return j;
}

inline scheme_file scheme_from_json( json const& j )
{
  detail::check_header( j, "bnctl-scheme", scheme_format_version );
  scheme_file f;
  f.n = detail::positive_index( detail::field( j, "n", "scheme" ), "scheme n" );
  f.control = control_node_set( detail::index_list( detail::field( j, "control_set", "scheme" ), "control_set" ) );
  f.control.validate( f.n );
  auto const& sig = detail::field( j, "signals", "scheme" );
  if ( !sig.is_array() )
    detail::malformed( "scheme: \"signals\" must be an array of bitstrings" );
  for ( auto const& s : sig )
  {
    if ( !s.is_string() )
      detail::malformed( "scheme: every signal must be a bitstring" );
    if ( s.get<std::string>().find_first_not_of( "01" ) != std::string::npos )
      detail::malformed( "scheme: signal " + s.dump() + " contains characters other than 0 and 1" );
    auto u = gf2_vector::from_string( s.get<std::string>() );
    if ( u.size() != f.n )
      detail::fail( errc::dimension_mismatch, "scheme signal \"" + s.get<std::string>() + "\" does not have length " +
                                                  std::to_string( f.n ) );
    f.scheme.signals.push_back( std::move( u ) );
  }
  return f;
}

inline std::string scheme_to_string( scheme_file const& f ) { return dump_canonical( scheme_to_json( f ) ); }
inline scheme_file scheme_from_string( std::string const& s ) { return scheme_from_json( detail::parse_text( s ) ); }
inline scheme_file load_scheme( std::string const& path ) { return scheme_from_string( detail::read_file( path ) ); }

/// Parses "x1,x3,5" (the x prefix is optional) into a control set.
inline control_node_set parse_control_list( std::string const& text )
{
  std::vector<node_index> out;
  std::stringstream ss( text );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    auto const b = item.find_first_not_of( " \t" );
    auto const e = item.find_last_not_of( " \t" );
    if ( b == std::string::npos )
      continue;
    item = item.substr( b, e - b + 1 );
    if ( item[0] == 'x' || item[0] == 'X' )
      item.erase( 0, 1 );
    detail::require( !item.empty() && item.find_first_not_of( "0123456789" ) == std::string::npos,
                     errc::invalid_argument, "bad control node \"" + item + "\"" );
    out.push_back( std::stoul( item ) );
  }
  return control_node_set( std::move( out ) );
}

/// Parses a state bitstring and checks it has length n.
inline gf2_vector parse_state( std::string const& bits, std::size_t n, char const* what )
{
  detail::require( bits.find_first_not_of( "01" ) == std::string::npos, errc::dimension_mismatch,
                   std::string( what ) + " \"" + bits + "\" is not a bitstring of 0 and 1" );
  auto v = gf2_vector::from_string( bits );
  detail::require( v.size() == n, errc::dimension_mismatch,
                   std::string( what ) + " has length " + std::to_string( v.size() ) + " but the network has " +
                       std::to_string( n ) + " nodes" );
  return v;
}

} // namespace bnctl
