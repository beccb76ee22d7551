// bnctl: generate, analyse and control Boolean networks from the command line.

#include <bnctl/bnctl.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace bnctl;

namespace
{

enum exit_code : int
{
  ok = 0,
  negative = 1,
  usage = 2,
  malformed = 3,
  dimension = 4,
  oracle_limit = 5,
  internal = 6
};

int exit_for( errc c )
{
  switch ( c )
  {
  case errc::invalid_argument:
    return usage;
  case errc::malformed_input:
    return malformed;
  case errc::dimension_mismatch:
    return dimension;
  case errc::oracle_limit:
    return exit_code::oracle_limit;
  case errc::internal:
    return internal;
  }
  return internal;
}

constexpr std::size_t auto_oracle_nodes = 14;

void emit( std::string const& text, std::string const& out )
{
  if ( out.empty() )
  {
    std::cout << text;
    return;
  }
  std::ofstream f( out );
  detail::require( static_cast<bool>( f ), errc::invalid_argument, "cannot write " + out );
  f << text;
}

std::optional<layered_family_spec> family_from_metadata( json const& meta )
{
  if ( !meta.contains( "family" ) || !meta["family"].is_string() )
    return std::nullopt;
  auto const f = layered_family_from_string( meta["family"].get<std::string>() );
  if ( !f || !meta.contains( "k" ) || !meta.contains( "m" ) || !meta["k"].is_number_unsigned() ||
       !meta["m"].is_number_unsigned() )
    return std::nullopt;
  return layered_family_spec{ *f, meta["k"].get<std::size_t>(), meta["m"].get<std::size_t>() };
}

bool is_majority_type( boolean_network const& bn )
{
  return std::all_of( bn.rules().begin(), bn.rules().end(), []( node_rule const& r ) {
    return r.kind == rule_kind::majority || r.kind == rule_kind::mtbi;
  } );
}

/// Control set from --control, else from the file.
std::optional<control_node_set> chosen_control( network_file const& nf, std::string const& flag )
{
  if ( !flag.empty() )
  {
    auto u = parse_control_list( flag );
    u.validate( nf.bn.size() );
    return u;
  }
  return nf.control;
}

// ---------------------------------------------------------------- gen

struct gen_opts
{
  std::string family;
  std::size_t k = 0, m = 0, n = 0;
  std::uint64_t seed = 1;
  double density = 0.3;
  std::string out;
};

int cmd_gen( gen_opts const& o )
{
  network_file nf{ boolean_network( { node_rule::xor_of( { 1 } ) } ), std::nullopt, json::object() };
  nf.metadata["family"] = o.family;
  auto need = [&]( bool cond, char const* what ) {
    detail::require( cond, errc::invalid_argument, "family " + o.family + " needs " + what );
  };

  if ( auto lf = layered_family_from_string( o.family ) )
  {
    need( o.k > 0 && o.m > 0, "--k and --m" );
    auto inst = gen_family( { *lf, o.k, o.m } );
    nf.bn = std::move( inst.bn );
    nf.control = std::move( inst.control );
    nf.metadata["k"] = o.k;
    nf.metadata["m"] = o.m;
  }
  else if ( o.family == "xor-window" )
  {
    need( o.n > 0 && o.k > 0, "--n and --k" );
    auto inst = gen_xor_window( o.n, o.k );
    nf.bn = std::move( inst.bn );
    nf.control = std::move( inst.control );
    nf.metadata["k"] = o.k;
  }
  else if ( o.family == "xor-circulant" )
  {
    need( o.m > 0 && o.k > 0, "--m and --k (n = 2^m)" );
    auto inst = gen_xor_circulant( o.m, o.k );
    nf.bn = std::move( inst.bn );
    nf.control = std::move( inst.control );
    nf.metadata["k"] = o.k;
    nf.metadata["m"] = o.m;
  }
  else if ( o.family == "random-majority" || o.family == "random-mtbi" )
  {
    need( o.n > 0 && o.k > 0, "--n and --k (in-degree)" );
    auto const kind = o.family == "random-mtbi" ? rule_kind::mtbi : rule_kind::majority;
    nf.bn = random_regular_network( o.n, o.k, kind, o.seed );
    nf.metadata["k"] = o.k;
    nf.metadata["seed"] = o.seed;
  }
  else if ( o.family == "random-xor" )
  {
    need( o.n > 0, "--n" );
    nf.bn = random_xor_network( o.n, o.density, o.seed );
    nf.metadata["seed"] = o.seed;
    nf.metadata["density"] = o.density;
  }
  else if ( o.family == "xor3" )
    nf.bn = example_xor3();
  else if ( o.family == "majority7" )
    nf.bn = example_majority7();
  else if ( o.family == "majority8" )
    nf.bn = example_majority8();
  else
    detail::fail( errc::invalid_argument, "unknown family " + o.family );

  emit( network_to_string( nf ), o.out );
  return ok;
}

// ---------------------------------------------------------------- check

struct check_opts
{
  std::string network, control, method = "auto";
};

int cmd_check( check_opts const& o )
{
  auto const nf = load_network( o.network );
  auto const u = chosen_control( nf, o.control );
  detail::require( u.has_value(), errc::invalid_argument, "no control set: pass --control or add control_set to the file" );
  auto const n = nf.bn.size();

  std::string method = o.method;
  if ( method == "auto" )
  {
    if ( nf.bn.is_all( rule_kind::xor_ ) )
      method = "xor-exact";
    else if ( n <= auto_oracle_nodes )
      method = "oracle";
    else
      detail::fail( errc::oracle_limit, "network has " + std::to_string( n ) +
                                            " nodes and is not all-XOR; exhaustive checking is automatic only up to " +
                                            std::to_string( auto_oracle_nodes ) +
                                            " nodes (use --method oracle for up to " +
                                            std::to_string( oracle_max_nodes ) + ")" );
  }

  bool verdict = false;
  std::cout << "control set: " << ( u->empty() ? "(empty)" : u->to_string() ) << " (" << u->size() << " nodes)\n";
  if ( method == "xor-exact" )
  {
    auto const cert = is_controllable_xor( nf.bn, *u );
    verdict = cert.controllable;
    std::cout << "method: xor-exact\nrank of W_U: " << cert.rank() << " / " << n << "\n";
  }
  else if ( method == "oracle" )
  {
    verdict = is_controllable_bruteforce( nf.bn, *u );
    std::cout << "method: oracle (" << ( std::uint64_t{ 1 } << n ) << " states)\n";
  }
  else
    detail::fail( errc::invalid_argument, "unknown method " + method );

  std::cout << ( verdict ? "controllable" : "not controllable" ) << "\n";
  return verdict ? ok : negative;
}

// ---------------------------------------------------------------- control-set

struct control_set_opts
{
  std::string network, method;
  std::size_t max_size = 0;
};

int cmd_control_set( control_set_opts const& o )
{
  auto const nf = load_network( o.network );
  auto const n = nf.bn.size();
  if ( o.method == "greedy-xor" )
  {
    auto const u = construct_control_node_set( nf.bn.xor_matrix() );
    std::cout << "U = " << u.to_string() << "\n|U| = " << u.size() << "\n";
    return ok;
  }
  if ( o.method == "greedy-majority" )
  {
    auto const ext = greedy_extraction( nf.bn );
    auto const u = control_set_from_extraction( ext, n );
    std::cout << "p = " << ext.p() << "\n|R| = " << ext.residual.size() << "\n";
    for ( std::size_t i = 0; i < ext.p(); ++i )
    {
      std::cout << "group " << i + 1 << ": {";
      for ( std::size_t j = 0; j < ext.groups[i].size(); ++j )
        std::cout << ( j ? "," : "" ) << "x" << ext.groups[i][j];
      std::cout << "} -> x" << ext.targets[i] << "\n";
    }
    std::cout << "U = " << u.to_string() << "\n|U| = " << u.size() << "\n";
    return ok;
  }
  if ( o.method == "brute-min" )
  {
    auto const best = min_control_set_bruteforce( nf.bn, o.max_size ? o.max_size : n );
    if ( !best )
    {
      std::cout << "no controllable set with at most " << ( o.max_size ? o.max_size : n ) << " nodes\n";
      return negative;
    }
    std::cout << "U = " << ( best->empty() ? "(empty)" : best->to_string() ) << "\n|U| = " << best->size() << "\n";
    return ok;
  }
  detail::fail( errc::invalid_argument, "unknown method " + o.method );
}

// ---------------------------------------------------------------- synthesize

struct synth_opts
{
  std::string network, control, from, to, method = "auto", out;
};

void print_trajectory( boolean_network const& bn, control_node_set const& u, gf2_vector const& a,
                       control_scheme const& s )
{
  auto const tr = simulate( bn, u, a, s );
  auto const label_width = std::to_string( s.steps() ).size() + 7;
  auto row = [&]( std::string const& label, gf2_vector const& v ) {
    std::cout << std::left << std::setw( static_cast<int>( label_width ) ) << label << "  " << v.to_string() << "\n";
  };
  std::cout << "trajectory:\n";
  for ( std::size_t t = 0; t < s.steps(); ++t )
  {
    row( "x(" + std::to_string( t ) + ")", tr.states[t] );
    row( "F(x(" + std::to_string( t ) + "))", tr.images[t] );
    row( "u(" + std::to_string( t ) + ")", s.signals[t] );
  }
  row( "x(" + std::to_string( s.steps() ) + ")", tr.final_state() );
}

int cmd_synthesize( synth_opts const& o )
{
  auto const nf = load_network( o.network );
  auto const& bn = nf.bn;
  auto const n = bn.size();
  auto const a = parse_state( o.from, n, "--from" );
  auto const b = parse_state( o.to, n, "--to" );
  auto u = chosen_control( nf, o.control );
  auto const spec = family_from_metadata( nf.metadata );

  std::optional<control_scheme> scheme;
  std::string used;
  auto want = [&]( char const* m ) { return o.method == "auto" || o.method == m; };

  if ( !scheme && want( "family" ) && spec )
  {
    auto const inst = gen_family( *spec );
    if ( !u )
      u = inst.control;
    if ( inst.bn == bn && inst.control == *u )
    {
      scheme = strategy_for( *spec, bn, *u, a, b );
      used = std::string( "layered strategy (" ) + to_string( spec->family ) + ")";
    }
  }
  if ( !scheme && want( "xor" ) && bn.is_all( rule_kind::xor_ ) )
  {
    auto const mat = bn.xor_matrix();
    if ( !u )
      u = construct_control_node_set( mat );
    auto const sched = basis_schedule( mat, *u );
    if ( !sched )
    {
      std::cout << "not controllable with U = " << u->to_string() << "\n";
      return negative;
    }
    scheme = synthesize_control( mat, *u, *sched, a, b );
    used = "xor basis schedule";
  }
  if ( !scheme && want( "two-step" ) && is_majority_type( bn ) && bn.degrees().regular_degree() )
  {
    auto const ext = greedy_extraction( bn );
    auto const ext_u = control_set_from_extraction( ext, n );
    if ( !u )
      u = ext_u;
    if ( *u == ext_u )
    {
      scheme = two_step_control( bn, ext, a, b );
      used = "two-step extraction";
    }
  }
  if ( !scheme && want( "oracle" ) )
  {
    detail::require( u.has_value(), errc::invalid_argument,
                     "no control set: pass --control or add control_set to the file" );
    detail::require( o.method == "oracle" || n <= auto_oracle_nodes, errc::oracle_limit,
                     "no constructive method applies and the network has more than " +
                         std::to_string( auto_oracle_nodes ) + " nodes for automatic exhaustive search" );
    scheme = shortest_drive( bn, *u, a, b );
    used = "oracle shortest drive";
    if ( !scheme )
    {
      std::cout << "target unreachable with U = " << u->to_string() << "\n";
      return negative;
    }
  }
  detail::require( scheme.has_value(), errc::invalid_argument, "method " + o.method + " does not apply to this network" );

  std::cout << "method: " << used << "\ncontrol set: " << ( u->empty() ? "(empty)" : u->to_string() ) << "\nsteps: "
            << scheme->steps() << "\n";
  for ( std::size_t t = 0; t < scheme->steps(); ++t )
    std::cout << "u(" << t << ") = " << scheme->signals[t].to_string() << "\n";
  print_trajectory( bn, *u, a, *scheme );

  if ( !o.out.empty() )
    emit( scheme_to_string( { n, *u, *scheme } ), o.out );

  if ( !verify_scheme( bn, *u, a, b, *scheme ) )
    detail::fail( errc::internal, "synthesized scheme does not reach the target" );
  return ok;
}

// ---------------------------------------------------------------- verify

struct verify_opts
{
  std::string network, scheme, from, to;
};

int cmd_verify( verify_opts const& o )
{
  auto const nf = load_network( o.network );
  auto const sf = load_scheme( o.scheme );
  auto const n = nf.bn.size();
  detail::require( sf.n == n, errc::dimension_mismatch,
                   "scheme is for " + std::to_string( sf.n ) + " nodes but the network has " + std::to_string( n ) );
  auto const a = parse_state( o.from, n, "--from" );
  auto const b = parse_state( o.to, n, "--to" );
  auto const tr = simulate( nf.bn, sf.control, a, sf.scheme );
  if ( tr.final_state() == b )
  {
    std::cout << "PASS: reached " << b.to_string() << " at t = " << sf.scheme.steps() << "\n";
    return ok;
  }
  std::cout << "FAIL: reached " << tr.final_state().to_string() << ", expected " << b.to_string() << "\n";
  return negative;
}

// ---------------------------------------------------------------- bounds

struct bounds_opts
{
  std::size_t n = 0, k = 0, s = 1;
  std::string family;
};

int cmd_bounds( bounds_opts const& o )
{
  auto const f = bound_family_from_string( o.family );
  detail::require( f.has_value(), errc::invalid_argument,
                   "unknown family " + o.family + " (majority-odd, majority-even, mtbi)" );
  auto const r = evaluate_bounds( o.n, o.k, o.s, *f );
  auto const in_degree = *f == bound_family::majority_odd ? 2 * o.k + 1 : 2 * o.k;

  auto line = [&]( std::string const& key, std::string const& val ) {
    std::cout << std::left << std::setw( 26 ) << key << val << "\n";
  };
  line( "family", to_string( *f ) );
  line( "n", std::to_string( o.n ) );
  line( "k (in-degree K)", std::to_string( o.k ) + " (" + std::to_string( in_degree ) + ")" );
  line( "s", std::to_string( o.s ) );
  if ( r.lower )
  {
    line( "lower bound (closed form)", std::to_string( r.lower->closed_form ) );
    line( "lower bound (inequality)", std::to_string( r.lower->inequality_min ) );
  }
  else
    line( "lower bound", "n/a for these parameters" );
  if ( r.upper )
  {
    std::ostringstream q;
    q << *r.upper;
    line( "upper bound", q.str() );
    line( "upper bound (floor)", r.upper_floor()->str() );
  }
  else
    line( "upper bound", "n/a for these parameters" );
  return ok;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "bnctl: control of majority, threshold and XOR Boolean networks" };
  app.require_subcommand( 1 );

  gen_opts g;
  auto* gen = app.add_subcommand( "gen", "generate a network file" );
  gen->add_option( "family", g.family,
                   "majority-odd | majority-even | mtbi | phi | xor-window | xor-circulant | random-majority | "
                   "random-mtbi | random-xor | xor3 | majority7 | majority8" )
      ->required();
  gen->add_option( "--k", g.k, "family parameter k (in-degree for random-*)" );
  gen->add_option( "--m", g.m, "number of layers, or log2 n for xor-circulant" );
  gen->add_option( "--n", g.n, "node count for xor-window and random-*" );
  gen->add_option( "--seed", g.seed, "RNG seed for random-*" );
  gen->add_option( "--density", g.density, "edge density for random-xor" );
  gen->add_option( "--out", g.out, "write to this path instead of standard output" );

  check_opts c;
  auto* check = app.add_subcommand( "check", "decide controllability" );
  check->add_option( "network", c.network )->required();
  check->add_option( "--control", c.control, "control nodes, e.g. x1,x3" );
  check->add_option( "--method", c.method, "auto | xor-exact | oracle" );

  control_set_opts cs;
  auto* control_set = app.add_subcommand( "control-set", "compute a control-node set" );
  control_set->add_option( "network", cs.network )->required();
  control_set->add_option( "--method", cs.method, "greedy-xor | greedy-majority | brute-min" )->required();
  control_set->add_option( "--max-size", cs.max_size, "largest set tried by brute-min" );

  synth_opts sy;
  auto* synth = app.add_subcommand( "synthesize", "build a control scheme from --from to --to" );
  synth->add_option( "network", sy.network )->required();
  synth->add_option( "--control", sy.control, "control nodes, e.g. x2" );
  synth->add_option( "--from", sy.from, "initial state bitstring, x1 leftmost" )->required();
  synth->add_option( "--to", sy.to, "target state bitstring, x1 leftmost" )->required();
  synth->add_option( "--method", sy.method, "auto | family | xor | two-step | oracle" );
  synth->add_option( "--out", sy.out, "also write the scheme file here" );

  verify_opts ve;
  auto* verify = app.add_subcommand( "verify", "replay a scheme and compare with the target" );
  verify->add_option( "network", ve.network )->required();
  verify->add_option( "scheme", ve.scheme )->required();
  verify->add_option( "--from", ve.from )->required();
  verify->add_option( "--to", ve.to )->required();

  bounds_opts bo;
  auto* bounds = app.add_subcommand( "bounds", "evaluate control-set size bounds" );
  bounds->add_option( "--n", bo.n )->required();
  bounds->add_option( "--k", bo.k )->required();
  bounds->add_option( "--s", bo.s, "horizon parameter s (default 1)" );
  bounds->add_option( "--family", bo.family, "majority-odd | majority-even | mtbi" )->required();

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    auto const rc = app.exit( e );
    return rc == 0 ? ok : usage;
  }

  try
  {
    if ( *gen )
      return cmd_gen( g );
    if ( *check )
      return cmd_check( c );
    if ( *control_set )
      return cmd_control_set( cs );
    if ( *synth )
      return cmd_synthesize( sy );
    if ( *verify )
      return cmd_verify( ve );
    if ( *bounds )
      return cmd_bounds( bo );
  }
  catch ( bn_error const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for( e.code() );
  }
  catch ( std::exception const& e )
  {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
  return usage;
}
