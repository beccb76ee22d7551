#include <gtest/gtest.h>

#include <bnctl/example_networks.hpp>
#include <bnctl/majority_control.hpp>
#include <bnctl/oracle.hpp>
#include <bnctl/random_networks.hpp>

#include <random>

using namespace bnctl;

namespace
{

gf2_vector v( char const* s ) { return gf2_vector::from_string( s ); }

// in-neighbours of z inside r, excluding z itself, counted from the rule inputs directly
std::size_t inside_count( boolean_network const& bn, std::vector<node_index> const& r, node_index z )
{
  std::size_t c = 0;
  for ( auto x : bn.rule( z ).inputs )
    if ( x != z && std::find( r.begin(), r.end(), x ) != r.end() )
      ++c;
  return c;
}

} // namespace

TEST( Extraction, SevenNodeExample )
{
  auto const bn = example_majority7();
  auto const ext = greedy_extraction( bn );
  EXPECT_EQ( ext.groups, ( std::vector<std::vector<node_index>>{ { 2, 3 }, { 6, 7 } } ) );
  EXPECT_EQ( ext.targets, ( std::vector<node_index>{ 1, 5 } ) );
  EXPECT_EQ( ext.residual, ( std::vector<node_index>{ 4 } ) );
  EXPECT_EQ( control_set_from_extraction( ext, 7 ), ( control_node_set{ 2, 3, 4, 6, 7 } ) );
}

TEST( TwoStep, SevenNodeExampleWithHandBuiltExtraction )
{
  auto const bn = example_majority7();
  extraction ext{ { { 2, 3 }, { 5, 6 } }, { 1, 7 }, { 4 } };
  EXPECT_NO_THROW( validate_extraction( bn, ext ) );
  auto const u = control_set_from_extraction( ext, 7 );
  EXPECT_EQ( u, ( control_node_set{ 2, 3, 4, 5, 6 } ) );

  auto const a = v( "1111000" ), b = v( "0101011" );
  auto const s = two_step_control( bn, ext, a, b );
  ASSERT_EQ( s.steps(), 2u );
  EXPECT_EQ( s.signals[0], v( "0110110" ) );
  EXPECT_EQ( s.signals[1], v( "0011100" ) );

  auto const tr = simulate( bn, u, a, s );
  EXPECT_EQ( tr.images[0], v( "1111000" ) );
  EXPECT_EQ( tr.states[1], v( "1001110" ) );
  EXPECT_EQ( tr.images[1], v( "0110111" ) );
  EXPECT_EQ( tr.final_state(), b );
}

TEST( TwoStep, EightNodeExample )
{
  auto const bn = example_majority8();
  auto const ext = greedy_extraction( bn );
  EXPECT_EQ( ext.groups, ( std::vector<std::vector<node_index>>{ { 2, 3, 4 }, { 6, 7, 8 } } ) );
  EXPECT_EQ( ext.targets, ( std::vector<node_index>{ 1, 5 } ) );
  EXPECT_TRUE( ext.residual.empty() );

  auto const u = control_set_from_extraction( ext, 8 );
  auto const a = v( "10010010" ), b = v( "10100001" );
  auto const s = two_step_control( bn, ext, a, b );
  EXPECT_EQ( s.signals[0], v( "01100110" ) );
  EXPECT_EQ( s.signals[1], v( "01000010" ) );
  auto const tr = simulate( bn, u, a, s );
  EXPECT_EQ( tr.images[0], v( "10010110" ) );
  EXPECT_EQ( tr.states[1], v( "11110000" ) );
  EXPECT_EQ( tr.images[1], v( "11100011" ) );
  EXPECT_EQ( tr.final_state(), b );
}

TEST( Extraction, InvariantsOnRandomRegularNetworks )
{
  for ( std::uint64_t seed = 0; seed < 200; ++seed )
  {
    std::size_t const big_k = 2 + seed % 6;
    std::size_t const n = big_k + 1 + seed % 40;
    auto const kind = big_k % 2 == 0 && seed % 2 ? rule_kind::mtbi : rule_kind::majority;
    auto const bn = random_regular_network( n, big_k, kind, seed );
    auto const ext = greedy_extraction( bn );
    std::size_t const k = big_k / 2;

    EXPECT_NO_THROW( validate_extraction( bn, ext ) );
    // groups, targets and residual partition V
    std::vector<int> cover( n + 1, 0 );
    for ( std::size_t i = 0; i < ext.p(); ++i )
    {
      EXPECT_EQ( ext.groups[i].size(), k + 1 );
      for ( auto x : ext.groups[i] )
        ++cover[x];
      ++cover[ext.targets[i]];
    }
    for ( auto z : ext.residual )
      ++cover[z];
    for ( std::size_t i = 1; i <= n; ++i )
      EXPECT_EQ( cover[i], 1 ) << "node " << i << " seed " << seed;

    // maximality: nothing left in R can still be forced
    for ( auto z : ext.residual )
      EXPECT_LE( inside_count( bn, ext.residual, z ), k );
    EXPECT_TRUE( residual_saturated( bn, ext.residual, k ) );

    auto const rb = residual_bound_check( bn, ext.residual, big_k, k );
    EXPECT_TRUE( rb.holds() ) << "seed " << seed;
    EXPECT_EQ( rb.numerator, big_k * n );
    EXPECT_EQ( rb.denominator, 2 * big_k - k - 1 );

    EXPECT_EQ( control_set_from_extraction( ext, n ).size(), n - ext.p() );
  }
}

TEST( TwoStep, DrivesRandomPairsInTwoSteps )
{
  std::mt19937_64 rng( 5 );
  for ( std::uint64_t seed = 0; seed < 150; ++seed )
  {
    std::size_t const big_k = 3 + seed % 5;
    std::size_t const n = big_k + 2 + seed % 50;
    auto const kind = big_k % 2 == 0 && seed % 3 == 0 ? rule_kind::mtbi : rule_kind::majority;
    auto const bn = random_regular_network( n, big_k, kind, seed );
    auto const ext = greedy_extraction( bn );
    auto const u = control_set_from_extraction( ext, n );
    for ( int trial = 0; trial < 5; ++trial )
    {
      auto const a = random_state( n, rng ), b = random_state( n, rng );
      auto const s = two_step_control( bn, ext, a, b );
      EXPECT_EQ( s.steps(), 2u );
      EXPECT_TRUE( verify_scheme( bn, u, a, b, s ) ) << "seed " << seed;
    }
  }
}

TEST( TwoStep, ControlSetIsControllableByExhaustiveSearch )
{
  for ( std::uint64_t seed = 0; seed < 40; ++seed )
  {
    std::size_t const big_k = 3 + seed % 2;
    std::size_t const n = 5 + seed % 6;
    auto const bn = random_regular_network( n, big_k, rule_kind::majority, seed );
    auto const u = control_set_from_extraction( greedy_extraction( bn ), n );
    auto const horizon = drive_horizon( bn, u );
    ASSERT_TRUE( horizon.has_value() ) << "seed " << seed;
    EXPECT_LE( *horizon, 2u );
  }
}

TEST( ResidualBound, ReportsViolatedHypothesis )
{
  auto const bn = example_majority7();
  std::vector<node_index> all{ 1, 2, 3, 4, 5, 6, 7 };
  auto const r = residual_bound_check( bn, all, 3, 0 );
  EXPECT_EQ( r.status, residual_status::hypothesis_violated );
  EXPECT_FALSE( r.holds() );
  EXPECT_EQ( residual_bound_check( bn, all, 3, 2 ).status, residual_status::hypothesis_violated );
  EXPECT_TRUE( residual_bound_check( bn, { 4 }, 3, 0 ).holds() );
  EXPECT_THROW( residual_bound_check( bn, all, 3, 3 ), bn_error );
  EXPECT_THROW( residual_bound_check( bn, all, 4, 1 ), bn_error );
}

TEST( ResidualBound, ExhaustiveSubsetsOfSmallNetworks )
{
  // every subset R satisfying the in-degree hypothesis obeys the size bound
  for ( std::uint64_t seed = 0; seed < 12; ++seed )
  {
    std::size_t const big_k = 2 + seed % 3;
    std::size_t const n = 6 + seed % 7;
    auto const bn = random_regular_network( n, big_k, rule_kind::majority, seed );
    for ( std::size_t l = 0; l < big_k; ++l )
      for ( std::uint32_t mask = 0; mask < ( 1u << n ); ++mask )
      {
        std::vector<node_index> r;
        for ( std::size_t i = 0; i < n; ++i )
          if ( mask >> i & 1u )
            r.push_back( i + 1 );
        auto const res = residual_bound_check( bn, r, big_k, l );
        EXPECT_NE( res.status, residual_status::bound_violated );
        bool hyp = true;
        for ( auto z : r )
          hyp = hyp && inside_count( bn, r, z ) <= l;
        EXPECT_EQ( res.status == residual_status::ok, hyp );
      }
  }
}

TEST( Extraction, RejectsUnsuitableInputs )
{
  boolean_network irregular( { node_rule::majority( { 2 } ), node_rule::majority( { 2 } ) } );
  EXPECT_THROW( greedy_extraction( irregular ), bn_error );
  EXPECT_THROW( greedy_extraction( example_majority7(), 3 ), bn_error );

  auto const bn = example_majority7();
  extraction small{ { { 2 } }, { 1 }, {} };
  EXPECT_THROW( two_step_control( bn, small, v( "0000000" ), v( "1111111" ) ), bn_error );
  extraction wrong{ { { 4, 5 } }, { 1 }, {} };
  EXPECT_THROW( validate_extraction( bn, wrong ), bn_error );
  extraction twice{ { { 2, 3 }, { 2, 4 } }, { 1, 5 }, {} };
  EXPECT_THROW( validate_extraction( bn, twice ), bn_error );
}
