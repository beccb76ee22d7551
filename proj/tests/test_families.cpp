#include <gtest/gtest.h>

#include "worked_trajectories.hpp"

#include <bnctl/families.hpp>
#include <bnctl/oracle.hpp>
#include <bnctl/random_networks.hpp>

#include <random>

using namespace bnctl;

namespace
{

gf2_vector v( char const* s ) { return gf2_vector::from_string( s ); }

layered_family const all_families[] = { layered_family::majority_odd, layered_family::majority_even,
                                        layered_family::mtbi, layered_family::phi };

std::size_t expected_degree( layered_family f, std::size_t k )
{
  switch ( f )
  {
  case layered_family::majority_odd:
    return 2 * k + 1;
  case layered_family::majority_even:
  case layered_family::mtbi:
    return 2 * k;
  case layered_family::phi:
    return k;
  }
  return 0;
}

std::size_t min_k( layered_family f )
{
  return f == layered_family::phi ? 3 : f == layered_family::mtbi ? 2 : 1;
}

// every mixed vector of the given length
std::vector<gf2_vector> mixed_vectors( std::size_t len )
{
  std::vector<gf2_vector> out;
  for ( std::uint64_t x = 1; x + 1 < ( std::uint64_t{ 1 } << len ); ++x )
    out.push_back( gf2_vector::from_index( len, x ) );
  return out;
}

} // namespace

TEST( LayeredFamily, WorkedTrajectoriesReproducedExactly )
{
  for ( auto const& c : worked::cases )
  {
    layered_family_spec const spec{ c.family, c.k, c.m };
    auto const inst = gen_family( spec );
    auto const a = v( c.a ), b = v( c.b );
    auto const s = strategy_for( spec, inst.bn, inst.control, a, b );
    ASSERT_EQ( s.steps(), c.m ) << to_string( c.family );
    auto const tr = simulate( inst.bn, inst.control, a, s );
    for ( std::size_t t = 0; t <= c.m; ++t )
      EXPECT_EQ( tr.states[t], v( c.states[t] ) ) << to_string( c.family ) << " x(" << t << ")";
    for ( std::size_t t = 0; t < c.m; ++t )
    {
      EXPECT_EQ( tr.images[t], v( c.images[t] ) ) << to_string( c.family ) << " F(x(" << t << "))";
      // wiring alone determines the image column
      EXPECT_EQ( inst.bn.step( v( c.states[t] ) ), v( c.images[t] ) ) << to_string( c.family );
    }
  }
}

TEST( LayeredFamily, StructureAndControlSetSize )
{
  for ( auto f : all_families )
    for ( std::size_t k = min_k( f ); k <= 5; ++k )
      for ( std::size_t m = 1; m <= 5; ++m )
      {
        layered_family_spec const spec{ f, k, m };
        auto const inst = gen_family( spec );
        EXPECT_EQ( inst.bn.size(), spec.size() );
        EXPECT_EQ( inst.control.size(), spec.control_set_size() );
        if ( m >= 2 || f == layered_family::phi )
        {
          EXPECT_TRUE( inst.bn.degrees().is_regular( expected_degree( f, k ) ) ) << to_string( f ) << k << m;
        }
        // layer l reads only layer l-1 (layer 1 reads layer m)
        for ( std::size_t l = 1; l <= m; ++l )
        {
          auto const src = l == 1 ? m : l - 1;
          for ( std::size_t j = 1; j <= spec.width(); ++j )
            for ( auto x : inst.bn.rule( spec.node( l, j ) ).inputs )
            {
              EXPECT_GE( x, spec.node( src, 1 ) );
              EXPECT_LE( x, spec.node( src, spec.width() ) );
            }
        }
        // layer 1 is fully controlled
        for ( std::size_t j = 1; j <= spec.width(); ++j )
          EXPECT_TRUE( inst.control.contains( spec.node( 1, j ) ) );
      }
}

TEST( LayeredFamily, ControlSetFormulas )
{
  EXPECT_EQ( ( layered_family_spec{ layered_family::majority_odd, 2, 4 } ).control_set_size(), 6u + 3u * 2u );
  EXPECT_EQ( ( layered_family_spec{ layered_family::majority_even, 2, 4 } ).control_set_size(), 5u + 3u * 2u );
  EXPECT_EQ( ( layered_family_spec{ layered_family::mtbi, 3, 4 } ).control_set_size(), 6u + 3u * 2u );
  EXPECT_EQ( ( layered_family_spec{ layered_family::phi, 5, 4 } ).control_set_size(), 5u );
}

TEST( LayerMaps, LeaveOneOutMajorityAndCyclicPhi )
{
  for ( auto f : all_families )
    for ( std::size_t k = min_k( f ); k <= 4; ++k )
    {
      auto const w = layer_width( f, k );
      for ( std::uint64_t x = 0; x < ( std::uint64_t{ 1 } << w ); ++x )
      {
        auto const y = gf2_vector::from_index( w, x );
        auto const g = layer_map_eval( f, k, y );
        auto const ones = y.popcount();
        for ( std::size_t j = 1; j <= w; ++j )
        {
          bool expected = false;
          auto const others = ones - ( y.get( j ) ? 1 : 0 );
          switch ( f )
          {
          case layered_family::majority_odd:
          case layered_family::majority_even:
            expected = 2 * others >= w - 1;
            break;
          case layered_family::mtbi:
            expected = ones > k || ( ones == k && y.get( j ) );
            break;
          case layered_family::phi:
            expected = ones == 0 || ( ones < w && y.get( j ) );
            break;
          }
          EXPECT_EQ( g.get( j ), expected ) << to_string( f ) << " k=" << k << " y=" << y.to_string();
        }
      }
    }
}

TEST( Alpha, ShapesAndCounts )
{
  EXPECT_EQ( alpha1( v( "1000" ) ), v( "11" ) );
  EXPECT_EQ( alpha1( v( "1110" ) ), v( "00" ) );
  EXPECT_EQ( alpha2( v( "100" ) ), v( "10" ) );
  EXPECT_EQ( alpha3( v( "0110" ) ), v( "10" ) );
  EXPECT_EQ( alpha3( v( "10" ) ).size(), 0u );
  EXPECT_THROW( alpha1( v( "0000" ) ), bn_error );
  EXPECT_THROW( alpha2( v( "111" ) ), bn_error );
  EXPECT_THROW( alpha3( v( "1" ) ), bn_error );

  for ( std::size_t k = 1; k <= 6; ++k )
  {
    for ( auto const& p : mixed_vectors( k + 2 ) )
    {
      auto const a = alpha1( p );
      EXPECT_EQ( a.size(), k );
      EXPECT_EQ( a.popcount() + p.popcount(), k + 1 );
    }
    for ( auto const& p : mixed_vectors( k + 1 ) )
    {
      EXPECT_EQ( alpha2( p ).size(), k );
      EXPECT_EQ( alpha2( p ).popcount() + p.popcount(), k );
      EXPECT_EQ( alpha3( p ).size(), k - 1 );
      EXPECT_EQ( alpha3( p ).popcount() + p.popcount(), k );
    }
  }
}

TEST( Alpha, CompletedLayersArePeriodicUnderTheLayerMap )
{
  for ( std::size_t k = 1; k <= 6; ++k )
  {
    for ( auto const& p : mixed_vectors( k + 2 ) )
    {
      auto const y = alpha1( p ).concat( p );
      EXPECT_EQ( layer_map_eval( layered_family::majority_odd, k, y ), ~y );
      EXPECT_EQ( layer_map_eval( layered_family::majority_odd, k, ~y ), y );
    }
    for ( auto const& p : mixed_vectors( k + 1 ) )
    {
      auto const y = alpha2( p ).concat( p );
      EXPECT_EQ( layer_map_eval( layered_family::majority_even, k, y ), ~y );
      if ( k >= 2 )
      {
        auto const z = alpha3( p ).concat( p );
        EXPECT_EQ( layer_map_eval( layered_family::mtbi, k, z ), z );
      }
    }
  }
  for ( std::size_t k = 3; k <= 8; ++k )
    for ( auto const& p : mixed_vectors( k ) )
      EXPECT_EQ( layer_map_eval( layered_family::phi, k, p ), p );
}

TEST( Strategy, RandomPairsReachedInExactlyMSteps )
{
  std::mt19937_64 rng( 2024 );
  for ( auto f : all_families )
    for ( std::size_t k = min_k( f ); k <= min_k( f ) + 3; ++k )
      for ( std::size_t m = 1; m <= 6; ++m )
      {
        layered_family_spec const spec{ f, k, m };
        auto const inst = gen_family( spec );
        for ( int trial = 0; trial < 25; ++trial )
        {
          auto const a = random_state( spec.size(), rng ), b = random_state( spec.size(), rng );
          auto const s = strategy_for( spec, inst.bn, inst.control, a, b );
          EXPECT_EQ( s.steps(), m );
          EXPECT_TRUE( verify_scheme( inst.bn, inst.control, a, b, s ) )
              << to_string( f ) << " k=" << k << " m=" << m << " a=" << a << " b=" << b;
        }
      }
}

TEST( Strategy, ConstantAndExtremeTargets )
{
  for ( auto f : all_families )
    for ( std::size_t k = min_k( f ); k <= min_k( f ) + 2; ++k )
      for ( std::size_t m = 1; m <= 5; ++m )
      {
        layered_family_spec const spec{ f, k, m };
        auto const inst = gen_family( spec );
        auto const n = spec.size();
        gf2_vector const zero( n ), one = gf2_vector::ones( n );
        for ( auto const* a : { &zero, &one } )
          for ( auto const* b : { &zero, &one } )
            EXPECT_TRUE( verify_scheme( inst.bn, inst.control, *a, *b,
                                        strategy_for( spec, inst.bn, inst.control, *a, *b ) ) )
                << to_string( f ) << " k=" << k << " m=" << m;
      }
}

TEST( Strategy, AllPairsOnTinyInstances )
{
  layered_family_spec const specs[] = { { layered_family::majority_odd, 1, 2 },
                                        { layered_family::majority_even, 1, 2 },
                                        { layered_family::mtbi, 2, 2 },
                                        { layered_family::phi, 3, 2 } };
  for ( auto const& spec : specs )
  {
    auto const inst = gen_family( spec );
    auto const n = spec.size();
    for ( std::uint64_t x = 0; x < ( std::uint64_t{ 1 } << n ); ++x )
      for ( std::uint64_t y = 0; y < ( std::uint64_t{ 1 } << n ); y += 3 )
      {
        auto const a = gf2_vector::from_index( n, x ), b = gf2_vector::from_index( n, y );
        ASSERT_TRUE( verify_scheme( inst.bn, inst.control, a, b, strategy_for( spec, inst.bn, inst.control, a, b ) ) )
            << to_string( spec.family ) << " a=" << a << " b=" << b;
      }
  }
}

TEST( Strategy, ControlSetControllableWithinMStepsByExhaustiveSearch )
{
  layered_family_spec const specs[] = { { layered_family::majority_odd, 1, 2 },
                                        { layered_family::majority_even, 1, 3 },
                                        { layered_family::mtbi, 2, 2 },
                                        { layered_family::phi, 3, 3 },
                                        { layered_family::phi, 4, 3 } };
  for ( auto const& spec : specs )
  {
    auto const inst = gen_family( spec );
    auto const horizon = drive_horizon( inst.bn, inst.control );
    ASSERT_TRUE( horizon.has_value() ) << to_string( spec.family );
    EXPECT_LE( *horizon, spec.m );
  }
}

TEST( Strategy, RejectsForeignNetworksAndStates )
{
  layered_family_spec const spec{ layered_family::majority_odd, 1, 2 };
  auto const inst = gen_family( spec );
  auto const other = gen_family( { layered_family::majority_odd, 1, 3 } );
  gf2_vector const a( 8 ), b( 8 );
  EXPECT_THROW( strategy_for( spec, other.bn, inst.control, a, b ), bn_error );
  EXPECT_THROW( strategy_for( spec, inst.bn, control_node_set{ 1, 2 }, a, b ), bn_error );
  EXPECT_THROW( strategy_for( spec, inst.bn, inst.control, gf2_vector( 7 ), b ), bn_error );
  EXPECT_THROW( strategy_mtbi( spec, inst.bn, inst.control, a, b ), bn_error );
  EXPECT_THROW( gen_family( { layered_family::phi, 2, 3 } ), bn_error );
  EXPECT_THROW( gen_family( { layered_family::mtbi, 1, 0 } ), bn_error );
}

TEST( XorFamilies, ParameterChecks )
{
  EXPECT_THROW( gen_xor_window( 3, 3 ), bn_error );
  EXPECT_THROW( gen_xor_window( 5, 1 ), bn_error );
  EXPECT_THROW( gen_xor_circulant( 3, 4 ), bn_error );
  EXPECT_THROW( gen_xor_circulant( 3, 9 ), bn_error );
  EXPECT_THROW( gen_xor_circulant( 1, 3 ), bn_error );
  EXPECT_EQ( cyclic_shift_matrix( 3 ), gf2_matrix::from_strings( { "010", "001", "100" } ) );
}

TEST( XorFamilies, CirculantMatrixIsPolynomialInShift )
{
  for ( std::size_t m = 2; m <= 4; ++m )
  {
    auto const n = std::size_t{ 1 } << m;
    auto const p = cyclic_shift_matrix( n );
    for ( std::size_t k = 3; k < n; k += 2 )
    {
      gf2_matrix sum( n, n );
      std::size_t const first = k % 4 == 3 ? 0 : 1;
      for ( std::size_t e = first; e < first + k; ++e )
        sum += mat_pow( p, e );
      EXPECT_EQ( gen_xor_circulant( m, k ).bn.xor_matrix(), sum ) << "m=" << m << " k=" << k;
    }
  }
}
