#include "support.hpp"

#include <revsyn/anf.hpp>
#include <revsyn/esop.hpp>
#include <revsyn/truth_table.hpp>

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

using namespace revsyn;

namespace
{

truth_table four_mod_five()
{
  truth_table tt( 4u, 1u );
  for ( std::uint64_t x : { 0u, 5u, 10u, 15u } )
  {
    tt.set( x, 0u, true );
  }
  return tt;
}

cube cube_of( std::initializer_list<unsigned> vars )
{
  std::uint32_t mask = 0u;
  for ( auto v : vars )
  {
    mask |= 1u << ( v - 1u );
  }
  return cube{ mask };
}

} // namespace

TEST( truth_table, rejects_bad_labels )
{
  truth_table tt( 2u, 1u );
  EXPECT_THROW( tt.set_input_names( { "a" } ), std::invalid_argument );
  EXPECT_THROW( tt.set_input_names( { "a", "a" } ), std::invalid_argument );
  EXPECT_NO_THROW( tt.set_output_names( { "f" } ) );
}

TEST( truth_table, permutation_must_be_bijective )
{
  EXPECT_THROW( permutation( { 0u, 0u } ), std::invalid_argument );
  EXPECT_THROW( permutation( { 0u, 1u, 2u } ), std::invalid_argument );
  EXPECT_NO_THROW( permutation( { 1u, 0u } ) );
}

TEST( truth_table, permutation_round_trip )
{
  test::rng_t rng( 7u );
  for ( unsigned n = 1; n <= 6; ++n )
  {
    auto const p = test::random_permutation( rng, n );
    auto const tt = truth_table_from_permutation( p );
    EXPECT_TRUE( tt.is_reversible() );
    EXPECT_EQ( tt.to_permutation(), p );
    for ( std::uint64_t x = 0; x < p.size(); ++x )
    {
      EXPECT_EQ( tt.row( x ), p[x] );
    }
  }
}

TEST( truth_table, nth_prime3_rows )
{
  permutation const p( { 0u, 2u, 3u, 5u, 7u, 1u, 4u, 6u } );
  auto const tt = truth_table_from_permutation( p );
  EXPECT_EQ( tt.num_inputs(), 3u );
  EXPECT_EQ( tt.num_outputs(), 3u );
  EXPECT_TRUE( tt.get( 1u, 1u ) );
  EXPECT_FALSE( tt.get( 1u, 0u ) );
}

TEST( truth_column, projection_and_ops )
{
  auto const a = truth_column::projection( 7u, 0u );
  auto const g = truth_column::projection( 7u, 6u );
  EXPECT_EQ( a.count_ones(), 64u );
  EXPECT_TRUE( g.get( 64u ) );
  EXPECT_FALSE( g.get( 63u ) );
  EXPECT_TRUE( ( a ^ a ).is_const0() );
  EXPECT_EQ( ( ~truth_column::constant( 3u, false ) ).count_ones(), 8u );
  EXPECT_EQ( ( a & g ).count_ones(), 32u );
}

TEST( anf, constant_zero_is_empty )
{
  for ( unsigned n = 0; n <= 5; ++n )
  {
    EXPECT_TRUE( anf_from_truth_table( truth_table( n, 1u ) ).empty() );
  }
}

TEST( anf, identity_function )
{
  truth_table tt( 1u, 1u, { 0u, 1u } );
  EXPECT_EQ( anf_from_truth_table( tt ), esop_expression( 1u, { cube::literal( 0u ) } ) );
}

TEST( anf, four_mod_five_nine_cubes )
{
  auto const expr = anf_from_truth_table( four_mod_five() );
  esop_expression const expected( 4u, { cube::one(), cube_of( { 1 } ), cube_of( { 2 } ), cube_of( { 1, 2 } ),
                                         cube_of( { 3 } ), cube_of( { 2, 3 } ), cube_of( { 4 } ), cube_of( { 1, 4 } ),
                                         cube_of( { 3, 4 } ) } );
  EXPECT_EQ( expr.size(), 9u );
  EXPECT_EQ( expr, expected );
  for ( std::uint64_t x = 0; x < 16u; ++x )
  {
    EXPECT_EQ( test::eval_cubes( expected.cubes(), x ), x % 5u == 0u ) << x;
  }
}

TEST( anf, four_mod_five_back_to_table )
{
  auto const tt = truth_table_from_anf( anf_from_truth_table( four_mod_five() ) );
  EXPECT_EQ( tt, four_mod_five() );
}

TEST( anf, constant_one_cube )
{
  auto const tt = truth_table_from_anf( esop_expression::constant( 3u, true ) );
  for ( std::uint64_t x = 0; x < 8u; ++x )
  {
    EXPECT_TRUE( tt.get( x, 0u ) );
  }
  EXPECT_TRUE( truth_table_from_anf( esop_expression( 3u ) ).column( 0u ).is_const0() );
}

TEST( anf, rejects_multi_output )
{
  EXPECT_THROW( anf_from_truth_table( truth_table( 2u, 2u ) ), std::invalid_argument );
}

TEST( anf, matches_cube_evaluation )
{
  test::rng_t rng( 11u );
  for ( unsigned n = 1; n <= 10; ++n )
  {
    for ( int trial = 0; trial < 20; ++trial )
    {
      auto const tt = test::random_table( rng, n, 1u );
      auto const expr = anf_from_truth_table( tt );
      for ( std::uint64_t x = 0; x < tt.num_rows(); ++x )
      {
        ASSERT_EQ( test::eval_cubes( expr.cubes(), x ), tt.get( x, 0u ) ) << "n=" << n << " x=" << x;
      }
    }
  }
}

TEST( anf, transform_is_an_involution )
{
  test::rng_t rng( 3u );
  for ( unsigned n = 1; n <= 12; ++n )
  {
    for ( int trial = 0; trial < 20; ++trial )
    {
      auto const col = test::random_table( rng, n, 1u ).column( 0u );
      ASSERT_EQ( anf_transform( anf_transform( col ) ), col ) << n;
    }
  }
}

TEST( anf, byte_and_column_transforms_agree )
{
  test::rng_t rng( 5u );
  auto const col = test::random_table( rng, 9u, 1u ).column( 0u );
  std::vector<std::uint8_t> bytes( col.num_bits() );
  for ( std::uint64_t i = 0; i < col.num_bits(); ++i )
  {
    bytes[i] = col.get( i );
  }
  anf_transform( bytes );
  auto const fast = anf_transform( col );
  for ( std::uint64_t i = 0; i < col.num_bits(); ++i )
  {
    ASSERT_EQ( bool( bytes[i] ), fast.get( i ) );
  }
}

TEST( anf, expression_round_trip )
{
  test::rng_t rng( 19u );
  for ( unsigned n = 1; n <= 12; ++n )
  {
    for ( int trial = 0; trial < 10; ++trial )
    {
      auto const expr = test::random_expression( rng, n, 40u );
      EXPECT_EQ( anf_from_truth_table( truth_table_from_anf( expr ) ), expr );
    }
  }
}

TEST( esop, duplicates_cancel )
{
  esop_expression const e( 3u, { cube::literal( 0u ), cube::literal( 1u ), cube::literal( 0u ) } );
  EXPECT_EQ( e, esop_expression( 3u, { cube::literal( 1u ) } ) );
}

TEST( esop, algebra_matches_evaluation )
{
  test::rng_t rng( 23u );
  for ( int trial = 0; trial < 200; ++trial )
  {
    auto const a = test::random_expression( rng, 5u, 8u );
    auto const b = test::random_expression( rng, 5u, 8u );
    auto const sum = a ^ b;
    auto const prod = a * b;
    auto const sub = a.substitute( 2u, b );
    for ( std::uint64_t x = 0; x < 32u; ++x )
    {
      ASSERT_EQ( sum.evaluate( x ), a.evaluate( x ) != b.evaluate( x ) );
      ASSERT_EQ( prod.evaluate( x ), a.evaluate( x ) && b.evaluate( x ) );
      auto const y = x ^ ( std::uint64_t( b.evaluate( x ) ) << 2u );
      ASSERT_EQ( sub.evaluate( x ), a.evaluate( y ) );
    }
  }
}

TEST( esop, counts )
{
  auto const e = anf_from_truth_table( four_mod_five() );
  EXPECT_EQ( e.degree(), 2u );
  EXPECT_EQ( e.nonlinear_count(), 4u );
  EXPECT_EQ( e.literal_count(), 12u );
  EXPECT_EQ( to_string( esop_expression( 2u, { cube::one(), cube{ 3u } } ) ), "1 ^ x1x2" );
}
