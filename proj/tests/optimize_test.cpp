#include "support.hpp"

#include <revsyn/anf.hpp>
#include <revsyn/dag.hpp>
#include <revsyn/optimize.hpp>

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

using namespace revsyn;

namespace
{

cube c( unsigned mask )
{
  return cube{ mask };
}

void expect_same_functions( esop_dag const& dag, std::vector<esop_expression> const& exprs )
{
  ASSERT_TRUE( validate_dag( dag ).empty() );
  EXPECT_EQ( dag_to_expressions( dag ), exprs );
}

} // namespace

TEST( weak_divide, textbook_case )
{
  /* (x1x3 ^ x1x4 ^ x2x3 ^ x2x4 ^ x5) / (x3 ^ x4) = x1 ^ x2, remainder x5 */
  esop_expression const f( 5u, { c( 0x05u ), c( 0x09u ), c( 0x06u ), c( 0x0au ), c( 0x10u ) } );
  esop_expression const d( 5u, { c( 0x04u ), c( 0x08u ) } );
  auto const [q, r] = weak_divide( f, d );
  EXPECT_EQ( q, esop_expression( 5u, { c( 0x01u ), c( 0x02u ) } ) );
  EXPECT_EQ( r, esop_expression( 5u, { c( 0x10u ) } ) );
}

TEST( weak_divide, reconstructs_dividend )
{
  test::rng_t rng( 61u );
  for ( int trial = 0; trial < 300; ++trial )
  {
    auto const f = test::random_expression( rng, 6u, 12u );
    auto d = test::random_expression( rng, 6u, 3u );
    if ( d.empty() )
    {
      continue;
    }
    auto const [q, r] = weak_divide( f, d );
    EXPECT_EQ( ( q * d ) ^ r, f );
    EXPECT_EQ( q.support() & d.support(), 0u );
  }
  EXPECT_THROW( weak_divide( esop_expression( 2u ), esop_expression( 2u ) ), std::invalid_argument );
}

TEST( kernels, cube_free_and_divisible )
{
  test::rng_t rng( 67u );
  for ( int trial = 0; trial < 100; ++trial )
  {
    auto const f = test::random_expression( rng, 6u, 14u );
    for ( auto const& k : extract_kernels( f ) )
    {
      ASSERT_GE( k.kernel.size(), 2u );
      std::uint32_t common = ~0u;
      for ( auto cb : k.kernel.cubes() )
      {
        common &= cb.mask();
      }
      EXPECT_EQ( common, 0u ) << to_string( k.kernel );
      EXPECT_EQ( ( k.quotient * k.kernel ) ^ k.remainder, f );
      EXPECT_TRUE( k.quotient.contains( k.co_kernel ) );
    }
  }
}

TEST( kernels, threshold_filters_small_kernels )
{
  esop_expression const f( 4u, { c( 0x05u ), c( 0x09u ), c( 0x06u ), c( 0x0au ) } );
  auto const kernels = extract_kernels( f );
  ASSERT_FALSE( kernels.empty() );
  EXPECT_TRUE( select_divisor( kernels, 1u ) );
  EXPECT_FALSE( select_divisor( kernels, 4u ) );
}

TEST( factoring, expansion_is_identity )
{
  test::rng_t rng( 71u );
  for ( unsigned k = 0; k <= 4u; ++k )
  {
    optimize_params params;
    params.kernel_threshold = k;
    for ( int trial = 0; trial < 50; ++trial )
    {
      auto const f = test::random_expression( rng, 6u, 16u );
      auto const form = factor_expression( f, params );
      EXPECT_EQ( form.expand( 6u ), f );
    }
  }
  EXPECT_TRUE( factored_form::flat( esop_expression( 3u, { c( 1u ), c( 6u ) } ) ).is_flat() );
}

TEST( kernel_extraction, preserves_semantics )
{
  test::rng_t rng( 73u );
  for ( unsigned k = 0; k <= 7u; ++k )
  {
    for ( int trial = 0; trial < 20; ++trial )
    {
      auto const exprs = anf_per_output( test::random_table( rng, 5u, 3u ) );
      optimize_params params;
      params.kernel_threshold = k;
      auto dag = build_dag( exprs, 3u );
      kernel_extraction( dag, params );
      expect_same_functions( dag, exprs );
    }
  }
}

TEST( cube_sharing, hoists_common_children )
{
  /* x1x2 sits inside x1x2x3 */
  std::vector<esop_expression> const exprs{ esop_expression( 4u, { c( 0x3u ), c( 0x8u ) } ),
                                            esop_expression( 4u, { c( 0x7u ), c( 0x8u ) } ) };
  auto dag = build_dag( exprs, 4u );
  auto const before = dag.gate_node_count();
  auto const report = common_cube_sharing( dag );
  EXPECT_GE( report.applications, 1u );
  EXPECT_LE( dag.gate_node_count(), before );
  expect_same_functions( dag, exprs );
}

TEST( cube_sharing, shareable_predicate )
{
  esop_dag dag( 4u );
  std::vector<node_id> x;
  for ( unsigned i = 0; i < 4u; ++i )
  {
    x.push_back( dag.identifier( i ) );
  }
  auto const ab = dag.make( node_kind::and_node, { x[0], x[1] } );
  auto const abc = dag.make( node_kind::and_node, { x[0], x[1], x[2] } );
  auto const abd = dag.make( node_kind::and_node, { x[0], x[1], x[3] } );
  auto const xab = dag.make( node_kind::xor_node, { x[0], x[1] } );
  EXPECT_TRUE( shareable( dag, ab, abc ) );
  EXPECT_TRUE( shareable( dag, abc, ab ) );
  EXPECT_FALSE( shareable( dag, abc, abd ) );
  EXPECT_FALSE( shareable( dag, abc, abc ) );
  EXPECT_FALSE( shareable( dag, ab, xab ) );
}

TEST( cube_sharing, preserves_semantics )
{
  test::rng_t rng( 79u );
  for ( unsigned arity : { 3u, 4u } )
  {
    for ( int trial = 0; trial < 40; ++trial )
    {
      auto const exprs = anf_per_output( test::random_table( rng, 5u + trial % 2, 4u ) );
      auto dag = build_dag( exprs, arity );
      common_cube_sharing( dag );
      expect_same_functions( dag, exprs );
    }
  }
}

TEST( parent_reduction, preserves_semantics )
{
  test::rng_t rng( 83u );
  for ( bool generalized : { false, true } )
  {
    for ( int trial = 0; trial < 60; ++trial )
    {
      auto const exprs = anf_per_output( test::random_table( rng, 4u, 3u ) );
      auto dag = build_dag( exprs, 3u );
      for ( int step = 0; step < 4; ++step )
      {
        auto const leaf = parent_reduction_candidate( dag, generalized );
        if ( !leaf )
        {
          break;
        }
        ASSERT_TRUE( dag.node( *leaf ).is_leaf() );
        reduce_parents( dag, *leaf, generalized );
        expect_same_functions( dag, exprs );
      }
    }
  }
}
