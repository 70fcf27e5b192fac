#include "support.hpp"

#include <revsyn/benchmarks.hpp>
#include <revsyn/sweep.hpp>

#include <gtest/gtest.h>

#include <atomic>
#include <stdexcept>
#include <vector>

using namespace revsyn;

TEST( grid, parse )
{
  auto const g = sweep_grid::parse( "T=3,4 C=0,1 K=0..7 P=0,1" );
  EXPECT_EQ( g.toffoli_sizes, ( std::vector<unsigned>{ 3u, 4u } ) );
  EXPECT_EQ( g.kernel_thresholds.size(), 8u );
  EXPECT_EQ( g.configurations().size(), 64u );
  auto const h = sweep_grid::parse( "K=5,2..3 C=true" );
  EXPECT_EQ( h.kernel_thresholds, ( std::vector<unsigned>{ 2u, 3u, 5u } ) );
  EXPECT_EQ( h.cube_sharing, ( std::vector<bool>{ true } ) );
  EXPECT_EQ( h.toffoli_sizes, ( std::vector<unsigned>{ 3u, 4u } ) );
}

TEST( grid, errors )
{
  EXPECT_THROW( sweep_grid::parse( "X=1" ), std::invalid_argument );
  EXPECT_THROW( sweep_grid::parse( "K" ), std::invalid_argument );
  EXPECT_THROW( sweep_grid::parse( "K=3..1" ), std::invalid_argument );
  EXPECT_THROW( sweep_grid::parse( "C=2" ), std::invalid_argument );
  EXPECT_THROW( sweep_grid::parse( "T=1" ), std::invalid_argument );
  EXPECT_THROW( sweep_grid::parse( "K=a" ), std::invalid_argument );
}

TEST( grid, configuration_order )
{
  auto const configs = sweep_grid::parse( "T=3,4 C=0,1 K=0,1 P=0,1" ).configurations();
  ASSERT_EQ( configs.size(), 16u );
  EXPECT_EQ( configs.front().max_and_arity, 3u );
  EXPECT_FALSE( configs.front().cube_sharing );
  EXPECT_TRUE( configs[1].parent_reduction );
  EXPECT_EQ( configs[2].kernel_threshold, 1u );
  EXPECT_EQ( configs.back().max_and_arity, 4u );
}

TEST( pareto, dominance )
{
  std::vector<sweep_row> rows( 5u );
  auto set = [&]( std::size_t i, std::uint64_t qc, std::uint64_t g ) {
    rows[i].ok = true;
    rows[i].cost.quantum_cost = qc;
    rows[i].cost.garbage_count = g;
  };
  set( 0u, 10u, 5u );
  set( 1u, 8u, 6u );
  set( 2u, 10u, 5u );
  set( 3u, 12u, 6u );
  rows[4].cost.quantum_cost = 1u;
  EXPECT_EQ( pareto_front( rows ), ( std::vector<std::size_t>{ 0u, 1u } ) );
}

TEST( pareto, front_is_mutually_non_dominated )
{
  test::rng_t rng( 149u );
  for ( int trial = 0; trial < 50; ++trial )
  {
    std::vector<sweep_row> rows( 20u );
    for ( auto& r : rows )
    {
      r.ok = true;
      r.cost.quantum_cost = rng() % 10u;
      r.cost.garbage_count = rng() % 10u;
    }
    auto const front = pareto_front( rows );
    ASSERT_FALSE( front.empty() );
    for ( auto i : front )
    {
      for ( std::size_t j = 0; j < rows.size(); ++j )
      {
        auto const& a = rows[i].cost;
        auto const& b = rows[j].cost;
        bool const dom = b.quantum_cost <= a.quantum_cost && b.garbage_count <= a.garbage_count &&
                         ( b.quantum_cost < a.quantum_cost || b.garbage_count < a.garbage_count );
        EXPECT_FALSE( dom );
      }
    }
  }
}

TEST( sweep, rows_in_configuration_order_and_deterministic )
{
  auto const spec = benchmark_table( "4mod5" );
  auto const configs = sweep_grid::parse( "T=3,4 C=0,1 K=0,2 P=0,1" ).configurations();
  sweep_options one, many;
  one.threads = 1u;
  many.threads = 4u;
  auto const a = run_sweep( spec, configs, one );
  auto const b = run_sweep( spec, configs, many );
  ASSERT_EQ( a.size(), configs.size() );
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    EXPECT_TRUE( a[i].ok ) << a[i].error;
    EXPECT_EQ( a[i].params.kernel_threshold, configs[i].kernel_threshold );
    EXPECT_EQ( a[i].cost.quantum_cost, b[i].cost.quantum_cost );
    EXPECT_EQ( a[i].cost.garbage_count, b[i].cost.garbage_count );
    EXPECT_EQ( a[i].cost.runtime, 0.0 );
  }
}

TEST( parallel_for, visits_each_index_once )
{
  std::vector<std::atomic<int>> hits( 1000u );
  parallel_for( hits.size(), 4u, [&]( std::size_t i ) { ++hits[i]; } );
  for ( auto const& h : hits )
  {
    EXPECT_EQ( h.load(), 1 );
  }
  EXPECT_THROW( parallel_for( 10u, 3u, []( std::size_t i ) {
                  if ( i == 7u )
                  {
                    throw std::runtime_error( "boom" );
                  }
                } ),
                std::runtime_error );
}

TEST( exhaustive, two_variable_flows )
{
  EXPECT_EQ( all_permutations( 2u ).size(), 24u );
  EXPECT_THROW( all_permutations( 4u ), std::invalid_argument );
  auto const s = exhaustive_synthesis( 2u, {}, 1u );
  EXPECT_EQ( s.functions, 24u );
  EXPECT_EQ( s.succeeded, 24u );
  auto const a = exhaustive_ancilla_free( 2u, {}, 1u );
  EXPECT_EQ( a.succeeded, 24u );
  EXPECT_EQ( a.max_ancilla, 0u );
  EXPECT_EQ( a.mean_garbage, 0.0 );
  EXPECT_EQ( exhaustive_csv_line( a.rows[0], all_permutations( 2u )[0] ), "0,0 1 2 3,1,0,0,2,0,0" );
}
