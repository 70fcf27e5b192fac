#include <revsyn/ancilla_free.hpp>
#include <revsyn/anf.hpp>
#include <revsyn/benchmarks.hpp>
#include <revsyn/mapper.hpp>
#include <revsyn/simulation.hpp>
#include <revsyn/sweep.hpp>

#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace revsyn;

static truth_column random_column( unsigned n )
{
  std::mt19937_64 rng( n );
  std::vector<std::uint64_t> words( n < 6u ? 1u : std::size_t{ 1 } << ( n - 6u ) );
  for ( auto& w : words )
  {
    w = rng();
  }
  if ( n < 6u )
  {
    words[0] &= ( std::uint64_t{ 1 } << ( 1u << n ) ) - 1u;
  }
  return truth_column::from_words( n, words );
}

static void anf_transform_column( benchmark::State& state )
{
  auto const col = random_column( static_cast<unsigned>( state.range( 0 ) ) );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( anf_transform( col ) );
  }
  state.SetComplexityN( state.range( 0 ) );
}
BENCHMARK( anf_transform_column )->DenseRange( 8, 20, 4 );

static void synthesize_benchmark( benchmark::State& state, char const* name, unsigned t )
{
  auto const spec = benchmark_table( name );
  synthesis_options options;
  options.params.max_and_arity = t;
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( synthesize( spec, options ).cost );
  }
}
BENCHMARK_CAPTURE( synthesize_benchmark, rd53_T3, "rd53", 3u );
BENCHMARK_CAPTURE( synthesize_benchmark, hwb6_T4, "hwb6", 4u );
BENCHMARK_CAPTURE( synthesize_benchmark, present_T4, "present_sbox", 4u );
BENCHMARK_CAPTURE( synthesize_benchmark, aes_T4, "aes_sbox", 4u )->Unit( benchmark::kMillisecond );

static void present_sweep( benchmark::State& state )
{
  auto const spec = benchmark_table( "present_sbox" );
  auto const configs = sweep_grid{}.configurations();
  sweep_options options;
  options.threads = 1u;
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( run_sweep( spec, configs, options ).size() );
  }
}
BENCHMARK( present_sweep )->Unit( benchmark::kMillisecond );

static void ancilla_free_random( benchmark::State& state )
{
  auto const n = static_cast<unsigned>( state.range( 0 ) );
  std::mt19937_64 rng( 99u );
  std::vector<permutation> perms;
  for ( int i = 0; i < 64; ++i )
  {
    std::vector<std::uint64_t> images( std::size_t{ 1 } << n );
    std::iota( images.begin(), images.end(), 0u );
    std::shuffle( images.begin(), images.end(), rng );
    perms.emplace_back( images );
  }
  std::size_t i = 0u;
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( ancilla_free_synthesize( perms[i++ % perms.size()] ).converged );
  }
}
BENCHMARK( ancilla_free_random )->Arg( 3 )->Arg( 4 );

static void simulate_and_verify( benchmark::State& state )
{
  auto const spec = benchmark_table( "cycle10_2" );
  auto const r = synthesize( spec );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( verify_equivalence( r.circ, spec ).equivalent );
  }
}
BENCHMARK( simulate_and_verify );

BENCHMARK_MAIN();
