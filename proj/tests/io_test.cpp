#include "support.hpp"

#include <revsyn/anf.hpp>
#include <revsyn/benchmarks.hpp>
#include <revsyn/io.hpp>
#include <revsyn/mapper.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

using namespace revsyn;

TEST( pla, not_gate )
{
  auto const s = parse_spec_string( ".i 1\n.o 1\n0 1\n1 0\n" );
  EXPECT_EQ( s.table, truth_table( 1u, 1u, { 1u, 0u } ) );
  EXPECT_TRUE( s.warnings.empty() );
}

TEST( pla, leftmost_column_is_x1 )
{
  auto const s = parse_spec_string( ".i 2\n.o 2\n10 10\n" );
  EXPECT_TRUE( s.table.get( 1u, 0u ) );
  EXPECT_FALSE( s.table.get( 2u, 0u ) );
  EXPECT_FALSE( s.table.get( 1u, 1u ) );
}

TEST( pla, dont_cares )
{
  auto const s = parse_spec_string( ".i 3\n.o 2\n1-- 1-\n.e\n" );
  for ( std::uint64_t x = 0; x < 8u; ++x )
  {
    EXPECT_EQ( s.table.get( x, 0u ), bool( x & 1u ) );
    EXPECT_FALSE( s.table.get( x, 1u ) );
  }
  ASSERT_EQ( s.warnings.size(), 1u );
}

TEST( pla, labels )
{
  auto const s = parse_spec_string( ".i 2\n.o 1\n.ilb a b\n.ob f\n.p 1\n11 1\n" );
  EXPECT_EQ( s.table.input_names(), ( std::vector<std::string>{ "a", "b" } ) );
  EXPECT_EQ( s.table.output_names(), ( std::vector<std::string>{ "f" } ) );
}

TEST( pla, errors )
{
  EXPECT_THROW( parse_spec_string( ".i 2\n11 1\n", spec_format::pla ), parse_error );
  EXPECT_THROW( parse_spec_string( ".i 2\n.o 1\n1 1\n" ), parse_error );
  EXPECT_THROW( parse_spec_string( ".i 2\n.o 1\n11 1\n11 0\n" ), parse_error );
  EXPECT_THROW( parse_spec_string( ".i 2\n.o 1\n1x 1\n" ), parse_error );
  EXPECT_THROW( parse_spec_string( ".i x\n.o 1\n" ), parse_error );
  EXPECT_THROW( parse_spec_string( "" ), parse_error );
  try
  {
    parse_spec_string( ".i 2\n.o 1\n11 1\n111 1\n" );
    FAIL();
  }
  catch ( parse_error const& e )
  {
    EXPECT_EQ( e.line(), 4u );
  }
}

TEST( pla, write_read_round_trip )
{
  test::rng_t rng( 137u );
  for ( int trial = 0; trial < 30; ++trial )
  {
    auto const tt = test::random_table( rng, 1u + trial % 7, 1u + trial % 4 );
    EXPECT_EQ( parse_spec_string( write_pla( tt ) ).table, tt );
  }
}

TEST( perm, nth_prime3 )
{
  auto const s = parse_spec_string( "perm 0 2 3 5 7 1 4 6\n" );
  ASSERT_TRUE( s.perm );
  EXPECT_EQ( *s.perm, nth_prime_inc( 3u ) );
  EXPECT_EQ( s.table, truth_table_from_permutation( nth_prime_inc( 3u ) ) );
}

TEST( perm, errors )
{
  EXPECT_THROW( parse_spec_string( "perm 0 0 1 2" ), parse_error );
  EXPECT_THROW( parse_spec_string( "perm 0 1 2" ), parse_error );
  EXPECT_THROW( parse_spec_string( "perm 0 1\nperm 1 0" ), parse_error );
}

TEST( cubes, four_mod_five )
{
  auto const s = parse_spec_string( "1 ^ x1 ^ x2 ^ x1x2 ^ x3 ^ x2x3 ^ x4 ^ x1x4 ^ x3x4\n" );
  ASSERT_EQ( s.table.num_inputs(), 4u );
  auto const expr = anf_from_truth_table( s.table );
  EXPECT_EQ( expr.size(), 9u );
  for ( std::uint64_t x = 0; x < 16u; ++x )
  {
    EXPECT_EQ( s.table.get( x, 0u ), x % 5u == 0u );
  }
}

TEST( cubes, multiple_outputs_and_width )
{
  auto const s = parse_spec_string( ".i 3\nx1*x2\nx3 ^ 1\n0\n", spec_format::cube_list );
  EXPECT_EQ( s.table.num_inputs(), 3u );
  EXPECT_EQ( s.table.num_outputs(), 3u );
  EXPECT_THROW( parse_spec_string( ".i 2\nx3\n", spec_format::cube_list ), parse_error );
  EXPECT_THROW( parse_spec_string( "x1 ^ ^ x2\n" ), parse_error );
  EXPECT_THROW( parse_spec_string( "x1 ^ y2\n", spec_format::cube_list ), parse_error );
}

TEST( spec_format, names )
{
  EXPECT_EQ( parse_spec_format( "auto" ), spec_format::automatic );
  EXPECT_EQ( parse_spec_format( "pla" ), spec_format::pla );
  EXPECT_EQ( parse_spec_format( "perm" ), spec_format::permutation );
  EXPECT_EQ( parse_spec_format( "cubes" ), spec_format::cube_list );
  EXPECT_THROW( parse_spec_format( "blif" ), std::invalid_argument );
}

TEST( spec_file, extension_and_missing )
{
  auto const dir = std::filesystem::temp_directory_path() / "revsyn_io_test";
  std::filesystem::create_directories( dir );
  {
    std::ofstream( dir / "f.perm" ) << "perm 1 0\n";
  }
  EXPECT_EQ( parse_spec_file( dir / "f.perm" ).table, truth_table( 1u, 1u, { 1u, 0u } ) );
  EXPECT_THROW( parse_spec_file( dir / "missing.pla" ), std::runtime_error );
  std::filesystem::remove_all( dir );
}

TEST( tfc, small_gates )
{
  circuit c;
  auto a = c.add_input( "a" );
  auto b = c.add_input( "b" );
  auto k = c.add_constant( "k" );
  c.add_gate( gate::not_gate( a ) );
  c.add_gate( gate::toffoli( { a, b }, k ) );
  c.assign_output( k, 0u, "f" );
  auto const text = circuit_to_string( c );
  EXPECT_NE( text.find( "\nt1 a\n" ), std::string::npos );
  EXPECT_NE( text.find( "\nt3 a,b,k\n" ), std::string::npos );
  EXPECT_NE( text.find( ".c k=0" ), std::string::npos );
  EXPECT_NE( text.find( ".g a,b" ), std::string::npos );
}

TEST( tfc, round_trip_fuzz )
{
  test::rng_t rng( 139u );
  for ( int trial = 0; trial < 200; ++trial )
  {
    auto c = test::random_circuit( rng, 1u + trial % 5, trial % 3, trial % 17 );
    unsigned o = 0u;
    for ( line_id l = 0; l < c.num_lines(); ++l )
    {
      if ( rng() % 2u )
      {
        c.assign_output( l, o++, "y" + std::to_string( o ) );
      }
    }
    auto const back = read_circuit_string( circuit_to_string( c, quantum_cost( c ) ) );
    ASSERT_EQ( back, c ) << circuit_to_string( c );
    EXPECT_EQ( circuit_to_string( back ), circuit_to_string( c ) );
  }
}

TEST( tfc, synthesized_files_reverify )
{
  for ( auto const* name : { "4mod5", "rd32", "nth_prime4_inc", "hwb4" } )
  {
    auto const spec = benchmark_table( name );
    auto const r = synthesize( spec );
    auto const back = read_circuit_string( circuit_to_string( r.circ, r.cost ) );
    EXPECT_TRUE( test::realizes( back, spec ) ) << name;
    auto const cost = quantum_cost( back );
    EXPECT_EQ( cost.quantum_cost, r.cost.quantum_cost );
    EXPECT_EQ( cost.garbage_count, r.cost.garbage_count );
    EXPECT_EQ( cost.ancilla_count, r.cost.ancilla_count );
  }
}

TEST( tfc, read_errors )
{
  EXPECT_THROW( read_circuit_string( "BEGIN\nt1 a\nEND\n" ), parse_error );
  EXPECT_THROW( read_circuit_string( ".v a,b\n.i a,b\nBEGIN\nt2 a,c\nEND\n" ), parse_error );
  EXPECT_THROW( read_circuit_string( ".v a,b\n.i a,b\nBEGIN\nt2 a,a\nEND\n" ), parse_error );
  EXPECT_THROW( read_circuit_string( ".v a,b\n.i a,b\nBEGIN\nt3 a,b\nEND\n" ), parse_error );
  EXPECT_THROW( read_circuit_string( ".v a,b\n.i a\nBEGIN\nEND\n" ), parse_error );
  EXPECT_THROW( read_circuit_string( ".v a,b\n.i a,b\nBEGIN\nq2 a,b\nEND\n" ), parse_error );
}

TEST( report, header_and_row )
{
  EXPECT_EQ( report_header(), "spec,mode,T,C,K,P,qc,gates,nct_gates,lines,garbage,ancilla,peres_pairs,runtime" );
  report_row row;
  row.spec = "4mod5";
  row.mode = "synth";
  row.cost.quantum_cost = 12u;
  row.cost.runtime = 0.5;
  EXPECT_EQ( report_line( row ), "4mod5,synth,4,1,2,0,12,0,0,0,0,0,0," );
  row.include_runtime = true;
  EXPECT_EQ( report_line( row ), "4mod5,synth,4,1,2,0,12,0,0,0,0,0,0,0.5000" );
}
