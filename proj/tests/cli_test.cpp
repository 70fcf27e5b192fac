#include "cli.hpp"

#include <revsyn/io.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace
{

struct invocation
{
  int code;
  std::string out;
  std::string err;
};

invocation call( std::vector<std::string> args )
{
  args.insert( args.begin(), "revsyn" );
  std::vector<char const*> argv;
  for ( auto const& a : args )
  {
    argv.push_back( a.c_str() );
  }
  std::ostringstream out, err;
  auto const code = revsyn::cli::run_cli( static_cast<int>( argv.size() ), argv.data(), out, err );
  return { code, out.str(), err.str() };
}

class cli : public ::testing::Test
{
protected:
  std::filesystem::path dir;

  void SetUp() override
  {
    dir = std::filesystem::temp_directory_path() /
          ( "revsyn_cli_" + std::string( ::testing::UnitTest::GetInstance()->current_test_info()->name() ) );
    std::filesystem::create_directories( dir );
  }

  void TearDown() override { std::filesystem::remove_all( dir ); }

  std::string file( std::string const& name, std::string const& text ) const
  {
    auto const p = dir / name;
    std::ofstream( p ) << text;
    return p.string();
  }

  std::string path( std::string const& name ) const { return ( dir / name ).string(); }

  static std::string slurp( std::string const& p )
  {
    std::ifstream in( p );
    return { std::istreambuf_iterator<char>( in ), std::istreambuf_iterator<char>() };
  }
};

} // namespace

TEST_F( cli, synth_pla_writes_circuit_and_report )
{
  auto const spec = file( "4mod5.pla", ".i 4\n.o 1\n0000 1\n1010 1\n0101 1\n1111 1\n" );
  auto const r = call( { "synth", "--in", spec, "-T", "3", "-C", "true", "-K", "0", "-P", "false", "-o", path( "c.tfc" ),
                         "-r", path( "r.csv" ) } );
  ASSERT_EQ( r.code, 0 ) << r.err;
  auto const report = slurp( path( "r.csv" ) );
  EXPECT_EQ( report.rfind( revsyn::report_header() + "\n", 0u ), 0u );
  EXPECT_NE( report.find( ",synth,3,1,0,0," ), std::string::npos );
  auto const check = call( { "verify", "--circuit", path( "c.tfc" ), "--in", spec } );
  EXPECT_EQ( check.code, 0 ) << check.err;
  EXPECT_EQ( call( { "cost", path( "c.tfc" ) } ).code, 0 );
}

TEST_F( cli, mode_flag_and_verbose_anywhere )
{
  auto const r = call( { "--mode", "synth", "-b", "nth_prime3_inc", "-v" } );
  EXPECT_EQ( r.code, 0 ) << r.err;
  EXPECT_NE( r.err.find( "target rule" ), std::string::npos );
  EXPECT_EQ( call( { "-v", "synth", "-b", "rd32" } ).code, 0 );
}

TEST_F( cli, verify_mismatch_exits_two )
{
  auto const spec = file( "not.pla", ".i 1\n.o 1\n0 1\n1 0\n" );
  auto const wire = file( "wire.tfc", ".v a\n.i a\n.o a\nBEGIN\nEND\n" );
  EXPECT_EQ( call( { "verify", "--circuit", wire, "--in", spec } ).code, 2 );
}

TEST_F( cli, ancilla_free_single_and_exhaustive )
{
  auto const spec = file( "p.perm", "perm 7 1 4 3 0 2 6 5\n" );
  auto const r = call( { "ancilla-free", "--in", spec, "--print" } );
  EXPECT_EQ( r.code, 0 ) << r.err;
  EXPECT_NE( r.out.find( "ancilla 0" ), std::string::npos );
  auto const ex = call( { "ancilla-free", "--exhaustive", "2", "-r", path( "ex.csv" ) } );
  EXPECT_EQ( ex.code, 0 );
  EXPECT_NE( ex.out.find( "converged 24" ), std::string::npos );
  auto const csv = slurp( path( "ex.csv" ) );
  EXPECT_EQ( std::count( csv.begin(), csv.end(), '\n' ), 25 );
}

TEST_F( cli, ancilla_free_rejects_irreversible )
{
  auto const spec = file( "and.pla", ".i 2\n.o 1\n11 1\n" );
  EXPECT_EQ( call( { "ancilla-free", "--in", spec } ).code, 1 );
}

TEST_F( cli, sweep_rows )
{
  auto const r = call( { "sweep", "-b", "4mod5", "--grid", "T=3,4", "C=0,1", "K=0..1", "P=0" } );
  ASSERT_EQ( r.code, 0 ) << r.err;
  EXPECT_EQ( std::count( r.out.begin(), r.out.end(), '\n' ), 9 );
  auto const s = call( { "sweep", "-b", "4mod5", "--grid", "K=0", "-r", path( "s.csv" ) } );
  EXPECT_EQ( s.code, 0 );
  EXPECT_NE( s.out.find( "non-dominated" ), std::string::npos );
}

TEST_F( cli, bad_input )
{
  EXPECT_EQ( call( {} ).code, 1 );
  EXPECT_EQ( call( { "synth" } ).code, 1 );
  EXPECT_EQ( call( { "synth", "-b", "nope" } ).code, 1 );
  EXPECT_EQ( call( { "synth", "-b", "rd32", "-T", "1" } ).code, 1 );
  EXPECT_EQ( call( { "synth", "-b", "rd32", "--verify", "maybe" } ).code, 1 );
  EXPECT_EQ( call( { "synth", "--in", path( "missing.pla" ) } ).code, 1 );
  EXPECT_EQ( call( { "sweep", "-b", "rd32", "--grid", "Q=1" } ).code, 1 );
  EXPECT_EQ( call( { "--help" } ).code, 0 );
}

TEST_F( cli, benchmarks_list )
{
  auto const r = call( { "benchmarks" } );
  EXPECT_EQ( r.code, 0 );
  EXPECT_NE( r.out.find( "present_sbox" ), std::string::npos );
}

TEST_F( cli, deterministic_output )
{
  auto const a = call( { "synth", "-b", "rd53", "--print" } );
  auto const b = call( { "synth", "-b", "rd53", "--print" } );
  EXPECT_EQ( a.out, b.out );
}
