#include "cli.hpp"

#include <revsyn/ancilla_free.hpp>
#include <revsyn/benchmarks.hpp>
#include <revsyn/io.hpp>
#include <revsyn/mapper.hpp>
#include <revsyn/simulation.hpp>
#include <revsyn/sweep.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace revsyn::cli
{

namespace
{

struct spec_source
{
  std::string path;
  std::string format = "auto";
  std::string benchmark;

  void add_to( CLI::App* app )
  {
    auto* in = app->add_option( "--in,-i", path, "Specification file (PLA, perm line or cube list)" );
    auto* bm = app->add_option( "--benchmark,-b", benchmark, "Built-in benchmark name" );
    in->excludes( bm );
    app->add_option( "--format", format, "Specification format" )
        ->check( CLI::IsMember( { "auto", "pla", "perm", "cubes" } ) );
  }

  bool given() const { return !path.empty() || !benchmark.empty(); }

  std::string label() const { return benchmark.empty() ? path : benchmark; }

  parsed_spec load( std::ostream& err, int verbosity ) const
  {
    if ( !benchmark.empty() )
    {
      return { benchmark_table( benchmark ), std::nullopt, {} };
    }
    auto spec = parse_spec_file( path, parse_spec_format( format ) );
    if ( verbosity > 0 )
    {
      for ( auto const& w : spec.warnings )
      {
        err << "warning: " << w << "\n";
      }
    }
    return spec;
  }
};

struct knob_flags
{
  unsigned toffoli = 4u;
  bool sharing = true;
  unsigned kernel = 2u;
  bool parent = false;
  bool generalized = false;

  void add_to( CLI::App* app )
  {
    app->add_option( "--toffoli-size,-T", toffoli, "Largest Toffoli gate in lines" )->check( CLI::Range( 2u, 32u ) );
    app->add_option( "--cube-sharing,-C", sharing, "Share common cubes (true/false)" );
    app->add_option( "--kernel-threshold,-K", kernel, "Kernels need more than K cubes; 0 disables" );
    app->add_option( "--parent-reduction,-P", parent, "Reduce leaf parents before falling back to fresh lines" );
    app->add_flag( "--generalized-expansion", generalized, "Allow parent reduction through wider xor nodes" );
  }

  optimize_params params() const
  {
    optimize_params p;
    p.max_and_arity = toffoli;
    p.cube_sharing = sharing;
    p.kernel_threshold = kernel;
    p.parent_reduction = parent;
    p.generalized_expansion = generalized;
    return p;
  }
};

struct verify_flags
{
  std::string mode = "exhaustive";
  std::uint64_t seed = 1u;
  std::uint64_t samples = 1u << 14u;

  void add_to( CLI::App* app )
  {
    app->add_option( "--verify", mode, "Equivalence check" )->check( CLI::IsMember( { "exhaustive", "sample", "off" } ) );
    app->add_option( "--seed", seed, "Seed for sampled verification" );
    app->add_option( "--samples", samples, "Number of sampled assignments" );
  }

  verify_options options( unsigned inputs ) const
  {
    verify_options v;
    v.seed = seed;
    v.samples = samples;
    if ( mode == "off" )
    {
      v.mode = verify_mode::off;
    }
    else if ( mode == "sample" || inputs > 16u )
    {
      v.mode = verify_mode::sample;
    }
    return v;
  }
};

void write_text( std::string const& path, std::string const& text )
{
  std::ofstream out( path );
  if ( !out )
  {
    throw std::runtime_error( "cannot write " + path );
  }
  out << text;
}

std::string summary( cost_report const& c )
{
  std::ostringstream s;
  s << "qc " << c.quantum_cost << " gates " << c.gate_count << " nct " << c.nct_gate_count << " lines " << c.line_count
    << " garbage " << c.garbage_count << " ancilla " << c.ancilla_count << " peres " << c.peres_pairs;
  return s.str();
}

double seconds_since( std::chrono::steady_clock::time_point start )
{
  return std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
}

/* `--mode synth` is accepted in place of the subcommand. */
std::vector<std::string> normalize_arguments( int argc, char const* const* argv )
{
  std::vector<std::string> args( argv + 1, argv + argc );
  for ( std::size_t i = 0; i < args.size(); ++i )
  {
    if ( args[i] == "--mode" && i + 1u < args.size() )
    {
      auto const mode = args[i + 1u];
      args.erase( args.begin() + static_cast<long>( i ), args.begin() + static_cast<long>( i ) + 2 );
      args.insert( args.begin(), mode );
      break;
    }
    if ( args[i].rfind( "--mode=", 0u ) == 0u )
    {
      auto const mode = args[i].substr( 7u );
      args.erase( args.begin() + static_cast<long>( i ) );
      args.insert( args.begin(), mode );
      break;
    }
  }
  return args;
}

} // namespace

int run_cli( int argc, char const* const* argv, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Reversible logic synthesis from ESOP expressions", "revsyn" };
  app.require_subcommand( 1 );
  app.fallthrough();
  int verbosity = 0;
  app.add_flag( "-v,--verbose", verbosity, "More output on stderr" );

  spec_source synth_spec;
  knob_flags synth_knobs;
  verify_flags synth_verify;
  std::string synth_out, synth_report;
  bool synth_timing = false, synth_print = false;
  auto* synth = app.add_subcommand( "synth", "Synthesize a circuit with the ESOP flow" );
  synth_spec.add_to( synth );
  synth_knobs.add_to( synth );
  synth_verify.add_to( synth );
  synth->add_option( "--out,-o", synth_out, "Circuit file" );
  synth->add_option( "--report,-r", synth_report, "CSV report file" );
  synth->add_flag( "--timing", synth_timing, "Record the runtime in the report" );
  synth->add_flag( "--print", synth_print, "Print the circuit to stdout" );

  spec_source af_spec;
  std::string af_out, af_report, af_policy = "unique";
  unsigned af_exhaustive = 0u, af_threads = 0u;
  bool af_print = false;
  auto* af = app.add_subcommand( "ancilla-free", "Rule-based synthesis without additional lines" );
  af_spec.add_to( af );
  af->add_option( "--exhaustive", af_exhaustive, "Run every reversible function on this many variables" )
      ->check( CLI::Range( 1u, 3u ) );
  af->add_option( "--policy", af_policy, "Pair rule of the CNOT step" )->check( CLI::IsMember( { "unique", "common" } ) );
  af->add_option( "--threads", af_threads, "Worker threads for --exhaustive (0 = all cores)" );
  af->add_option( "--out,-o", af_out, "Circuit file" );
  af->add_option( "--report,-r", af_report, "CSV report file" );
  af->add_flag( "--print", af_print, "Print the circuit to stdout" );

  std::string cost_circuit;
  auto* cost = app.add_subcommand( "cost", "Cost a circuit file" );
  cost->add_option( "circuit,--circuit", cost_circuit, "Circuit file" )->required();

  std::string verify_circuit;
  spec_source verify_spec;
  verify_flags verify_opts;
  auto* verify = app.add_subcommand( "verify", "Check a circuit file against a specification" );
  verify->add_option( "--circuit", verify_circuit, "Circuit file" )->required();
  verify_spec.add_to( verify );
  verify_opts.add_to( verify );

  spec_source sweep_spec;
  std::vector<std::string> sweep_grid_tokens;
  std::string sweep_report;
  unsigned sweep_threads = 0u;
  bool sweep_timing = false;
  verify_flags sweep_verify;
  auto* sweep = app.add_subcommand( "sweep", "Synthesize over a grid of knob settings" );
  sweep_spec.add_to( sweep );
  sweep->add_option( "--grid", sweep_grid_tokens, "Knob grid, e.g. T=3,4 C=0,1 K=0..7 P=0,1" );
  sweep->add_option( "--report,-r", sweep_report, "CSV file (stdout if omitted)" );
  sweep->add_option( "--threads", sweep_threads, "Worker threads (0 = all cores)" );
  sweep->add_flag( "--timing", sweep_timing, "Record runtimes" );
  sweep_verify.add_to( sweep );

  auto* list = app.add_subcommand( "benchmarks", "List the built-in benchmark functions" );

  auto const args = normalize_arguments( argc, argv );
  std::vector<std::string> reversed( args.rbegin(), args.rend() );
  try
  {
    app.parse( reversed );
  }
  catch ( CLI::ParseError const& e )
  {
    auto const code = app.exit( e, out, err );
    return code == 0 ? exit_code::ok : exit_code::error;
  }

  try
  {
    if ( *list )
    {
      for ( auto const& b : benchmark_catalog() )
      {
        out << std::left << std::setw( 16 ) << b.name << ' ' << b.inputs << '/' << b.outputs << ( b.faithful ? "  " : " *" )
            << ' ' << b.description << "\n";
      }
      out << "* stand-in with the published interface\n";
      return exit_code::ok;
    }

    if ( *synth )
    {
      if ( !synth_spec.given() )
      {
        throw std::invalid_argument( "synth needs --in or --benchmark" );
      }
      auto const spec = synth_spec.load( err, verbosity );
      synthesis_options so;
      so.params = synth_knobs.params();
      so.verify = synth_verify.options( spec.table.num_inputs() );
      so.max_inputs = 24u;
      auto const start = std::chrono::steady_clock::now();
      synthesis_result result;
      try
      {
        result = synthesize( spec.table, so );
      }
      catch ( verification_error const& e )
      {
        err << "error: " << e.what() << "\n";
        return exit_code::verification_failed;
      }
      result.cost.runtime = seconds_since( start );
      if ( verbosity > 0 )
      {
        for ( auto const& p : result.passes )
        {
          err << p.pass << ": " << p.applications << " applications, " << p.nodes_touched << " nodes touched\n";
        }
        std::map<std::string, std::size_t> rules;
        for ( auto const& t : result.trace )
        {
          ++rules[to_string( t.rule )];
        }
        for ( auto const& [rule, count] : rules )
        {
          err << "target rule " << rule << ": " << count << "\n";
        }
      }
      if ( !synth_out.empty() )
      {
        write_circuit_file( synth_out, result.circ, result.cost );
      }
      if ( synth_print )
      {
        write_circuit( out, result.circ, result.cost );
      }
      if ( !synth_report.empty() )
      {
        write_text( synth_report, report_header() + "\n" +
                                      report_line( { synth_spec.label(), "synth", so.params, result.cost, synth_timing } ) + "\n" );
      }
      out << synth_spec.label() << ": " << summary( result.cost ) << "\n";
      return exit_code::ok;
    }

    if ( *af )
    {
      ancilla_free_options ao;
      ao.policy = af_policy == "common" ? t2_policy::common_control : t2_policy::unique_control;
      if ( af_exhaustive > 0u )
      {
        auto const s = exhaustive_ancilla_free( af_exhaustive, ao, af_threads );
        if ( !af_report.empty() )
        {
          auto const perms = all_permutations( af_exhaustive );
          std::ostringstream csv;
          csv << exhaustive_csv_header() << "\n";
          for ( auto const& row : s.rows )
          {
            csv << exhaustive_csv_line( row, perms[row.index] ) << "\n";
          }
          write_text( af_report, csv.str() );
        }
        out << std::fixed << std::setprecision( 3 ) << "functions " << s.functions << " converged " << s.succeeded
            << " mean_gates " << s.mean_gates << " mean_qc " << s.mean_quantum_cost << " max_ancilla " << s.max_ancilla
            << "\n";
        return s.succeeded == s.functions ? exit_code::ok : exit_code::not_converged;
      }
      if ( !af_spec.given() )
      {
        throw std::invalid_argument( "ancilla-free needs --in, --benchmark or --exhaustive" );
      }
      auto const spec = af_spec.load( err, verbosity );
      if ( !spec.table.is_reversible() )
      {
        throw std::invalid_argument( "ancilla-free synthesis needs a reversible specification" );
      }
      auto const start = std::chrono::steady_clock::now();
      ancilla_free_result result;
      try
      {
        result = ancilla_free_synthesize( spec.table.to_permutation(), ao );
      }
      catch ( verification_error const& e )
      {
        err << "error: " << e.what() << "\n";
        return exit_code::verification_failed;
      }
      if ( !result.converged )
      {
        err << "error: did not converge: " << result.message << "\n";
        return exit_code::not_converged;
      }
      result.cost.runtime = seconds_since( start );
      if ( verbosity > 0 )
      {
        for ( auto const& t : result.transformations )
        {
          err << to_string( t ) << "\n";
        }
      }
      if ( !af_out.empty() )
      {
        write_circuit_file( af_out, result.circ, result.cost );
      }
      if ( af_print )
      {
        write_circuit( out, result.circ, result.cost );
      }
      if ( !af_report.empty() )
      {
        optimize_params none;
        none.max_and_arity = spec.table.num_inputs();
        none.cube_sharing = false;
        none.kernel_threshold = 0u;
        write_text( af_report,
                    report_header() + "\n" + report_line( { af_spec.label(), "ancilla-free", none, result.cost, false } ) + "\n" );
      }
      out << af_spec.label() << ": " << summary( result.cost ) << "\n";
      return exit_code::ok;
    }

    if ( *cost )
    {
      auto c = read_circuit_file( cost_circuit );
      out << summary( quantum_cost( c ) ) << "\n";
      return exit_code::ok;
    }

    if ( *verify )
    {
      if ( !verify_spec.given() )
      {
        throw std::invalid_argument( "verify needs --in or --benchmark" );
      }
      auto const c = read_circuit_file( verify_circuit );
      auto const spec = verify_spec.load( err, verbosity );
      auto const r = verify_equivalence( c, spec.table, verify_opts.options( spec.table.num_inputs() ) );
      out << ( r.equivalent ? "equivalent" : "not equivalent: " + r.message ) << "\n";
      return r.equivalent ? exit_code::ok : exit_code::verification_failed;
    }

    if ( *sweep )
    {
      if ( !sweep_spec.given() )
      {
        throw std::invalid_argument( "sweep needs --in or --benchmark" );
      }
      auto const spec = sweep_spec.load( err, verbosity );
      std::string grid_text;
      for ( auto const& t : sweep_grid_tokens )
      {
        grid_text += t + " ";
      }
      auto const configs = sweep_grid::parse( grid_text ).configurations();
      sweep_options so;
      so.threads = sweep_threads;
      so.timing = sweep_timing;
      so.verify = sweep_verify.options( spec.table.num_inputs() );
      auto const rows = run_sweep( spec.table, configs, so );
      std::ostringstream csv;
      csv << report_header() << "\n";
      bool failed = false;
      for ( auto const& row : rows )
      {
        if ( !row.ok )
        {
          err << "error: T=" << row.params.max_and_arity << " C=" << row.params.cube_sharing
              << " K=" << row.params.kernel_threshold << " P=" << row.params.parent_reduction << ": " << row.error << "\n";
          failed = true;
          continue;
        }
        csv << report_line( { sweep_spec.label(), "sweep", row.params, row.cost, sweep_timing } ) << "\n";
      }
      if ( sweep_report.empty() )
      {
        out << csv.str();
      }
      else
      {
        write_text( sweep_report, csv.str() );
        auto const front = pareto_front( rows );
        out << rows.size() << " settings, " << front.size() << " non-dominated (qc, garbage) points:";
        for ( auto i : front )
        {
          out << " (" << rows[i].cost.quantum_cost << ", " << rows[i].cost.garbage_count << ")";
        }
        out << "\n";
      }
      return failed ? exit_code::verification_failed : exit_code::ok;
    }
  }
  catch ( std::exception const& e )
  {
    err << "error: " << e.what() << "\n";
    return exit_code::error;
  }
  return exit_code::error;
}

} // namespace revsyn::cli
