#include <revsyn/sweep.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace revsyn
{

namespace
{

std::vector<unsigned> parse_values( std::string const& key, std::string const& list )
{
  std::vector<unsigned> values;
  std::istringstream is( list );
  std::string item;
  auto number = [&]( std::string const& s ) -> unsigned {
    if ( s == "true" )
    {
      return 1u;
    }
    if ( s == "false" )
    {
      return 0u;
    }
    if ( s.empty() || !std::all_of( s.begin(), s.end(), []( unsigned char c ) { return std::isdigit( c ); } ) || s.size() > 6u )
    {
      throw std::invalid_argument( "bad value '" + s + "' for " + key );
    }
    return static_cast<unsigned>( std::stoul( s ) );
  };
  while ( std::getline( is, item, ',' ) )
  {
    if ( auto const dots = item.find( ".." ); dots != std::string::npos )
    {
      auto const lo = number( item.substr( 0u, dots ) );
      auto const hi = number( item.substr( dots + 2u ) );
      if ( lo > hi )
      {
        throw std::invalid_argument( "empty range " + item + " for " + key );
      }
      for ( auto v = lo; v <= hi; ++v )
      {
        values.push_back( v );
      }
    }
    else
    {
      values.push_back( number( item ) );
    }
  }
  if ( values.empty() )
  {
    throw std::invalid_argument( "no values for " + key );
  }
  std::sort( values.begin(), values.end() );
  values.erase( std::unique( values.begin(), values.end() ), values.end() );
  return values;
}

std::vector<bool> as_bools( std::string const& key, std::vector<unsigned> const& values )
{
  std::vector<bool> result;
  for ( auto v : values )
  {
    if ( v > 1u )
    {
      throw std::invalid_argument( key + " takes 0 or 1" );
    }
    result.push_back( v == 1u );
  }
  return result;
}

} // namespace

sweep_grid sweep_grid::parse( std::string const& text )
{
  sweep_grid grid;
  std::istringstream is( text );
  std::string token;
  while ( is >> token )
  {
    auto const eq = token.find( '=' );
    if ( eq == std::string::npos || eq == 0u )
    {
      throw std::invalid_argument( "grid entries look like K=0..7, got '" + token + "'" );
    }
    auto const key = token.substr( 0u, eq );
    auto const values = parse_values( key, token.substr( eq + 1u ) );
    if ( key == "T" )
    {
      if ( values.front() < 2u )
      {
        throw std::invalid_argument( "T must be at least 2" );
      }
      grid.toffoli_sizes = values;
    }
    else if ( key == "C" )
    {
      grid.cube_sharing = as_bools( key, values );
    }
    else if ( key == "K" )
    {
      grid.kernel_thresholds = values;
    }
    else if ( key == "P" )
    {
      grid.parent_reduction = as_bools( key, values );
    }
    else
    {
      throw std::invalid_argument( "unknown grid knob '" + key + "'" );
    }
  }
  return grid;
}

std::vector<optimize_params> sweep_grid::configurations( optimize_params const& base ) const
{
  std::vector<optimize_params> configs;
  for ( auto t : toffoli_sizes )
  {
    for ( bool c : cube_sharing )
    {
      for ( auto k : kernel_thresholds )
      {
        for ( bool p : parent_reduction )
        {
          auto params = base;
          params.max_and_arity = t;
          params.cube_sharing = c;
          params.kernel_threshold = k;
          params.parent_reduction = p;
          configs.push_back( params );
        }
      }
    }
  }
  return configs;
}

void parallel_for( std::size_t count, unsigned threads, std::function<void( std::size_t )> const& fn )
{
  if ( threads == 0u )
  {
    threads = std::max( 1u, std::thread::hardware_concurrency() );
  }
  threads = static_cast<unsigned>( std::min<std::size_t>( threads, count ) );
  if ( threads <= 1u )
  {
    for ( std::size_t i = 0; i < count; ++i )
    {
      fn( i );
    }
    return;
  }
  std::atomic<std::size_t> next{ 0u };
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for ( unsigned t = 0; t < threads; ++t )
  {
    pool.emplace_back( [&] {
      for ( auto i = next++; i < count; i = next++ )
      {
        try
        {
          fn( i );
        }
        catch ( ... )
        {
          std::lock_guard lock( failure_mutex );
          if ( !failure )
          {
            failure = std::current_exception();
          }
        }
      }
    } );
  }
  for ( auto& t : pool )
  {
    t.join();
  }
  if ( failure )
  {
    std::rethrow_exception( failure );
  }
}

std::vector<sweep_row> run_sweep( truth_table const& spec, std::vector<optimize_params> const& configs,
                                  sweep_options const& options )
{
  std::vector<sweep_row> rows( configs.size() );
  parallel_for( configs.size(), options.threads, [&]( std::size_t i ) {
    auto& row = rows[i];
    row.params = configs[i];
    synthesis_options so;
    so.params = configs[i];
    so.verify = options.verify;
    auto const start = std::chrono::steady_clock::now();
    try
    {
      auto result = synthesize( spec, so );
      row.cost = result.cost;
      row.ok = true;
    }
    catch ( std::exception const& e )
    {
      row.error = e.what();
    }
    if ( options.timing )
    {
      row.cost.runtime = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
    }
  } );
  return rows;
}

std::vector<std::size_t> pareto_front( std::vector<sweep_row> const& rows )
{
  std::vector<std::size_t> front;
  for ( std::size_t i = 0; i < rows.size(); ++i )
  {
    if ( !rows[i].ok )
    {
      continue;
    }
    auto const qi = rows[i].cost.quantum_cost;
    auto const gi = rows[i].cost.garbage_count;
    bool keep = true;
    for ( std::size_t j = 0; j < rows.size() && keep; ++j )
    {
      if ( j == i || !rows[j].ok )
      {
        continue;
      }
      auto const qj = rows[j].cost.quantum_cost;
      auto const gj = rows[j].cost.garbage_count;
      bool const dominates = qj <= qi && gj <= gi && ( qj < qi || gj < gi );
      bool const earlier_twin = qj == qi && gj == gi && j < i;
      keep = !dominates && !earlier_twin;
    }
    if ( keep )
    {
      front.push_back( i );
    }
  }
  return front;
}

std::vector<permutation> all_permutations( unsigned n )
{
  if ( n > 3u )
  {
    throw std::invalid_argument( "exhaustive enumeration is limited to 3 variables" );
  }
  std::vector<std::uint64_t> images( std::size_t{ 1 } << n );
  std::iota( images.begin(), images.end(), 0u );
  std::vector<permutation> perms;
  do
  {
    perms.emplace_back( images );
  } while ( std::next_permutation( images.begin(), images.end() ) );
  return perms;
}

namespace
{

template<class Fn>
exhaustive_summary exhaustive( unsigned n, unsigned threads, Fn&& run_one )
{
  auto const perms = all_permutations( n );
  exhaustive_summary summary;
  summary.functions = perms.size();
  summary.rows.resize( perms.size() );
  parallel_for( perms.size(), threads, [&]( std::size_t i ) {
    auto& row = summary.rows[i];
    row.index = i;
    try
    {
      run_one( perms[i], row );
    }
    catch ( std::exception const& e )
    {
      row.ok = false;
      row.error = e.what();
    }
  } );
  double gates = 0.0, qc = 0.0, garbage = 0.0;
  for ( auto const& row : summary.rows )
  {
    if ( !row.ok )
    {
      continue;
    }
    ++summary.succeeded;
    gates += static_cast<double>( row.gates );
    qc += static_cast<double>( row.quantum_cost );
    garbage += static_cast<double>( row.garbage );
    summary.max_ancilla = std::max( summary.max_ancilla, row.ancilla );
  }
  if ( summary.succeeded > 0u )
  {
    auto const k = static_cast<double>( summary.succeeded );
    summary.mean_gates = gates / k;
    summary.mean_quantum_cost = qc / k;
    summary.mean_garbage = garbage / k;
  }
  return summary;
}

void fill( exhaustive_row& row, cost_report const& cost )
{
  row.ok = true;
  row.gates = cost.gate_count;
  row.quantum_cost = cost.quantum_cost;
  row.garbage = cost.garbage_count;
  row.ancilla = cost.ancilla_count;
  row.lines = cost.line_count;
}

} // namespace

exhaustive_summary exhaustive_synthesis( unsigned n, synthesis_options const& options, unsigned threads )
{
  return exhaustive( n, threads, [&]( permutation const& p, exhaustive_row& row ) {
    fill( row, synthesize( p, options ).cost );
  } );
}

exhaustive_summary exhaustive_ancilla_free( unsigned n, ancilla_free_options const& options, unsigned threads )
{
  return exhaustive( n, threads, [&]( permutation const& p, exhaustive_row& row ) {
    auto const r = ancilla_free_synthesize( p, options );
    if ( !r.converged )
    {
      row.error = r.message;
      return;
    }
    fill( row, r.cost );
  } );
}

std::string exhaustive_csv_header()
{
  return "index,permutation,converged,gates,qc,lines,garbage,ancilla";
}

std::string exhaustive_csv_line( exhaustive_row const& row, permutation const& p )
{
  std::ostringstream out;
  out << row.index << ',';
  for ( std::size_t i = 0; i < p.size(); ++i )
  {
    out << ( i ? " " : "" ) << p[i];
  }
  out << ',' << int( row.ok ) << ',' << row.gates << ',' << row.quantum_cost << ',' << row.lines << ',' << row.garbage
      << ',' << row.ancilla;
  return out.str();
}

} // namespace revsyn
