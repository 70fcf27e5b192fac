#include <revsyn/simulation.hpp>

#include <random>
#include <stdexcept>

namespace revsyn
{

std::vector<bool> simulate( circuit const& c, std::vector<bool> input )
{
  if ( input.size() != c.num_lines() )
  {
    throw std::invalid_argument( "input width does not match the number of lines" );
  }
  for ( auto const& g : c.gates() )
  {
    bool active = true;
    for ( auto l : g.controls )
    {
      active = active && input[l];
    }
    if ( !active )
    {
      continue;
    }
    if ( g.family == gate_family::fredkin )
    {
      bool const tmp = input[g.target];
      input[g.target] = input[*g.second_target];
      input[*g.second_target] = tmp;
    }
    else
    {
      input[g.target] = !input[g.target];
    }
  }
  return input;
}

namespace
{

std::vector<truth_column> initial_columns( circuit const& c, unsigned num_vars )
{
  std::vector<truth_column> cols;
  cols.reserve( c.num_lines() );
  unsigned next_input = 0u;
  for ( auto const& l : c.lines() )
  {
    if ( l.origin == line_origin::primary_input )
    {
      cols.push_back( truth_column::projection( num_vars, next_input++ ) );
    }
    else
    {
      cols.push_back( truth_column::constant( num_vars, l.initial_value ) );
    }
  }
  return cols;
}

void apply( gate const& g, std::vector<truth_column>& cols )
{
  if ( g.family == gate_family::fredkin )
  {
    auto selector = truth_column::constant( cols[g.target].num_vars(), true );
    for ( auto l : g.controls )
    {
      selector &= cols[l];
    }
    auto diff = ( cols[g.target] ^ cols[*g.second_target] ) & selector;
    cols[g.target] ^= diff;
    cols[*g.second_target] ^= diff;
    return;
  }
  if ( g.controls.empty() )
  {
    cols[g.target] = ~cols[g.target];
    return;
  }
  if ( g.controls.size() == 1u )
  {
    cols[g.target] ^= cols[g.controls[0]];
    return;
  }
  auto product = cols[g.controls[0]];
  for ( std::size_t i = 1; i < g.controls.size(); ++i )
  {
    product &= cols[g.controls[i]];
  }
  cols[g.target] ^= product;
}

} // namespace

std::vector<truth_column> simulate_columns( circuit const& c )
{
  auto cols = initial_columns( c, c.num_inputs() );
  for ( auto const& g : c.gates() )
  {
    apply( g, cols );
  }
  return cols;
}

namespace
{

constexpr unsigned max_exhaustive_inputs = 20u;

equivalence_result verify_exhaustive( circuit const& c, truth_table const& spec )
{
  equivalence_result r;
  auto const cols = simulate_columns( c );
  for ( unsigned o = 0; o < spec.num_outputs(); ++o )
  {
    auto const line = c.output_line( o );
    if ( !line )
    {
      r.message = "output " + spec.output_names()[o] + " is not assigned to any line";
      r.mismatched_output = o;
      return r;
    }
    auto const expected = spec.column( o );
    if ( cols[*line] != expected )
    {
      auto const diff = cols[*line] ^ expected;
      for ( std::uint64_t i = 0; i < diff.num_bits(); ++i )
      {
        if ( diff.get( i ) )
        {
          r.counterexample = i;
          break;
        }
      }
      r.mismatched_output = o;
      r.message = "output " + spec.output_names()[o] + " differs at input " + std::to_string( *r.counterexample );
      return r;
    }
  }
  for ( line_id l = 0; l < c.num_lines(); ++l )
  {
    auto const& info = c.line( l );
    if ( info.origin != line_origin::constant )
    {
      continue;
    }
    if ( cols[l] == truth_column::constant( c.num_inputs(), info.initial_value ) )
    {
      r.restored_constants.push_back( l );
    }
    else
    {
      r.unrestored_constants.push_back( l );
    }
  }
  r.equivalent = true;
  return r;
}

equivalence_result verify_sampled( circuit const& c, truth_table const& spec, verify_options const& options )
{
  equivalence_result r;
  std::mt19937_64 rng( options.seed );
  std::uniform_int_distribution<std::uint64_t> pick( 0u, spec.num_rows() - 1u );
  std::vector<bool> unrestored( c.num_lines(), false );
  for ( std::uint64_t s = 0; s < options.samples; ++s )
  {
    auto const input = pick( rng );
    std::vector<bool> bits( c.num_lines(), false );
    unsigned next_input = 0u;
    for ( line_id l = 0; l < c.num_lines(); ++l )
    {
      auto const& info = c.line( l );
      bits[l] = info.origin == line_origin::primary_input ? ( ( input >> next_input++ ) & 1u ) : info.initial_value;
    }
    auto const out = simulate( c, bits );
    for ( unsigned o = 0; o < spec.num_outputs(); ++o )
    {
      auto const line = c.output_line( o );
      if ( !line || out[*line] != spec.get( input, o ) )
      {
        r.counterexample = input;
        r.mismatched_output = o;
        r.message = "output " + spec.output_names()[o] + " differs at input " + std::to_string( input );
        return r;
      }
    }
    for ( line_id l = 0; l < c.num_lines(); ++l )
    {
      if ( c.line( l ).origin == line_origin::constant && out[l] != c.line( l ).initial_value )
      {
        unrestored[l] = true;
      }
    }
  }
  for ( line_id l = 0; l < c.num_lines(); ++l )
  {
    if ( c.line( l ).origin == line_origin::constant )
    {
      ( unrestored[l] ? r.unrestored_constants : r.restored_constants ).push_back( l );
    }
  }
  r.equivalent = true;
  return r;
}

} // namespace

equivalence_result verify_equivalence( circuit const& c, truth_table const& spec, verify_options const& options )
{
  if ( c.num_inputs() != spec.num_inputs() )
  {
    equivalence_result r;
    r.message = "circuit has " + std::to_string( c.num_inputs() ) + " primary inputs, spec has " +
                std::to_string( spec.num_inputs() );
    return r;
  }
  switch ( options.mode )
  {
  case verify_mode::exhaustive:
    if ( spec.num_inputs() > max_exhaustive_inputs )
    {
      throw std::invalid_argument( "exhaustive verification supports at most 20 inputs" );
    }
    return verify_exhaustive( c, spec );
  case verify_mode::sample:
    return verify_sampled( c, spec, options );
  case verify_mode::off:
    break;
  }
  equivalence_result r;
  r.equivalent = true;
  r.message = "verification disabled";
  return r;
}

void mark_restored_constants( circuit& c )
{
  auto const cols = simulate_columns( c );
  for ( line_id l = 0; l < c.num_lines(); ++l )
  {
    auto& info = c.line( l );
    info.restored = info.origin == line_origin::constant &&
                    cols[l] == truth_column::constant( c.num_inputs(), info.initial_value );
  }
}

} // namespace revsyn
