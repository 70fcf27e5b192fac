#include <revsyn/circuit.hpp>

#include <algorithm>
#include <stdexcept>

namespace revsyn
{

gate gate::not_gate( line_id target )
{
  return gate{ gate_family::toffoli, {}, target, std::nullopt };
}

gate gate::cnot( line_id control, line_id target )
{
  return gate{ gate_family::toffoli, { control }, target, std::nullopt };
}

gate gate::toffoli( std::vector<line_id> controls, line_id target )
{
  return gate{ gate_family::toffoli, std::move( controls ), target, std::nullopt };
}

gate gate::fredkin( std::vector<line_id> controls, line_id target1, line_id target2 )
{
  return gate{ gate_family::fredkin, std::move( controls ), target1, target2 };
}

unsigned gate::size() const
{
  return static_cast<unsigned>( controls.size() ) + ( second_target ? 2u : 1u );
}

bool gate::acts_on( line_id line ) const
{
  return target == line || ( second_target && *second_target == line ) ||
         std::find( controls.begin(), controls.end(), line ) != controls.end();
}

bool gate::is_legal() const
{
  if ( family == gate_family::fredkin && ( !second_target || *second_target == target ) )
  {
    return false;
  }
  if ( family == gate_family::toffoli && second_target )
  {
    return false;
  }
  auto sorted = controls;
  std::sort( sorted.begin(), sorted.end() );
  if ( std::adjacent_find( sorted.begin(), sorted.end() ) != sorted.end() )
  {
    return false;
  }
  if ( std::binary_search( sorted.begin(), sorted.end(), target ) )
  {
    return false;
  }
  return !second_target || !std::binary_search( sorted.begin(), sorted.end(), *second_target );
}

line_id circuit::add_input( std::string name )
{
  lines_.push_back( line_info{ std::move( name ), line_origin::primary_input, false, std::nullopt, {} } );
  return num_lines() - 1u;
}

line_id circuit::add_constant( std::string name, bool value )
{
  lines_.push_back( line_info{ std::move( name ), line_origin::constant, value, std::nullopt, {} } );
  return num_lines() - 1u;
}

void circuit::add_gate( gate g )
{
  if ( !g.is_legal() )
  {
    throw std::invalid_argument( "illegal gate: target among controls or repeated line" );
  }
  auto const bad = [this]( line_id l ) { return l >= num_lines(); };
  if ( bad( g.target ) || ( g.second_target && bad( *g.second_target ) ) ||
       std::any_of( g.controls.begin(), g.controls.end(), bad ) )
  {
    throw std::out_of_range( "gate references a line that does not exist" );
  }
  gates_.push_back( std::move( g ) );
}

void circuit::append( circuit const& other )
{
  for ( auto const& g : other.gates_ )
  {
    add_gate( g );
  }
}

std::uint32_t circuit::num_inputs() const
{
  return static_cast<std::uint32_t>(
      std::count_if( lines_.begin(), lines_.end(), []( auto const& l ) { return l.origin == line_origin::primary_input; } ) );
}

std::uint32_t circuit::num_constants() const
{
  return num_lines() - num_inputs();
}

std::optional<line_id> circuit::output_line( unsigned output ) const
{
  for ( line_id l = 0; l < num_lines(); ++l )
  {
    if ( lines_[l].output == output )
    {
      return l;
    }
  }
  return std::nullopt;
}

std::uint32_t circuit::num_outputs() const
{
  return static_cast<std::uint32_t>(
      std::count_if( lines_.begin(), lines_.end(), []( auto const& l ) { return l.output.has_value(); } ) );
}

void circuit::assign_output( line_id line, unsigned output, std::string name )
{
  lines_.at( line ).output = output;
  lines_.at( line ).output_name = std::move( name );
}

void circuit::clear_outputs()
{
  for ( auto& l : lines_ )
  {
    l.output.reset();
    l.output_name.clear();
  }
}

circuit circuit::reversed() const
{
  auto copy = *this;
  std::reverse( copy.gates_.begin(), copy.gates_.end() );
  return copy;
}

bool operator==( circuit const& a, circuit const& b )
{
  if ( a.gates_ != b.gates_ || a.lines_.size() != b.lines_.size() )
  {
    return false;
  }
  for ( std::size_t i = 0; i < a.lines_.size(); ++i )
  {
    auto const& la = a.lines_[i];
    auto const& lb = b.lines_[i];
    if ( la.name != lb.name || la.origin != lb.origin || la.initial_value != lb.initial_value || la.output != lb.output )
    {
      return false;
    }
  }
  return true;
}

} // namespace revsyn
