#include <revsyn/io.hpp>

#include <revsyn/anf.hpp>
#include <revsyn/esop.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace revsyn
{

parse_error::parse_error( std::size_t line, std::string const& message )
    : std::runtime_error( line == 0u ? message : "line " + std::to_string( line ) + ": " + message ), line_( line )
{
}

spec_format parse_spec_format( std::string const& name )
{
  if ( name == "auto" )
  {
    return spec_format::automatic;
  }
  if ( name == "pla" )
  {
    return spec_format::pla;
  }
  if ( name == "perm" || name == "permutation" )
  {
    return spec_format::permutation;
  }
  if ( name == "cubes" || name == "cube-list" )
  {
    return spec_format::cube_list;
  }
  throw std::invalid_argument( "unknown spec format '" + name + "'" );
}

namespace
{

struct text_line
{
  std::size_t number;
  std::string text;
};

std::string trim( std::string const& s )
{
  auto const b = s.find_first_not_of( " \t\r" );
  if ( b == std::string::npos )
  {
    return {};
  }
  auto const e = s.find_last_not_of( " \t\r" );
  return s.substr( b, e - b + 1u );
}

/* Non-empty lines with `#` comments stripped. */
std::vector<text_line> content_lines( std::istream& in )
{
  std::vector<text_line> lines;
  std::string raw;
  std::size_t number = 0u;
  while ( std::getline( in, raw ) )
  {
    ++number;
    if ( auto const hash = raw.find( '#' ); hash != std::string::npos )
    {
      raw.erase( hash );
    }
    auto t = trim( raw );
    if ( !t.empty() )
    {
      lines.push_back( { number, std::move( t ) } );
    }
  }
  return lines;
}

std::vector<std::string> split_ws( std::string const& s )
{
  std::istringstream is( s );
  std::vector<std::string> tokens;
  std::string t;
  while ( is >> t )
  {
    tokens.push_back( t );
  }
  return tokens;
}

std::vector<std::string> split( std::string const& s, char sep )
{
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is( s );
  while ( std::getline( is, part, sep ) )
  {
    parts.push_back( trim( part ) );
  }
  if ( !s.empty() && s.back() == sep )
  {
    parts.emplace_back();
  }
  return parts;
}

unsigned to_unsigned( std::string const& token, std::size_t line )
{
  if ( token.empty() || !std::all_of( token.begin(), token.end(), []( unsigned char ch ) { return std::isdigit( ch ); } ) )
  {
    throw parse_error( line, "expected a non-negative integer, got '" + token + "'" );
  }
  try
  {
    auto const v = std::stoull( token );
    if ( v > 0xffffffffull )
    {
      throw parse_error( line, "value " + token + " is too large" );
    }
    return static_cast<unsigned>( v );
  }
  catch ( std::out_of_range const& )
  {
    throw parse_error( line, "value " + token + " is too large" );
  }
}

spec_format detect_format( std::vector<text_line> const& lines )
{
  for ( auto const& l : lines )
  {
    if ( l.text.rfind( "perm", 0u ) == 0u )
    {
      return spec_format::permutation;
    }
    if ( l.text.front() == '.' )
    {
      continue;
    }
    if ( l.text.find_first_of( "x^" ) != std::string::npos )
    {
      return spec_format::cube_list;
    }
    return spec_format::pla;
  }
  throw parse_error( 0u, "empty specification" );
}

parsed_spec parse_permutation( std::vector<text_line> const& lines )
{
  if ( lines.size() != 1u )
  {
    throw parse_error( lines.size() > 1u ? lines[1].number : 0u, "permutation spec must be a single `perm` line" );
  }
  auto const tokens = split_ws( lines.front().text );
  if ( tokens.empty() || tokens.front() != "perm" )
  {
    throw parse_error( lines.front().number, "expected `perm <v0> <v1> ...`" );
  }
  std::vector<std::uint64_t> images;
  for ( std::size_t i = 1; i < tokens.size(); ++i )
  {
    images.push_back( to_unsigned( tokens[i], lines.front().number ) );
  }
  try
  {
    permutation p( std::move( images ) );
    return { truth_table_from_permutation( p ), p, {} };
  }
  catch ( std::invalid_argument const& e )
  {
    throw parse_error( lines.front().number, e.what() );
  }
}

constexpr unsigned max_table_inputs = 24u;

parsed_spec parse_pla( std::vector<text_line> const& lines )
{
  std::optional<unsigned> n, m;
  std::vector<std::string> input_names, output_names;
  std::vector<text_line const*> rows;
  for ( auto const& l : lines )
  {
    if ( l.text.front() != '.' )
    {
      rows.push_back( &l );
      continue;
    }
    auto const tokens = split_ws( l.text );
    auto const& key = tokens.front();
    if ( key == ".i" || key == ".o" )
    {
      if ( tokens.size() != 2u )
      {
        throw parse_error( l.number, "malformed " + key + " header" );
      }
      ( key == ".i" ? n : m ) = to_unsigned( tokens[1], l.number );
    }
    else if ( key == ".ilb" )
    {
      input_names.assign( tokens.begin() + 1, tokens.end() );
    }
    else if ( key == ".ob" )
    {
      output_names.assign( tokens.begin() + 1, tokens.end() );
    }
    else if ( key == ".e" || key == ".end" )
    {
      break;
    }
    else if ( key != ".p" && key != ".type" )
    {
      throw parse_error( l.number, "unknown directive " + key );
    }
  }
  if ( !n || !m )
  {
    throw parse_error( 0u, "PLA needs both .i and .o headers" );
  }
  if ( *n > max_table_inputs || *m == 0u || *m > 64u )
  {
    throw parse_error( 0u, "unsupported PLA size .i " + std::to_string( *n ) + " .o " + std::to_string( *m ) );
  }
  truth_table table( *n, *m );
  std::vector<std::uint64_t> cared( table.num_rows(), 0u );
  std::size_t output_dont_cares = 0u;
  for ( auto const* row : rows )
  {
    auto const tokens = split_ws( row->text );
    if ( tokens.size() != 2u || tokens[0].size() != *n || tokens[1].size() != *m )
    {
      throw parse_error( row->number, "row width does not match .i " + std::to_string( *n ) + " .o " + std::to_string( *m ) );
    }
    std::uint64_t base = 0u, free = 0u;
    for ( unsigned k = 0; k < *n; ++k )
    {
      switch ( tokens[0][k] )
      {
      case '1':
        base |= std::uint64_t{ 1 } << k;
        break;
      case '-':
        free |= std::uint64_t{ 1 } << k;
        break;
      case '0':
        break;
      default:
        throw parse_error( row->number, "bad input character '" + std::string( 1, tokens[0][k] ) + "'" );
      }
    }
    std::uint64_t value = 0u, care = 0u;
    for ( unsigned j = 0; j < *m; ++j )
    {
      switch ( tokens[1][j] )
      {
      case '1':
        value |= std::uint64_t{ 1 } << j;
        [[fallthrough]];
      case '0':
        care |= std::uint64_t{ 1 } << j;
        break;
      case '-':
        ++output_dont_cares;
        break;
      default:
        throw parse_error( row->number, "bad output character '" + std::string( 1, tokens[1][j] ) + "'" );
      }
    }
    /* enumerate all subsets of the free positions */
    std::uint64_t sub = 0u;
    do
    {
      auto const index = base | sub;
      auto const both = cared[index] & care;
      if ( ( table.row( index ) & both ) != ( value & both ) )
      {
        throw parse_error( row->number, "conflicting outputs for input row " + std::to_string( index ) );
      }
      for ( unsigned j = 0; j < *m; ++j )
      {
        if ( ( care >> j ) & 1u )
        {
          table.set( index, j, ( value >> j ) & 1u );
        }
      }
      cared[index] |= care;
      sub = ( sub - free ) & free;
    } while ( sub != 0u );
  }
  parsed_spec result{ std::move( table ), std::nullopt, {} };
  if ( output_dont_cares > 0u )
  {
    result.warnings.push_back( std::to_string( output_dont_cares ) + " output don't-care entries resolved to 0" );
  }
  if ( !input_names.empty() )
  {
    if ( input_names.size() != *n )
    {
      throw parse_error( 0u, ".ilb lists " + std::to_string( input_names.size() ) + " names for " + std::to_string( *n ) + " inputs" );
    }
    result.table.set_input_names( input_names );
  }
  if ( !output_names.empty() )
  {
    if ( output_names.size() != *m )
    {
      throw parse_error( 0u, ".ob lists " + std::to_string( output_names.size() ) + " names for " + std::to_string( *m ) + " outputs" );
    }
    result.table.set_output_names( output_names );
  }
  return result;
}

cube parse_term( std::string const& term, std::size_t line, unsigned& max_var )
{
  if ( term == "1" )
  {
    return cube::one();
  }
  cube c;
  std::size_t i = 0u;
  while ( i < term.size() )
  {
    if ( term[i] == '*' || term[i] == ' ' )
    {
      ++i;
      continue;
    }
    if ( term[i] != 'x' )
    {
      throw parse_error( line, "bad term '" + term + "'" );
    }
    auto j = i + 1u;
    while ( j < term.size() && std::isdigit( static_cast<unsigned char>( term[j] ) ) )
    {
      ++j;
    }
    auto const index = to_unsigned( term.substr( i + 1u, j - i - 1u ), line );
    if ( index == 0u || index > 32u )
    {
      throw parse_error( line, "variable index out of range in '" + term + "'" );
    }
    max_var = std::max( max_var, index );
    c = c * cube::literal( index - 1u );
    i = j;
  }
  return c;
}

parsed_spec parse_cube_list( std::vector<text_line> const& lines )
{
  std::optional<unsigned> n;
  unsigned max_var = 0u;
  std::vector<std::vector<cube>> outputs;
  for ( auto const& l : lines )
  {
    if ( l.text.front() == '.' )
    {
      auto const tokens = split_ws( l.text );
      if ( tokens.front() == ".i" && tokens.size() == 2u )
      {
        n = to_unsigned( tokens[1], l.number );
        continue;
      }
      if ( tokens.front() == ".o" && tokens.size() == 2u )
      {
        continue;
      }
      throw parse_error( l.number, "unknown directive " + tokens.front() );
    }
    std::vector<cube> cubes;
    for ( auto const& term : split( l.text, '^' ) )
    {
      if ( term.empty() )
      {
        throw parse_error( l.number, "empty term" );
      }
      if ( term != "0" )
      {
        cubes.push_back( parse_term( term, l.number, max_var ) );
      }
    }
    outputs.push_back( std::move( cubes ) );
  }
  auto const vars = n.value_or( max_var );
  if ( max_var > vars )
  {
    throw parse_error( 0u, "variable x" + std::to_string( max_var ) + " exceeds .i " + std::to_string( vars ) );
  }
  if ( outputs.empty() || vars > max_table_inputs )
  {
    throw parse_error( 0u, "cube list needs 1 to 64 expressions over at most 24 variables" );
  }
  std::vector<esop_expression> exprs;
  for ( auto& cubes : outputs )
  {
    exprs.emplace_back( vars, std::move( cubes ) );
  }
  return { truth_table_from_anf( exprs ), std::nullopt, {} };
}

void check_name( std::string const& name )
{
  if ( name.empty() || name.find_first_of( " \t,=#" ) != std::string::npos )
  {
    throw std::invalid_argument( "line name '" + name + "' cannot be written" );
  }
}

std::string join( std::vector<std::string> const& parts )
{
  std::string s;
  for ( auto const& p : parts )
  {
    s += ( s.empty() ? "" : "," ) + p;
  }
  return s;
}

std::string csv_field( std::string const& s )
{
  if ( s.find_first_of( ",\"\n" ) == std::string::npos )
  {
    return s;
  }
  std::string out = "\"";
  for ( auto ch : s )
  {
    out += ch == '"' ? std::string( "\"\"" ) : std::string( 1, ch );
  }
  return out + "\"";
}

} // namespace

parsed_spec parse_spec( std::istream& in, spec_format format )
{
  auto const lines = content_lines( in );
  if ( lines.empty() )
  {
    throw parse_error( 0u, "empty specification" );
  }
  if ( format == spec_format::automatic )
  {
    format = detect_format( lines );
  }
  switch ( format )
  {
  case spec_format::permutation:
    return parse_permutation( lines );
  case spec_format::cube_list:
    return parse_cube_list( lines );
  default:
    return parse_pla( lines );
  }
}

parsed_spec parse_spec_string( std::string const& text, spec_format format )
{
  std::istringstream in( text );
  return parse_spec( in, format );
}

parsed_spec parse_spec_file( std::filesystem::path const& path, spec_format format )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw std::runtime_error( "cannot open " + path.string() );
  }
  if ( format == spec_format::automatic )
  {
    auto const ext = path.extension().string();
    if ( ext == ".pla" )
    {
      format = spec_format::pla;
    }
    else if ( ext == ".perm" )
    {
      format = spec_format::permutation;
    }
    else if ( ext == ".cubes" || ext == ".esop" )
    {
      format = spec_format::cube_list;
    }
  }
  return parse_spec( in, format );
}

std::string write_pla( truth_table const& table )
{
  std::ostringstream out;
  out << ".i " << table.num_inputs() << "\n.o " << table.num_outputs() << "\n";
  out << ".ilb";
  for ( auto const& name : table.input_names() )
  {
    out << ' ' << name;
  }
  out << "\n.ob";
  for ( auto const& name : table.output_names() )
  {
    out << ' ' << name;
  }
  out << "\n.p " << table.num_rows() << "\n";
  for ( std::uint64_t x = 0; x < table.num_rows(); ++x )
  {
    for ( unsigned k = 0; k < table.num_inputs(); ++k )
    {
      out << ( ( ( x >> k ) & 1u ) ? '1' : '0' );
    }
    out << ' ';
    for ( unsigned j = 0; j < table.num_outputs(); ++j )
    {
      out << ( table.get( x, j ) ? '1' : '0' );
    }
    out << '\n';
  }
  out << ".e\n";
  return out.str();
}

void write_circuit( std::ostream& out, circuit const& c, std::optional<cost_report> const& cost )
{
  if ( cost )
  {
    out << "# quantum cost: " << cost->quantum_cost << "\n";
    out << "# gates: " << cost->gate_count << " (nct " << cost->nct_gate_count << ", peres pairs " << cost->peres_pairs
        << ")\n";
    out << "# lines: " << cost->line_count << ", garbage: " << cost->garbage_count << ", ancilla: " << cost->ancilla_count
        << "\n";
  }
  std::vector<std::string> names, inputs, constants, garbage;
  std::vector<std::string> outputs( c.num_outputs() ), labels( c.num_outputs() );
  for ( auto const& l : c.lines() )
  {
    check_name( l.name );
    names.push_back( l.name );
    if ( l.origin == line_origin::primary_input )
    {
      inputs.push_back( l.name );
    }
    else
    {
      constants.push_back( l.name + "=" + ( l.initial_value ? "1" : "0" ) );
    }
    if ( l.output )
    {
      if ( *l.output >= outputs.size() )
      {
        throw std::invalid_argument( "output indices of the circuit are not contiguous" );
      }
      outputs[*l.output] = l.name;
      labels[*l.output] = l.output_name.empty() ? "y" + std::to_string( *l.output + 1u ) : l.output_name;
      check_name( labels[*l.output] );
    }
    else if ( !( l.origin == line_origin::constant && l.restored ) )
    {
      garbage.push_back( l.name );
    }
  }
  out << ".v " << join( names ) << "\n";
  out << ".i " << join( inputs ) << "\n";
  out << ".o " << join( outputs ) << "\n";
  out << ".ol " << join( labels ) << "\n";
  out << ".c " << join( constants ) << "\n";
  out << ".g " << join( garbage ) << "\n";
  out << "BEGIN\n";
  for ( auto const& g : c.gates() )
  {
    std::vector<std::string> ops;
    for ( auto l : g.controls )
    {
      ops.push_back( c.line( l ).name );
    }
    ops.push_back( c.line( g.target ).name );
    if ( g.family == gate_family::fredkin )
    {
      ops.push_back( c.line( *g.second_target ).name );
      out << 'f';
    }
    else
    {
      out << 't';
    }
    out << ops.size() << ' ' << join( ops ) << "\n";
  }
  out << "END\n";
}

std::string circuit_to_string( circuit const& c, std::optional<cost_report> const& cost )
{
  std::ostringstream out;
  write_circuit( out, c, cost );
  return out.str();
}

void write_circuit_file( std::filesystem::path const& path, circuit const& c, std::optional<cost_report> const& cost )
{
  std::ofstream out( path );
  if ( !out )
  {
    throw std::runtime_error( "cannot write " + path.string() );
  }
  write_circuit( out, c, cost );
  if ( !out )
  {
    throw std::runtime_error( "error while writing " + path.string() );
  }
}

circuit read_circuit( std::istream& in )
{
  auto const lines = content_lines( in );
  std::vector<std::string> names, outputs, labels;
  std::set<std::string> inputs, garbage;
  std::map<std::string, bool> constants;
  std::map<std::string, line_id> ids;
  std::optional<circuit> c;
  auto list = []( std::string const& rest ) {
    return rest.empty() ? std::vector<std::string>{} : split( rest, ',' );
  };
  auto build = [&]( std::size_t number ) {
    if ( c )
    {
      return;
    }
    if ( names.empty() )
    {
      throw parse_error( number, "gates before the .v header" );
    }
    c.emplace();
    for ( auto const& name : names )
    {
      if ( ids.count( name ) )
      {
        throw parse_error( number, "duplicate line name " + name );
      }
      if ( inputs.count( name ) )
      {
        ids[name] = c->add_input( name );
      }
      else if ( auto it = constants.find( name ); it != constants.end() )
      {
        ids[name] = c->add_constant( name, it->second );
      }
      else
      {
        throw parse_error( number, "line " + name + " is neither an input nor a constant" );
      }
    }
    if ( !labels.empty() && labels.size() != outputs.size() )
    {
      throw parse_error( number, ".ol and .o differ in length" );
    }
    for ( unsigned o = 0; o < outputs.size(); ++o )
    {
      auto it = ids.find( outputs[o] );
      if ( it == ids.end() )
      {
        throw parse_error( number, "unknown output line " + outputs[o] );
      }
      if ( garbage.count( outputs[o] ) )
      {
        throw parse_error( number, "line " + outputs[o] + " is both output and garbage" );
      }
      if ( c->line( it->second ).output )
      {
        throw parse_error( number, "line " + outputs[o] + " carries two outputs" );
      }
      c->assign_output( it->second, o, labels.empty() ? "y" + std::to_string( o + 1u ) : labels[o] );
    }
    for ( line_id l = 0; l < c->num_lines(); ++l )
    {
      auto& info = c->line( l );
      info.restored = info.origin == line_origin::constant && !info.output && !garbage.count( info.name );
    }
  };
  for ( auto const& l : lines )
  {
    auto const space = l.text.find_first_of( " \t" );
    auto const key = l.text.substr( 0u, space );
    auto const rest = space == std::string::npos ? std::string{} : trim( l.text.substr( space ) );
    if ( key.front() == '.' )
    {
      if ( c )
      {
        throw parse_error( l.number, "header " + key + " after the first gate" );
      }
      if ( key == ".v" )
      {
        names = list( rest );
      }
      else if ( key == ".i" )
      {
        for ( auto const& n : list( rest ) )
        {
          inputs.insert( n );
        }
      }
      else if ( key == ".o" )
      {
        outputs = list( rest );
      }
      else if ( key == ".ol" )
      {
        labels = list( rest );
      }
      else if ( key == ".g" )
      {
        for ( auto const& n : list( rest ) )
        {
          garbage.insert( n );
        }
      }
      else if ( key == ".c" )
      {
        for ( auto const& entry : list( rest ) )
        {
          auto const eq = entry.find( '=' );
          auto const name = entry.substr( 0u, eq );
          auto const value = eq == std::string::npos ? std::string( "0" ) : entry.substr( eq + 1u );
          if ( value != "0" && value != "1" )
          {
            throw parse_error( l.number, "constant " + name + " must be 0 or 1" );
          }
          constants[name] = value == "1";
        }
      }
      else
      {
        throw parse_error( l.number, "unknown header " + key );
      }
      continue;
    }
    if ( key == "BEGIN" || key == "END" )
    {
      build( l.number );
      continue;
    }
    build( l.number );
    if ( ( key.front() != 't' && key.front() != 'f' ) || key.size() < 2u )
    {
      throw parse_error( l.number, "unknown gate '" + key + "'" );
    }
    auto const k = to_unsigned( key.substr( 1u ), l.number );
    auto const ops = list( rest );
    if ( ops.size() != k )
    {
      throw parse_error( l.number, key + " needs " + std::to_string( k ) + " lines, got " + std::to_string( ops.size() ) );
    }
    std::vector<line_id> operands;
    for ( auto const& op : ops )
    {
      auto it = ids.find( op );
      if ( it == ids.end() )
      {
        throw parse_error( l.number, "unknown line " + op );
      }
      operands.push_back( it->second );
    }
    gate g;
    if ( key.front() == 't' )
    {
      if ( k < 1u )
      {
        throw parse_error( l.number, "t0 is not a gate" );
      }
      g = gate::toffoli( { operands.begin(), operands.end() - 1 }, operands.back() );
    }
    else
    {
      if ( k < 2u )
      {
        throw parse_error( l.number, "Fredkin gates need two targets" );
      }
      g = gate::fredkin( { operands.begin(), operands.end() - 2 }, operands[k - 2u], operands[k - 1u] );
    }
    if ( !g.is_legal() )
    {
      throw parse_error( l.number, "gate uses a line twice" );
    }
    c->add_gate( std::move( g ) );
  }
  build( lines.empty() ? 0u : lines.back().number );
  return std::move( *c );
}

circuit read_circuit_string( std::string const& text )
{
  std::istringstream in( text );
  return read_circuit( in );
}

circuit read_circuit_file( std::filesystem::path const& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw std::runtime_error( "cannot open " + path.string() );
  }
  return read_circuit( in );
}

std::string report_header()
{
  return "spec,mode,T,C,K,P,qc,gates,nct_gates,lines,garbage,ancilla,peres_pairs,runtime";
}

std::string report_line( report_row const& row )
{
  std::ostringstream out;
  auto const& p = row.params;
  auto const& c = row.cost;
  out << csv_field( row.spec ) << ',' << csv_field( row.mode ) << ',' << p.max_and_arity << ',' << int( p.cube_sharing )
      << ',' << p.kernel_threshold << ',' << int( p.parent_reduction ) << ',' << c.quantum_cost << ',' << c.gate_count
      << ',' << c.nct_gate_count << ',' << c.line_count << ',' << c.garbage_count << ',' << c.ancilla_count << ','
      << c.peres_pairs << ',';
  if ( row.include_runtime )
  {
    out << std::fixed << std::setprecision( 4 ) << c.runtime;
  }
  return out.str();
}

} // namespace revsyn
