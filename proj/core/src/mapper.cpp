#include <revsyn/mapper.hpp>

#include <revsyn/anf.hpp>

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace revsyn
{

char const* to_string( target_rule rule )
{
  switch ( rule )
  {
  case target_rule::xor_with_single_parent_leaf:
    return "xor-single-leaf";
  case target_rule::and_with_xor_parent_single_leaf:
    return "and-xor-parent";
  case target_rule::max_child_min_parent:
    return "max-child-min-parent";
  }
  return "?";
}

namespace
{

std::optional<node_id> single_parent_leaf( esop_dag const& dag, node_id id )
{
  for ( auto c : dag.node( id ).children )
  {
    auto const& n = dag.node( c );
    if ( n.kind == node_kind::identifier && n.parents.size() == 1u )
    {
      return c;
    }
  }
  return std::nullopt;
}

bool all_leaves( esop_dag const& dag, node_id id )
{
  auto const& ch = dag.node( id ).children;
  return std::all_of( ch.begin(), ch.end(), [&]( node_id c ) { return dag.node( c ).is_leaf(); } );
}

bool emittable( esop_dag const& dag, node_id id )
{
  auto const& ch = dag.node( id ).children;
  return std::all_of( ch.begin(), ch.end(),
                      [&]( node_id c ) { return dag.node( c ).is_leaf() || all_leaves( dag, c ); } );
}

std::string unique_name( circuit const& c, std::string base )
{
  std::set<std::string> names;
  for ( auto const& l : c.lines() )
  {
    names.insert( l.name );
  }
  auto name = base;
  while ( names.count( name ) )
  {
    name += "_";
  }
  return name;
}

} // namespace

std::optional<target_choice> find_target( esop_dag const& dag )
{
  auto const dmax = dag.max_depth();
  if ( dmax < 2u )
  {
    return std::nullopt;
  }
  std::vector<node_id> candidates;
  for ( auto id : dag.nodes_at_depth( dmax - 1u ) )
  {
    if ( dag.node( id ).is_gate() )
    {
      candidates.push_back( id );
    }
  }
  for ( auto id : candidates )
  {
    if ( dag.node( id ).kind == node_kind::xor_node )
    {
      if ( auto leaf = single_parent_leaf( dag, id ) )
      {
        return target_choice{ id, target_rule::xor_with_single_parent_leaf, leaf };
      }
    }
  }
  if ( dmax >= 3u )
  {
    for ( auto id : candidates )
    {
      if ( dag.node( id ).kind != node_kind::and_node )
      {
        continue;
      }
      auto parents = dag.node( id ).parents;
      std::sort( parents.begin(), parents.end() );
      for ( auto p : parents )
      {
        auto const& pn = dag.node( p );
        if ( !pn.alive || pn.kind != node_kind::xor_node || dag.depth( p ) != dmax - 2u || !emittable( dag, p ) )
        {
          continue;
        }
        if ( auto leaf = single_parent_leaf( dag, p ) )
        {
          return target_choice{ p, target_rule::and_with_xor_parent_single_leaf, leaf };
        }
      }
    }
  }
  std::optional<node_id> best;
  for ( auto id : candidates )
  {
    if ( !best )
    {
      best = id;
      continue;
    }
    auto const& a = dag.node( id );
    auto const& b = dag.node( *best );
    if ( a.children.size() > b.children.size() ||
         ( a.children.size() == b.children.size() && a.parents.size() < b.parents.size() ) )
    {
      best = id;
    }
  }
  return target_choice{ *best, target_rule::max_child_min_parent, std::nullopt };
}

mapping_state mapping_state::for_inputs( std::vector<std::string> const& names, unsigned max_and_arity )
{
  mapping_state s;
  s.max_and_arity = max_and_arity;
  auto const n = static_cast<unsigned>( names.size() );
  for ( unsigned i = 0; i < n; ++i )
  {
    s.circ.add_input( names[i] );
    s.functions.push_back( truth_column::projection( n, i ) );
  }
  return s;
}

line_id mapping_state::add_constant_line()
{
  auto const id = circ.add_constant( unique_name( circ, "g" + std::to_string( circ.num_constants() + 1u ) ), false );
  functions.push_back( truth_column::constant( circ.num_inputs(), false ) );
  return id;
}

namespace
{

void emit( mapping_state& s, gate g )
{
  if ( g.controls.size() + 1u > std::max( 2u, s.max_and_arity ) )
  {
    throw std::logic_error( "gate exceeds the Toffoli size bound" );
  }
  if ( std::find( g.controls.begin(), g.controls.end(), g.target ) != g.controls.end() )
  {
    throw std::logic_error( "gate target is among its controls" );
  }
  if ( g.controls.empty() )
  {
    s.functions[g.target] = ~s.functions[g.target];
  }
  else
  {
    auto product = s.functions[g.controls.front()];
    for ( std::size_t i = 1; i < g.controls.size(); ++i )
    {
      product &= s.functions[g.controls[i]];
    }
    s.functions[g.target] ^= product;
  }
  s.circ.add_gate( std::move( g ) );
}

/* xors the function of node `id` onto `target`; returns true when a NOT is still owed */
bool emit_term( esop_dag const& dag, node_id id, line_id target, mapping_state& s )
{
  auto const& n = dag.node( id );
  switch ( n.kind )
  {
  case node_kind::constant:
    return n.value != 0u;
  case node_kind::identifier:
    emit( s, gate::cnot( n.value, target ) );
    return false;
  case node_kind::and_node:
  {
    std::vector<line_id> controls;
    for ( auto c : n.children )
    {
      auto const& cn = dag.node( c );
      if ( cn.kind != node_kind::identifier )
      {
        throw std::logic_error( "and-node operand is not mapped yet" );
      }
      controls.push_back( cn.value );
    }
    emit( s, gate::toffoli( std::move( controls ), target ) );
    return false;
  }
  case node_kind::xor_node:
  {
    bool owed = false;
    for ( auto c : n.children )
    {
      if ( !dag.node( c ).is_leaf() )
      {
        throw std::logic_error( "xor-node operand is not mapped yet" );
      }
      owed ^= emit_term( dag, c, target, s );
    }
    return owed;
  }
  case node_kind::root:
    break;
  }
  throw std::logic_error( "cannot map the root" );
}

} // namespace

void map_target( esop_dag& dag, target_choice const& choice, mapping_state& state )
{
  auto const& node = dag.node( choice.node );
  if ( !node.alive || !node.is_gate() )
  {
    throw std::invalid_argument( "target choice is not a live gate node" );
  }
  line_id target = 0u;
  std::vector<node_id> operands;
  if ( choice.leaf )
  {
    target = dag.node( *choice.leaf ).value;
    for ( auto c : node.children )
    {
      if ( c != *choice.leaf )
      {
        operands.push_back( c );
      }
    }
  }
  else
  {
    target = state.add_constant_line();
  }
  if ( !choice.leaf && node.kind == node_kind::and_node )
  {
    emit_term( dag, choice.node, target, state );
  }
  else
  {
    if ( !choice.leaf )
    {
      operands = node.children;
    }
    bool owed = false;
    for ( auto c : operands )
    {
      owed ^= emit_term( dag, c, target, state );
    }
    if ( owed )
    {
      emit( state, gate::not_gate( target ) );
    }
  }
  dag.convert_to_identifier( choice.node, target );
}

namespace
{

struct placement
{
  std::optional<line_id> line;
  bool negate = false;
  /* copy source; empty for a constant output */
  std::optional<line_id> source;
  bool constant_value = false;
};

struct output_options
{
  std::vector<std::pair<line_id, bool>> lines;
  placement copy;
  std::uint64_t copy_cost = 0u;
};

std::vector<output_options> collect_options( std::vector<truth_column> const& cols, truth_table const& spec,
                                             unsigned n )
{
  std::vector<output_options> opts( spec.num_outputs() );
  for ( unsigned o = 0; o < spec.num_outputs(); ++o )
  {
    auto const target = spec.column( o );
    auto const complement = ~target;
    std::optional<line_id> any_same;
    std::optional<line_id> any_complement;
    for ( line_id l = 0; l < cols.size(); ++l )
    {
      if ( cols[l] == target )
      {
        opts[o].lines.emplace_back( l, false );
        any_same = any_same.value_or( l );
      }
      else if ( cols[l] == complement )
      {
        opts[o].lines.emplace_back( l, true );
        any_complement = any_complement.value_or( l );
      }
    }
    std::stable_sort( opts[o].lines.begin(), opts[o].lines.end(),
                      []( auto const& a, auto const& b ) { return a.second < b.second; } );
    if ( target == truth_column::constant( n, false ) || target == truth_column::constant( n, true ) )
    {
      opts[o].copy.constant_value = target.get( 0u );
      opts[o].copy_cost = 0u;
    }
    else if ( any_same )
    {
      opts[o].copy.source = any_same;
      opts[o].copy_cost = 1u;
    }
    else if ( any_complement )
    {
      opts[o].copy.source = any_complement;
      opts[o].copy.negate = true;
      opts[o].copy_cost = 2u;
    }
    else
    {
      throw std::invalid_argument( "output " + spec.output_names()[o] + " is not computed on any line" );
    }
  }
  return opts;
}

struct assignment_search
{
  std::vector<output_options> const& opts;
  std::vector<int> current;
  std::vector<int> best{};
  std::pair<std::uint64_t, std::uint64_t> best_cost{ std::numeric_limits<std::uint64_t>::max(), 0u };
  std::set<line_id> used{};

  /* choice -1 is a copy, otherwise an index into opts[o].lines */
  void run( unsigned o, std::uint64_t qc, std::uint64_t extra_lines )
  {
    if ( std::make_pair( qc, extra_lines ) >= best_cost )
    {
      return;
    }
    if ( o == opts.size() )
    {
      best_cost = { qc, extra_lines };
      best = current;
      return;
    }
    for ( std::size_t k = 0; k < opts[o].lines.size(); ++k )
    {
      auto const [line, negate] = opts[o].lines[k];
      if ( used.count( line ) )
      {
        continue;
      }
      used.insert( line );
      current[o] = static_cast<int>( k );
      run( o + 1u, qc + ( negate ? 1u : 0u ), extra_lines );
      used.erase( line );
    }
    current[o] = -1;
    run( o + 1u, qc + opts[o].copy_cost, extra_lines + 1u );
  }
};

} // namespace

circuit order_outputs( circuit c, truth_table const& spec )
{
  auto const cols = simulate_columns( c );
  auto const opts = collect_options( cols, spec, c.num_inputs() );
  auto const m = spec.num_outputs();
  std::vector<int> choice( m, -1 );
  if ( m <= 8u )
  {
    assignment_search search{ opts, std::vector<int>( m, -1 ) };
    search.run( 0u, 0u, 0u );
    choice = search.best;
  }
  else
  {
    std::set<line_id> used;
    for ( unsigned o = 0; o < m; ++o )
    {
      for ( std::size_t k = 0; k < opts[o].lines.size(); ++k )
      {
        auto const line = opts[o].lines[k].first;
        if ( !used.count( line ) )
        {
          used.insert( line );
          choice[o] = static_cast<int>( k );
          break;
        }
      }
    }
  }
  c.clear_outputs();
  std::vector<std::pair<unsigned, line_id>> placed;
  std::vector<line_id> negations;
  for ( unsigned o = 0; o < m; ++o )
  {
    if ( choice[o] >= 0 )
    {
      auto const [line, negate] = opts[o].lines[static_cast<std::size_t>( choice[o] )];
      placed.emplace_back( o, line );
      if ( negate )
      {
        negations.push_back( line );
      }
      continue;
    }
    auto const& copy = opts[o].copy;
    auto const fresh = c.add_constant( unique_name( c, "o" + std::to_string( o + 1u ) ),
                                       copy.source ? false : copy.constant_value );
    if ( copy.source )
    {
      c.add_gate( gate::cnot( *copy.source, fresh ) );
      if ( copy.negate )
      {
        negations.push_back( fresh );
      }
    }
    placed.emplace_back( o, fresh );
  }
  for ( auto l : negations )
  {
    c.add_gate( gate::not_gate( l ) );
  }
  for ( auto [o, line] : placed )
  {
    c.assign_output( line, o, spec.output_names()[o] );
  }
  return c;
}

circuit place_outputs_positionally( circuit c, truth_table const& spec )
{
  auto const m = spec.num_outputs();
  if ( c.num_lines() < m )
  {
    throw std::invalid_argument( "circuit has fewer lines than outputs" );
  }
  auto cols = simulate_columns( c );
  for ( line_id o = 0; o < m; ++o )
  {
    auto const target = spec.column( o );
    if ( cols[o] == target )
    {
      continue;
    }
    std::optional<line_id> from;
    for ( line_id l = o + 1u; l < c.num_lines(); ++l )
    {
      if ( cols[l] == target )
      {
        from = l;
        break;
      }
    }
    if ( !from )
    {
      throw std::invalid_argument( "output " + spec.output_names()[o] + " is not computed on any free line" );
    }
    c.add_gate( gate::cnot( *from, o ) );
    c.add_gate( gate::cnot( o, *from ) );
    c.add_gate( gate::cnot( *from, o ) );
    std::swap( cols[o], cols[*from] );
  }
  c.clear_outputs();
  for ( line_id o = 0; o < m; ++o )
  {
    c.assign_output( o, o, spec.output_names()[o] );
  }
  return c;
}

synthesis_result synthesize( truth_table const& spec, synthesis_options const& options )
{
  auto const& params = options.params;
  if ( spec.num_inputs() > options.max_inputs )
  {
    throw std::invalid_argument( "specification has " + std::to_string( spec.num_inputs() ) +
                                 " inputs, the configured limit is " + std::to_string( options.max_inputs ) );
  }
  if ( params.max_and_arity < 2u )
  {
    throw std::invalid_argument( "Toffoli size must be at least 2" );
  }
  synthesis_result result;
  auto dag = build_dag( anf_per_output( spec ), params.max_and_arity, spec.output_names() );
  if ( params.kernel_threshold > 0u )
  {
    result.passes.push_back( kernel_extraction( dag, params ) );
  }
  if ( params.cube_sharing )
  {
    result.passes.push_back( common_cube_sharing( dag, params.max_sweeps ) );
  }
  auto state = mapping_state::for_inputs( spec.input_names(), params.max_and_arity );
  auto const limit = 64u * ( dag.capacity() + 64u );
  mutation_report reduction{ "parent_reduction" };
  for ( std::size_t iteration = 0;; ++iteration )
  {
    if ( iteration > limit )
    {
      throw std::runtime_error( "mapping did not terminate" );
    }
    auto choice = find_target( dag );
    if ( !choice )
    {
      break;
    }
    if ( params.parent_reduction && choice->rule == target_rule::max_child_min_parent )
    {
      /* only worth it when the mapper would otherwise open a garbage line */
      if ( auto leaf = parent_reduction_candidate( dag, params.generalized_expansion ) )
      {
        auto const r = reduce_parents( dag, *leaf, params.generalized_expansion );
        reduction.applications += r.applications;
        reduction.nodes_touched += r.nodes_touched;
        reduction.node_delta += r.node_delta;
        choice = find_target( dag );
      }
    }
    auto const before = state.circ.num_gates();
    map_target( dag, *choice, state );
    result.trace.push_back( { choice->rule, choice->node, state.circ.num_gates() - before } );
  }
  if ( params.parent_reduction )
  {
    result.passes.push_back( reduction );
  }
  result.circ = order_outputs( std::move( state.circ ), spec );
  mark_restored_constants( result.circ );
  result.cost = quantum_cost( result.circ );
  auto verify = options.verify;
  if ( verify.mode == verify_mode::exhaustive && spec.num_inputs() > 20u )
  {
    verify.mode = verify_mode::sample;
  }
  result.verification = verify_equivalence( result.circ, spec, verify );
  if ( !result.verification.equivalent )
  {
    throw verification_error( "synthesized circuit failed verification: " + result.verification.message );
  }
  return result;
}

synthesis_result synthesize( permutation const& spec, synthesis_options const& options )
{
  return synthesize( truth_table_from_permutation( spec ), options );
}

} // namespace revsyn
