#include <revsyn/dag.hpp>

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace revsyn
{

namespace
{

constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

bool has( std::vector<node_id> const& v, node_id x )
{
  return std::find( v.begin(), v.end(), x ) != v.end();
}

} // namespace

char const* to_string( node_kind kind )
{
  switch ( kind )
  {
  case node_kind::constant:
    return "t_constant";
  case node_kind::identifier:
    return "t_identifier";
  case node_kind::root:
    return "t_root";
  case node_kind::and_node:
    return "t_and";
  case node_kind::xor_node:
    return "t_xor";
  }
  return "?";
}

esop_dag::esop_dag( unsigned num_vars ) : num_vars_( num_vars )
{
  root_ = create( node_kind::root, {} );
}

node_id esop_dag::create( node_kind kind, std::vector<node_id> children, std::uint32_t value )
{
  auto const id = static_cast<node_id>( nodes_.size() );
  dag_node n;
  n.id = id;
  n.kind = kind;
  n.value = value;
  nodes_.push_back( std::move( n ) );
  for ( auto c : children )
  {
    attach( id, c );
  }
  nodes_[id].children = std::move( children );
  if ( nodes_[id].is_gate() )
  {
    structure_[{ kind, nodes_[id].children }] = id;
  }
  depths_dirty_ = true;
  return id;
}

void esop_dag::attach( node_id parent, node_id child )
{
  nodes_[child].parents.push_back( parent );
}

void esop_dag::detach( node_id parent, node_id child )
{
  auto& ps = nodes_[child].parents;
  auto it = std::find( ps.begin(), ps.end(), parent );
  if ( it != ps.end() )
  {
    ps.erase( it );
  }
}

void esop_dag::unregister( node_id id )
{
  auto const& n = nodes_[id];
  auto it = structure_.find( { n.kind, n.children } );
  if ( it != structure_.end() && it->second == id )
  {
    structure_.erase( it );
  }
}

void esop_dag::release( node_id id )
{
  auto& n = nodes_[id];
  if ( !n.alive || id == root_ || !n.parents.empty() || has( pins_, id ) )
  {
    return;
  }
  if ( n.is_leaf() )
  {
    /* shared leaves stay until garbage collection */
    return;
  }
  unregister( id );
  n.alive = false;
  auto const children = std::move( n.children );
  nodes_[id].children.clear();
  for ( auto c : children )
  {
    detach( id, c );
    release( c );
  }
  depths_dirty_ = true;
}

node_id esop_dag::constant( bool value )
{
  auto& slot = constants_[value ? 1 : 0];
  if ( !slot || !nodes_[*slot].alive )
  {
    slot = create( node_kind::constant, {}, value ? 1u : 0u );
  }
  return *slot;
}

node_id esop_dag::identifier( std::uint32_t var )
{
  if ( auto existing = find_identifier( var ) )
  {
    return *existing;
  }
  auto const id = create( node_kind::identifier, {}, var );
  identifiers_[var] = id;
  return id;
}

std::optional<node_id> esop_dag::find_identifier( std::uint32_t var ) const
{
  auto it = identifiers_.find( var );
  if ( it != identifiers_.end() && nodes_[it->second].alive && nodes_[it->second].kind == node_kind::identifier &&
       nodes_[it->second].value == var )
  {
    return it->second;
  }
  return std::nullopt;
}

std::optional<std::vector<node_id>> esop_dag::normalize( node_kind kind, std::vector<node_id> children, node_id& single )
{
  std::sort( children.begin(), children.end() );
  auto const is_const = [this]( node_id c, std::uint32_t v ) {
    return nodes_[c].kind == node_kind::constant && nodes_[c].value == v;
  };
  std::vector<node_id> out;
  if ( kind == node_kind::xor_node )
  {
    for ( std::size_t i = 0; i < children.size(); )
    {
      std::size_t j = i;
      while ( j < children.size() && children[j] == children[i] )
      {
        ++j;
      }
      if ( ( j - i ) % 2u == 1u && !is_const( children[i], 0u ) )
      {
        out.push_back( children[i] );
      }
      i = j;
    }
    if ( out.empty() )
    {
      single = constant( false );
      return std::nullopt;
    }
  }
  else if ( kind == node_kind::and_node )
  {
    children.erase( std::unique( children.begin(), children.end() ), children.end() );
    for ( auto c : children )
    {
      if ( is_const( c, 0u ) )
      {
        single = constant( false );
        return std::nullopt;
      }
      if ( !is_const( c, 1u ) )
      {
        out.push_back( c );
      }
    }
    if ( out.empty() )
    {
      single = constant( true );
      return std::nullopt;
    }
  }
  else
  {
    throw std::invalid_argument( "only and/xor nodes can be built from children" );
  }
  if ( out.size() == 1u )
  {
    single = out.front();
    return std::nullopt;
  }
  return out;
}

node_id esop_dag::make( node_kind kind, std::vector<node_id> children )
{
  for ( auto c : children )
  {
    if ( c >= nodes_.size() || !nodes_[c].alive )
    {
      throw std::invalid_argument( "child node does not exist" );
    }
  }
  node_id single = 0u;
  auto norm = normalize( kind, std::move( children ), single );
  if ( !norm )
  {
    return single;
  }
  auto it = structure_.find( { kind, *norm } );
  if ( it != structure_.end() && nodes_[it->second].alive )
  {
    return it->second;
  }
  return create( kind, std::move( *norm ) );
}

std::optional<node_id> esop_dag::find( node_kind kind, std::vector<node_id> children )
{
  node_id single = 0u;
  auto norm = normalize( kind, std::move( children ), single );
  if ( !norm )
  {
    return single;
  }
  auto it = structure_.find( { kind, *norm } );
  if ( it != structure_.end() && nodes_[it->second].alive )
  {
    return it->second;
  }
  return std::nullopt;
}

void esop_dag::add_output( std::string name, node_id node )
{
  outputs_.push_back( { std::move( name ), node } );
  rebuild_root();
}

void esop_dag::rebuild_root()
{
  auto& r = nodes_[root_];
  std::vector<node_id> fresh;
  for ( auto const& o : outputs_ )
  {
    if ( !has( fresh, o.node ) )
    {
      fresh.push_back( o.node );
    }
  }
  auto const old = r.children;
  for ( auto c : fresh )
  {
    attach( root_, c );
  }
  for ( auto c : old )
  {
    detach( root_, c );
  }
  nodes_[root_].children = fresh;
  for ( auto c : old )
  {
    if ( !has( fresh, c ) )
    {
      release( c );
    }
  }
  depths_dirty_ = true;
}

std::vector<node_id> esop_dag::alive_nodes() const
{
  std::vector<node_id> ids;
  for ( auto const& n : nodes_ )
  {
    if ( n.alive )
    {
      ids.push_back( n.id );
    }
  }
  return ids;
}

std::size_t esop_dag::node_count() const
{
  return static_cast<std::size_t>( std::count_if( nodes_.begin(), nodes_.end(), []( auto const& n ) { return n.alive; } ) );
}

std::size_t esop_dag::gate_node_count() const
{
  return static_cast<std::size_t>(
      std::count_if( nodes_.begin(), nodes_.end(), []( auto const& n ) { return n.alive && n.is_gate(); } ) );
}

node_id esop_dag::set_children( node_id id, std::vector<node_id> children )
{
  auto const kind = nodes_.at( id ).kind;
  if ( !nodes_[id].is_gate() || !nodes_[id].alive )
  {
    throw std::invalid_argument( "set_children expects a live and/xor node" );
  }
  node_id single = 0u;
  auto norm = normalize( kind, std::move( children ), single );
  if ( !norm )
  {
    redirect( id, single );
    return single;
  }
  if ( *norm == nodes_[id].children )
  {
    return id;
  }
  auto it = structure_.find( { kind, *norm } );
  if ( it != structure_.end() && it->second != id && nodes_[it->second].alive )
  {
    auto const other = it->second;
    redirect( id, other );
    return other;
  }
  unregister( id );
  auto const old = nodes_[id].children;
  for ( auto c : *norm )
  {
    attach( id, c );
  }
  for ( auto c : old )
  {
    detach( id, c );
  }
  nodes_[id].children = std::move( *norm );
  structure_[{ kind, nodes_[id].children }] = id;
  pins_.push_back( id );
  for ( auto c : old )
  {
    if ( !has( nodes_[id].children, c ) )
    {
      release( c );
    }
  }
  pins_.pop_back();
  depths_dirty_ = true;
  return id;
}

void esop_dag::redirect( node_id from, node_id to )
{
  if ( from == to )
  {
    return;
  }
  pins_.push_back( to );
  auto const parents = nodes_[from].parents;
  bool root_touched = false;
  for ( auto p : parents )
  {
    if ( p == root_ )
    {
      root_touched = true;
      continue;
    }
    if ( !nodes_[p].alive || !has( nodes_[p].children, from ) )
    {
      continue;
    }
    auto ch = nodes_[p].children;
    std::replace( ch.begin(), ch.end(), from, to );
    set_children( p, std::move( ch ) );
  }
  if ( root_touched || has( nodes_[root_].children, from ) )
  {
    for ( auto& o : outputs_ )
    {
      if ( o.node == from )
      {
        o.node = to;
      }
    }
    rebuild_root();
  }
  /* parents created by the cascade above may still reference `from` */
  while ( true )
  {
    auto const remaining = nodes_[from].parents;
    bool changed = false;
    for ( auto p : remaining )
    {
      if ( p != root_ && nodes_[p].alive && has( nodes_[p].children, from ) )
      {
        auto ch = nodes_[p].children;
        std::replace( ch.begin(), ch.end(), from, to );
        set_children( p, std::move( ch ) );
        changed = true;
        break;
      }
    }
    if ( !changed )
    {
      break;
    }
  }
  pins_.pop_back();
  release( from );
  depths_dirty_ = true;
}

void esop_dag::convert_to_identifier( node_id id, std::uint32_t var )
{
  auto& n = nodes_.at( id );
  if ( !n.is_gate() || !n.alive )
  {
    throw std::invalid_argument( "only live and/xor nodes can become identifiers" );
  }
  unregister( id );
  auto const old = std::move( n.children );
  nodes_[id].children.clear();
  for ( auto c : old )
  {
    detach( id, c );
  }
  if ( auto existing = find_identifier( var ) )
  {
    auto& e = nodes_[*existing];
    if ( !e.parents.empty() || has( pins_, *existing ) )
    {
      throw std::invalid_argument( "identifier for this line is still referenced" );
    }
    e.alive = false;
  }
  nodes_[id].kind = node_kind::identifier;
  nodes_[id].value = var;
  identifiers_[var] = id;
  for ( auto c : old )
  {
    release( c );
  }
  depths_dirty_ = true;
}

std::vector<node_id> esop_dag::topological_order() const
{
  /* reverse post-order of a DFS from the root */
  std::vector<node_id> post;
  std::vector<std::uint8_t> state( nodes_.size(), 0u );
  std::vector<std::pair<node_id, std::size_t>> stack{ { root_, 0u } };
  state[root_] = 1u;
  while ( !stack.empty() )
  {
    auto& [id, next] = stack.back();
    auto const& ch = nodes_[id].children;
    if ( next < ch.size() )
    {
      auto const c = ch[next++];
      if ( state[c] == 0u )
      {
        state[c] = 1u;
        stack.emplace_back( c, 0u );
      }
      else if ( state[c] == 1u )
      {
        throw std::logic_error( "cycle detected in dag" );
      }
    }
    else
    {
      state[id] = 2u;
      post.push_back( id );
      stack.pop_back();
    }
  }
  std::reverse( post.begin(), post.end() );
  return post;
}

void esop_dag::recompute_depths() const
{
  for ( auto const& n : nodes_ )
  {
    n.depth = unreachable;
  }
  auto const order = topological_order();
  nodes_[root_].depth = 0u;
  for ( auto id : order )
  {
    auto const d = nodes_[id].depth;
    for ( auto c : nodes_[id].children )
    {
      if ( nodes_[c].depth == unreachable || nodes_[c].depth < d + 1u )
      {
        nodes_[c].depth = d + 1u;
      }
    }
  }
  depths_dirty_ = false;
}

std::uint32_t esop_dag::depth( node_id id ) const
{
  if ( depths_dirty_ )
  {
    recompute_depths();
  }
  return nodes_.at( id ).depth;
}

std::uint32_t esop_dag::max_depth() const
{
  if ( depths_dirty_ )
  {
    recompute_depths();
  }
  std::uint32_t d = 0u;
  for ( auto const& n : nodes_ )
  {
    if ( n.alive && n.depth != unreachable )
    {
      d = std::max( d, n.depth );
    }
  }
  return d;
}

std::vector<node_id> esop_dag::nodes_at_depth( std::uint32_t depth ) const
{
  if ( depths_dirty_ )
  {
    recompute_depths();
  }
  std::vector<node_id> ids;
  for ( auto const& n : nodes_ )
  {
    if ( n.alive && n.depth == depth )
    {
      ids.push_back( n.id );
    }
  }
  return ids;
}

void esop_dag::collect_garbage()
{
  std::vector<bool> reachable( nodes_.size(), false );
  for ( auto id : topological_order() )
  {
    reachable[id] = true;
  }
  for ( auto& n : nodes_ )
  {
    if ( n.alive && !reachable[n.id] )
    {
      unregister( n.id );
      n.alive = false;
    }
  }
  for ( auto& n : nodes_ )
  {
    if ( n.alive )
    {
      std::erase_if( n.parents, [&]( node_id p ) { return !nodes_[p].alive; } );
    }
  }
  for ( auto& n : nodes_ )
  {
    if ( !n.alive )
    {
      n.children.clear();
      n.parents.clear();
    }
  }
  depths_dirty_ = true;
}

node_id make_and_bounded( esop_dag& dag, std::vector<node_id> children, unsigned max_and_arity )
{
  if ( children.size() <= 1u )
  {
    return dag.make( node_kind::and_node, std::move( children ) );
  }
  auto const arity = max_and_arity - 1u;
  if ( max_and_arity < 3u )
  {
    throw std::invalid_argument( "a Toffoli size of " + std::to_string( max_and_arity ) + " cannot realize a product" );
  }
  if ( children.size() <= arity )
  {
    return dag.make( node_kind::and_node, std::move( children ) );
  }
  /* leading operands stay at the outer node, the tail is nested */
  std::vector<node_id> tail( children.begin() + ( arity - 1u ), children.end() );
  children.resize( arity - 1u );
  children.push_back( make_and_bounded( dag, std::move( tail ), max_and_arity ) );
  return dag.make( node_kind::and_node, std::move( children ) );
}

node_id make_cube_node( esop_dag& dag, cube c, unsigned max_and_arity )
{
  auto const vars = c.variables();
  if ( vars.empty() )
  {
    return dag.constant( true );
  }
  if ( vars.size() >= 2u && max_and_arity < 3u )
  {
    throw std::invalid_argument( "a Toffoli size of 2 cannot realize cube " + to_string( c ) );
  }
  std::vector<node_id> ids;
  for ( auto v : vars )
  {
    ids.push_back( dag.identifier( v ) );
  }
  return make_and_bounded( dag, std::move( ids ), max_and_arity );
}

esop_dag build_dag( std::vector<esop_expression> const& exprs, unsigned max_and_arity,
                    std::vector<std::string> const& output_names )
{
  if ( max_and_arity < 2u )
  {
    throw std::invalid_argument( "Toffoli size must be at least 2" );
  }
  if ( exprs.empty() )
  {
    throw std::invalid_argument( "no output expressions given" );
  }
  auto const n = exprs.front().num_vars();
  esop_dag dag( n );
  for ( std::size_t o = 0; o < exprs.size(); ++o )
  {
    if ( exprs[o].num_vars() != n )
    {
      throw std::invalid_argument( "expressions disagree on the number of variables" );
    }
    std::vector<node_id> terms;
    for ( auto c : exprs[o].cubes() )
    {
      terms.push_back( make_cube_node( dag, c, max_and_arity ) );
    }
    auto const top = terms.empty()          ? dag.constant( false )
                     : terms.size() == 1u ? terms.front()
                                          : dag.make( node_kind::xor_node, std::move( terms ) );
    auto name = o < output_names.size() ? output_names[o] : "y" + std::to_string( o + 1u );
    dag.add_output( std::move( name ), top );
  }
  return dag;
}

esop_expression node_expression( esop_dag const& dag, node_id id )
{
  auto const& n = dag.node( id );
  switch ( n.kind )
  {
  case node_kind::constant:
    return esop_expression::constant( dag.num_vars(), n.value != 0u );
  case node_kind::identifier:
    return esop_expression::variable( dag.num_vars(), n.value );
  case node_kind::and_node:
  {
    auto acc = esop_expression::constant( dag.num_vars(), true );
    for ( auto c : n.children )
    {
      acc = acc * node_expression( dag, c );
    }
    return acc;
  }
  case node_kind::xor_node:
  {
    esop_expression acc( dag.num_vars() );
    for ( auto c : n.children )
    {
      acc ^= node_expression( dag, c );
    }
    return acc;
  }
  case node_kind::root:
    break;
  }
  throw std::invalid_argument( "the root has no single expression" );
}

std::vector<esop_expression> dag_to_expressions( esop_dag const& dag )
{
  auto const order = dag.topological_order();
  std::vector<std::optional<esop_expression>> memo( dag.capacity() );
  for ( auto it = order.rbegin(); it != order.rend(); ++it )
  {
    auto const& n = dag.node( *it );
    if ( n.kind == node_kind::root )
    {
      continue;
    }
    if ( n.is_leaf() )
    {
      memo[n.id] = node_expression( dag, n.id );
      continue;
    }
    if ( n.kind == node_kind::and_node )
    {
      auto acc = esop_expression::constant( dag.num_vars(), true );
      for ( auto c : n.children )
      {
        acc = acc * *memo[c];
      }
      memo[n.id] = std::move( acc );
    }
    else
    {
      esop_expression acc( dag.num_vars() );
      for ( auto c : n.children )
      {
        acc ^= *memo[c];
      }
      memo[n.id] = std::move( acc );
    }
  }
  std::vector<esop_expression> exprs;
  for ( auto const& o : dag.outputs() )
  {
    exprs.push_back( *memo[o.node] );
  }
  return exprs;
}

std::vector<truth_column> evaluate_columns( esop_dag const& dag, std::span<truth_column const> leaves )
{
  if ( leaves.empty() )
  {
    throw std::invalid_argument( "no leaf functions given" );
  }
  auto const nv = leaves.front().num_vars();
  auto const order = dag.topological_order();
  std::vector<std::optional<truth_column>> memo( dag.capacity() );
  for ( auto it = order.rbegin(); it != order.rend(); ++it )
  {
    auto const& n = dag.node( *it );
    switch ( n.kind )
    {
    case node_kind::root:
      break;
    case node_kind::constant:
      memo[n.id] = truth_column::constant( nv, n.value != 0u );
      break;
    case node_kind::identifier:
      if ( n.value >= leaves.size() )
      {
        throw std::out_of_range( "identifier has no bound leaf function" );
      }
      memo[n.id] = leaves[n.value];
      break;
    case node_kind::and_node:
    {
      auto acc = *memo[n.children.front()];
      for ( std::size_t i = 1; i < n.children.size(); ++i )
      {
        acc &= *memo[n.children[i]];
      }
      memo[n.id] = std::move( acc );
      break;
    }
    case node_kind::xor_node:
    {
      auto acc = *memo[n.children.front()];
      for ( std::size_t i = 1; i < n.children.size(); ++i )
      {
        acc ^= *memo[n.children[i]];
      }
      memo[n.id] = std::move( acc );
      break;
    }
    }
  }
  std::vector<truth_column> cols;
  for ( auto const& o : dag.outputs() )
  {
    cols.push_back( *memo[o.node] );
  }
  return cols;
}

std::vector<std::string> validate_dag( esop_dag const& dag )
{
  std::vector<std::string> issues;
  auto const valid = [&]( node_id id ) { return id < dag.capacity() && dag.node( id ).alive; };
  std::size_t roots = 0u;
  for ( std::size_t i = 0; i < dag.capacity(); ++i )
  {
    auto const& n = dag.node( static_cast<node_id>( i ) );
    if ( !n.alive )
    {
      continue;
    }
    auto const tag = std::string( to_string( n.kind ) ) + " " + std::to_string( n.id );
    if ( n.kind == node_kind::root )
    {
      ++roots;
    }
    if ( n.is_leaf() && !n.children.empty() )
    {
      issues.push_back( tag + " is a leaf with children" );
    }
    if ( n.is_gate() && n.children.size() < 2u )
    {
      issues.push_back( tag + " has fewer than two children" );
    }
    auto sorted = n.children;
    std::sort( sorted.begin(), sorted.end() );
    if ( std::adjacent_find( sorted.begin(), sorted.end() ) != sorted.end() )
    {
      issues.push_back( tag + " has a repeated child" );
    }
    for ( auto c : n.children )
    {
      if ( !valid( c ) )
      {
        issues.push_back( tag + " has dangling child " + std::to_string( c ) );
      }
      else if ( !has( dag.node( c ).parents, n.id ) )
      {
        issues.push_back( tag + " is not listed as parent of child " + std::to_string( c ) );
      }
    }
    for ( auto p : n.parents )
    {
      if ( !valid( p ) )
      {
        issues.push_back( tag + " has dangling parent " + std::to_string( p ) );
      }
      else if ( !has( dag.node( p ).children, n.id ) )
      {
        issues.push_back( tag + " lists parent " + std::to_string( p ) + " which does not reference it" );
      }
    }
  }
  if ( roots != 1u || !valid( dag.root() ) || dag.node( dag.root() ).kind != node_kind::root )
  {
    issues.push_back( "expected exactly one root node" );
  }
  for ( auto const& o : dag.outputs() )
  {
    if ( !valid( o.node ) || !has( dag.node( dag.root() ).children, o.node ) )
    {
      issues.push_back( "output " + o.name + " is not a child of the root" );
    }
  }
  if ( !issues.empty() )
  {
    return issues;
  }
  try
  {
    dag.recompute_depths();
  }
  catch ( std::logic_error const& )
  {
    issues.push_back( "graph contains a cycle" );
    return issues;
  }
  for ( auto id : dag.topological_order() )
  {
    for ( auto c : dag.node( id ).children )
    {
      if ( dag.node( c ).depth <= dag.node( id ).depth )
      {
        issues.push_back( "depth of node " + std::to_string( c ) + " does not exceed its parent's" );
      }
    }
  }
  return issues;
}

namespace
{

std::string label( dag_node const& n )
{
  switch ( n.kind )
  {
  case node_kind::constant:
    return std::to_string( n.value );
  case node_kind::identifier:
    return "x" + std::to_string( n.value + 1u );
  case node_kind::root:
    return "root";
  case node_kind::and_node:
    return "and";
  case node_kind::xor_node:
    return "xor";
  }
  return "?";
}

} // namespace

std::string to_text( esop_dag const& dag )
{
  dag.recompute_depths();
  std::ostringstream os;
  for ( auto id : dag.topological_order() )
  {
    auto const& n = dag.node( id );
    os << id << ' ' << label( n ) << '_' << n.depth;
    if ( !n.children.empty() )
    {
      os << " <-";
      for ( auto c : n.children )
      {
        os << ' ' << c;
      }
    }
    os << '\n';
  }
  for ( auto const& o : dag.outputs() )
  {
    os << "output " << o.name << " = " << o.node << '\n';
  }
  return os.str();
}

std::string to_dot( esop_dag const& dag )
{
  dag.recompute_depths();
  std::ostringstream os;
  os << "digraph esop {\n";
  for ( auto id : dag.topological_order() )
  {
    auto const& n = dag.node( id );
    os << "  n" << id << " [label=\"" << label( n ) << '_' << n.depth << "\"];\n";
  }
  for ( auto id : dag.topological_order() )
  {
    for ( auto c : dag.node( id ).children )
    {
      os << "  n" << id << " -> n" << c << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

} // namespace revsyn
