#include <revsyn/optimize.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace revsyn
{

namespace
{

using mask_list = std::vector<std::uint32_t>;

mask_list masks_of( esop_expression const& e )
{
  mask_list m;
  m.reserve( e.size() );
  for ( auto c : e.cubes() )
  {
    m.push_back( c.mask() );
  }
  return m;
}

esop_expression from_masks( unsigned num_vars, mask_list const& masks )
{
  std::vector<cube> cubes;
  cubes.reserve( masks.size() );
  for ( auto m : masks )
  {
    cubes.emplace_back( m );
  }
  return esop_expression( num_vars, std::move( cubes ) );
}

std::uint32_t common_cube( mask_list const& masks )
{
  std::uint32_t c = ~0u;
  for ( auto m : masks )
  {
    c &= m;
  }
  return masks.empty() ? 0u : c;
}

struct kernel_search
{
  esop_expression const& dividend;
  std::size_t limit;
  kernel_set& out;
  std::set<std::pair<std::uint32_t, mask_list>> seen;

  void record( mask_list const& kernel, std::uint32_t co_kernel )
  {
    if ( !seen.emplace( co_kernel, kernel ).second )
    {
      return;
    }
    kernel_entry e;
    e.kernel = from_masks( dividend.num_vars(), kernel );
    e.co_kernel = cube{ co_kernel };
    auto [q, r] = weak_divide( dividend, e.kernel );
    e.quotient = std::move( q );
    e.remainder = std::move( r );
    out.push_back( std::move( e ) );
  }

  void run( mask_list const& g, unsigned start, std::uint32_t co_kernel )
  {
    auto const n = dividend.num_vars();
    for ( unsigned i = start; i < n && out.size() < limit; ++i )
    {
      mask_list with;
      for ( auto m : g )
      {
        if ( ( m >> i ) & 1u )
        {
          with.push_back( m );
        }
      }
      if ( with.size() < 2u )
      {
        continue;
      }
      auto const c = common_cube( with );
      if ( c & ( ( 1u << i ) - 1u ) )
      {
        continue;
      }
      for ( auto& m : with )
      {
        m &= ~c;
      }
      std::sort( with.begin(), with.end() );
      run( with, i + 1u, co_kernel | c );
    }
    if ( co_kernel != 0u && out.size() < limit )
    {
      record( g, co_kernel );
    }
  }
};

} // namespace

std::pair<esop_expression, esop_expression> weak_divide( esop_expression const& dividend, esop_expression const& divisor )
{
  if ( divisor.empty() )
  {
    throw std::invalid_argument( "division by the zero expression" );
  }
  auto const support = divisor.support();
  std::optional<std::set<std::uint32_t>> quotient;
  for ( auto d : divisor.cubes() )
  {
    std::set<std::uint32_t> q;
    for ( auto m : dividend.cubes() )
    {
      if ( m.contains( d ) && ( m.mask() & ~d.mask() & support ) == 0u )
      {
        q.insert( m.mask() & ~d.mask() );
      }
    }
    if ( !quotient )
    {
      quotient = std::move( q );
    }
    else
    {
      std::set<std::uint32_t> both;
      std::set_intersection( quotient->begin(), quotient->end(), q.begin(), q.end(),
                             std::inserter( both, both.begin() ) );
      quotient = std::move( both );
    }
  }
  auto const q = from_masks( dividend.num_vars(), mask_list( quotient->begin(), quotient->end() ) );
  return { q, dividend ^ ( q * divisor ) };
}

kernel_set extract_kernels( esop_expression const& expr, std::size_t limit )
{
  kernel_set out;
  if ( expr.size() < 2u )
  {
    return out;
  }
  auto masks = masks_of( expr );
  auto const c = common_cube( masks );
  for ( auto& m : masks )
  {
    m &= ~c;
  }
  std::sort( masks.begin(), masks.end() );
  kernel_search search{ expr, limit, out, {} };
  search.run( masks, 0u, c );
  return out;
}

std::optional<kernel_entry> select_divisor( kernel_set const& kernels, unsigned threshold )
{
  kernel_entry const* best = nullptr;
  auto const better = []( kernel_entry const& a, kernel_entry const& b ) {
    if ( a.remainder.size() != b.remainder.size() )
    {
      return a.remainder.size() < b.remainder.size();
    }
    if ( a.kernel.size() != b.kernel.size() )
    {
      return a.kernel.size() > b.kernel.size();
    }
    if ( a.co_kernel != b.co_kernel )
    {
      return a.co_kernel < b.co_kernel;
    }
    return a.kernel.cubes() < b.kernel.cubes();
  };
  for ( auto const& k : kernels )
  {
    if ( k.kernel.size() > threshold && ( !best || better( k, *best ) ) )
    {
      best = &k;
    }
  }
  if ( !best )
  {
    return std::nullopt;
  }
  return *best;
}

factored_form factored_form::flat( esop_expression const& expr )
{
  factored_form f;
  if ( expr.empty() )
  {
    return f;
  }
  if ( expr.size() == 1u )
  {
    f.type = kind::term;
    f.term = expr.cubes().front();
    return f;
  }
  f.type = kind::sum;
  for ( auto c : expr.cubes() )
  {
    factored_form t;
    t.type = kind::term;
    t.term = c;
    f.operands.push_back( t );
  }
  return f;
}

esop_expression factored_form::expand( unsigned num_vars ) const
{
  switch ( type )
  {
  case kind::zero:
    return esop_expression( num_vars );
  case kind::term:
    return esop_expression( num_vars, { term } );
  case kind::product:
  {
    auto acc = esop_expression::constant( num_vars, true );
    for ( auto const& o : operands )
    {
      acc = acc * o.expand( num_vars );
    }
    return acc;
  }
  case kind::sum:
  {
    esop_expression acc( num_vars );
    for ( auto const& o : operands )
    {
      acc ^= o.expand( num_vars );
    }
    return acc;
  }
  }
  return esop_expression( num_vars );
}

bool factored_form::is_flat() const
{
  return std::all_of( operands.begin(), operands.end(),
                      []( factored_form const& o ) { return o.type == kind::term; } ) &&
         type != kind::product;
}

factored_form factor_expression( esop_expression const& expr, optimize_params const& params )
{
  if ( params.kernel_threshold == 0u || expr.size() < 2u )
  {
    return factored_form::flat( expr );
  }
  auto const best = select_divisor( extract_kernels( expr, params.max_kernels ), params.kernel_threshold );
  if ( !best )
  {
    return factored_form::flat( expr );
  }
  factored_form product;
  product.type = factored_form::kind::product;
  product.operands.push_back( factor_expression( best->quotient, params ) );
  product.operands.push_back( factor_expression( best->kernel, params ) );
  if ( best->remainder.empty() )
  {
    return product;
  }
  factored_form sum;
  sum.type = factored_form::kind::sum;
  sum.operands.push_back( std::move( product ) );
  auto rest = factor_expression( best->remainder, params );
  if ( rest.type == factored_form::kind::sum )
  {
    for ( auto& o : rest.operands )
    {
      sum.operands.push_back( std::move( o ) );
    }
  }
  else
  {
    sum.operands.push_back( std::move( rest ) );
  }
  return sum;
}

node_id add_factored_form( esop_dag& dag, factored_form const& form, unsigned max_and_arity )
{
  switch ( form.type )
  {
  case factored_form::kind::zero:
    return dag.constant( false );
  case factored_form::kind::term:
    return make_cube_node( dag, form.term, max_and_arity );
  case factored_form::kind::sum:
  {
    std::vector<node_id> ids;
    for ( auto const& o : form.operands )
    {
      ids.push_back( add_factored_form( dag, o, max_and_arity ) );
    }
    return dag.make( node_kind::xor_node, std::move( ids ) );
  }
  case factored_form::kind::product:
  {
    std::vector<node_id> ids;
    for ( auto const& o : form.operands )
    {
      if ( o.type == factored_form::kind::term )
      {
        for ( auto v : o.term.variables() )
        {
          ids.push_back( dag.identifier( v ) );
        }
      }
      else
      {
        ids.push_back( add_factored_form( dag, o, max_and_arity ) );
      }
    }
    return make_and_bounded( dag, std::move( ids ), max_and_arity );
  }
  }
  return dag.constant( false );
}

mutation_report kernel_extraction( esop_dag& dag, optimize_params const& params )
{
  mutation_report r{ "kernel_extraction" };
  if ( params.kernel_threshold == 0u )
  {
    return r;
  }
  auto const before = static_cast<long>( dag.node_count() );
  for ( std::size_t o = 0; o < dag.outputs().size(); ++o )
  {
    auto const old = dag.outputs()[o].node;
    auto const& n = dag.node( old );
    if ( n.kind != node_kind::xor_node )
    {
      continue;
    }
    auto const form = factor_expression( node_expression( dag, old ), params );
    if ( form.is_flat() )
    {
      continue;
    }
    auto const fresh = add_factored_form( dag, form, params.max_and_arity );
    if ( fresh != old )
    {
      dag.redirect( old, fresh );
      ++r.applications;
      ++r.nodes_touched;
    }
  }
  dag.collect_garbage();
  r.node_delta = static_cast<long>( dag.node_count() ) - before;
  return r;
}

namespace
{

std::size_t common_children( std::vector<node_id> const& a, std::vector<node_id> const& b )
{
  std::size_t n = 0u;
  auto i = a.begin();
  auto j = b.begin();
  while ( i != a.end() && j != b.end() )
  {
    if ( *i < *j )
    {
      ++i;
    }
    else if ( *j < *i )
    {
      ++j;
    }
    else
    {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

std::vector<node_id> minus( std::vector<node_id> const& a, std::vector<node_id> const& b )
{
  std::vector<node_id> out;
  std::set_difference( a.begin(), a.end(), b.begin(), b.end(), std::back_inserter( out ) );
  return out;
}

std::vector<node_id> both( std::vector<node_id> const& a, std::vector<node_id> const& b )
{
  std::vector<node_id> out;
  std::set_intersection( a.begin(), a.end(), b.begin(), b.end(), std::back_inserter( out ) );
  return out;
}

} // namespace

bool shareable( esop_dag const& dag, node_id a, node_id b )
{
  if ( a == b )
  {
    return false;
  }
  auto const& na = dag.node( a );
  auto const& nb = dag.node( b );
  if ( !na.alive || !nb.alive || !na.is_gate() || na.kind != nb.kind )
  {
    return false;
  }
  auto const common = common_children( na.children, nb.children );
  if ( common == na.children.size() || common == nb.children.size() )
  {
    return true;
  }
  return 2u * common > na.children.size() + nb.children.size();
}

namespace
{

/* returns false when the pair turned out not to be rewritable */
bool share( esop_dag& dag, node_id i, node_id j )
{
  auto const ci = dag.node( i ).children;
  auto const cj = dag.node( j ).children;
  auto const kind = dag.node( i ).kind;
  if ( ci == cj )
  {
    dag.redirect( j, i );
    return true;
  }
  auto const common = both( ci, cj );
  if ( common.size() == ci.size() )
  {
    auto rest = minus( cj, ci );
    rest.push_back( i );
    dag.set_children( j, std::move( rest ) );
    return true;
  }
  if ( common.size() == cj.size() )
  {
    auto rest = minus( ci, cj );
    rest.push_back( j );
    dag.set_children( i, std::move( rest ) );
    return true;
  }
  auto const s = dag.make( kind, common );
  auto ri = minus( ci, common );
  ri.push_back( s );
  auto rj = minus( cj, common );
  rj.push_back( s );
  dag.set_children( i, std::move( ri ) );
  dag.set_children( j, std::move( rj ) );
  return true;
}

} // namespace

mutation_report common_cube_sharing( esop_dag& dag, unsigned max_sweeps )
{
  mutation_report r{ "common_cube_sharing" };
  auto const before = static_cast<long>( dag.node_count() );
  for ( unsigned sweep = 0; sweep < max_sweeps; ++sweep )
  {
    auto const dmax = dag.max_depth();
    std::vector<std::vector<node_id>> levels( dmax + 1u );
    for ( std::uint32_t d = 1; d <= dmax; ++d )
    {
      for ( auto id : dag.nodes_at_depth( d ) )
      {
        if ( dag.node( id ).is_gate() )
        {
          levels[d].push_back( id );
        }
      }
    }
    std::set<node_id> touched;
    bool changed = false;
    for ( std::uint32_t depth = dmax >= 1u ? dmax - 1u : 0u; depth >= 1u; --depth )
    {
      for ( auto i : levels[depth] )
      {
        if ( touched.count( i ) || !dag.node( i ).alive || !dag.node( i ).is_gate() )
        {
          continue;
        }
        bool done = false;
        for ( auto dj = depth; dj >= 1u && !done; --dj )
        {
          for ( auto j : levels[dj] )
          {
            if ( j == i || touched.count( j ) || !shareable( dag, i, j ) )
            {
              continue;
            }
            if ( share( dag, i, j ) )
            {
              touched.insert( i );
              touched.insert( j );
              ++r.applications;
              changed = true;
              done = true;
              break;
            }
          }
        }
      }
    }
    r.nodes_touched += touched.size();
    if ( !changed )
    {
      break;
    }
  }
  dag.collect_garbage();
  r.node_delta = static_cast<long>( dag.node_count() ) - before;
  return r;
}

namespace
{

bool reaches( esop_dag const& dag, node_id from, node_id target )
{
  std::vector<node_id> stack{ from };
  std::set<node_id> seen;
  while ( !stack.empty() )
  {
    auto const id = stack.back();
    stack.pop_back();
    if ( id == target )
    {
      return true;
    }
    if ( !seen.insert( id ).second )
    {
      continue;
    }
    for ( auto c : dag.node( id ).children )
    {
      stack.push_back( c );
    }
  }
  return false;
}

struct expansion
{
  node_id xor_node;
  /* the other operands of the xor node besides the leaf */
  std::vector<node_id> others;
};

bool contains( std::vector<node_id> const& v, node_id x )
{
  return std::binary_search( v.begin(), v.end(), x );
}

bool rewritable( esop_dag const& dag, node_id leaf, node_id parent, expansion const& e, bool generalized )
{
  auto const& p = dag.node( parent );
  if ( parent == e.xor_node || !p.alive || !p.is_gate() || !contains( p.children, leaf ) )
  {
    return false;
  }
  if ( generalized && reaches( dag, e.xor_node, parent ) )
  {
    return false;
  }
  if ( p.kind == node_kind::xor_node )
  {
    return true;
  }
  return e.others.size() == 1u && contains( p.children, e.others.front() );
}

std::vector<expansion> expansions( esop_dag const& dag, node_id leaf, bool generalized )
{
  std::vector<expansion> out;
  for ( auto p : dag.node( leaf ).parents )
  {
    auto const& n = dag.node( p );
    if ( !n.alive || n.kind != node_kind::xor_node )
    {
      continue;
    }
    auto others = n.children;
    others.erase( std::remove( others.begin(), others.end(), leaf ), others.end() );
    if ( others.size() == 1u && dag.node( others.front() ).kind == node_kind::identifier )
    {
      out.push_back( { p, std::move( others ) } );
    }
    else if ( generalized && !others.empty() )
    {
      out.push_back( { p, std::move( others ) } );
    }
  }
  std::sort( out.begin(), out.end(), []( auto const& a, auto const& b ) { return a.xor_node < b.xor_node; } );
  out.erase( std::unique( out.begin(), out.end(), []( auto const& a, auto const& b ) { return a.xor_node == b.xor_node; } ),
             out.end() );
  return out;
}

bool has_rewritable_parent( esop_dag const& dag, node_id leaf, bool generalized )
{
  for ( auto const& e : expansions( dag, leaf, generalized ) )
  {
    for ( auto p : dag.node( leaf ).parents )
    {
      if ( rewritable( dag, leaf, p, e, generalized ) )
      {
        return true;
      }
    }
  }
  return false;
}

} // namespace

std::optional<node_id> parent_reduction_candidate( esop_dag const& dag, bool generalized )
{
  std::optional<node_id> best;
  std::size_t best_parents = 0u;
  for ( auto id : dag.topological_order() )
  {
    auto const& n = dag.node( id );
    if ( n.kind != node_kind::identifier || n.parents.size() < 2u ||
         std::find( n.parents.begin(), n.parents.end(), dag.root() ) != n.parents.end() )
    {
      continue;
    }
    if ( best && n.parents.size() >= best_parents && !( n.parents.size() == best_parents && id < *best ) )
    {
      continue;
    }
    if ( has_rewritable_parent( dag, id, generalized ) )
    {
      best = id;
      best_parents = n.parents.size();
    }
  }
  return best;
}

mutation_report reduce_parents( esop_dag& dag, node_id leaf, bool generalized )
{
  mutation_report r{ "parent_reduction" };
  auto const before = static_cast<long>( dag.node_count() );
  if ( dag.node( leaf ).kind != node_kind::identifier )
  {
    return r;
  }
  bool progress = true;
  while ( progress )
  {
    progress = false;
    for ( auto const& e : expansions( dag, leaf, generalized ) )
    {
      auto const parents = dag.node( leaf ).parents;
      auto const p = std::find_if( parents.begin(), parents.end(),
                                   [&]( node_id q ) { return rewritable( dag, leaf, q, e, generalized ); } );
      if ( p == parents.end() )
      {
        continue;
      }
      auto const count = parents.size();
      auto const pn = dag.node( *p );
      if ( pn.kind == node_kind::xor_node )
      {
        /* leaf = (leaf ^ b) ^ b */
        auto ch = pn.children;
        ch.erase( std::remove( ch.begin(), ch.end(), leaf ), ch.end() );
        ch.push_back( e.xor_node );
        ch.insert( ch.end(), e.others.begin(), e.others.end() );
        dag.set_children( *p, std::move( ch ) );
      }
      else
      {
        /* leaf.b.R = ((leaf ^ b).b.R) ^ (b.R) */
        auto const b = e.others.front();
        auto rest = pn.children;
        rest.erase( std::remove_if( rest.begin(), rest.end(), [&]( node_id c ) { return c == leaf || c == b; } ),
                    rest.end() );
        auto with = rest;
        with.push_back( e.xor_node );
        with.push_back( b );
        auto without = rest;
        without.push_back( b );
        auto const n1 = dag.make( node_kind::and_node, std::move( with ) );
        auto const n2 = dag.make( node_kind::and_node, std::move( without ) );
        auto const top = dag.make( node_kind::xor_node, { n1, n2 } );
        dag.redirect( *p, top );
      }
      ++r.nodes_touched;
      if ( dag.node( leaf ).parents.size() < count )
      {
        ++r.applications;
        progress = true;
      }
      /* expansions are stale after any rewrite */
      break;
    }
  }
  r.node_delta = static_cast<long>( dag.node_count() ) - before;
  return r;
}

} // namespace revsyn
