#include <revsyn/ancilla_free.hpp>

#include <revsyn/anf.hpp>
#include <revsyn/mapper.hpp>
#include <revsyn/simulation.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <tuple>

namespace revsyn
{

transformation transformation::make( std::vector<unsigned> controls, unsigned target )
{
  std::sort( controls.begin(), controls.end() );
  transformation t;
  switch ( controls.size() )
  {
  case 0u:
    t.kind = transformation_kind::t1;
    break;
  case 1u:
    t.kind = transformation_kind::t2;
    break;
  case 2u:
    t.kind = transformation_kind::t3;
    break;
  case 3u:
    t.kind = transformation_kind::t4;
    break;
  default:
    throw std::invalid_argument( "transformations have at most three controls" );
  }
  if ( std::find( controls.begin(), controls.end(), target ) != controls.end() )
  {
    throw std::invalid_argument( "transformation target is also a control" );
  }
  t.controls = std::move( controls );
  t.target = target;
  return t;
}

gate transformation::to_gate() const
{
  return gate::toffoli( { controls.begin(), controls.end() }, target );
}

std::string to_string( transformation const& t )
{
  std::string s = "T" + std::to_string( t.controls.size() + 1u ) + "(";
  for ( auto c : t.controls )
  {
    s += "x" + std::to_string( c + 1u ) + ",";
  }
  return s + "x" + std::to_string( t.target + 1u ) + ")";
}

expression_state expression_state::from_permutation( permutation const& spec )
{
  return { anf_per_output( truth_table_from_permutation( spec ) ), {} };
}

unsigned expression_state::num_vars() const
{
  return exprs.empty() ? 0u : exprs.front().num_vars();
}

unsigned expression_state::nonlinear_count() const
{
  return count_degree_at_least( 2u );
}

unsigned expression_state::count_degree_at_least( unsigned degree ) const
{
  unsigned count = 0u;
  for ( auto const& e : exprs )
  {
    count += static_cast<unsigned>(
        std::count_if( e.cubes().begin(), e.cubes().end(), [degree]( cube c ) { return c.degree() >= degree; } ) );
  }
  return count;
}

unsigned expression_state::literal_count() const
{
  unsigned count = 0u;
  for ( auto const& e : exprs )
  {
    count += e.literal_count();
  }
  return count;
}

bool expression_state::is_linear() const
{
  return count_degree_at_least( 2u ) == 0u;
}

bool expression_state::is_basic() const
{
  std::uint32_t seen = 0u;
  for ( auto const& e : exprs )
  {
    if ( e.size() != 1u || e.cubes().front().degree() != 1u || ( seen & e.cubes().front().mask() ) )
    {
      return false;
    }
    seen |= e.cubes().front().mask();
  }
  return true;
}

namespace
{

esop_expression replacement_of( transformation const& t, unsigned num_vars )
{
  cube product;
  for ( auto c : t.controls )
  {
    product = product * cube::literal( c );
  }
  return esop_expression( num_vars, { product } );
}

/* Lexicographic enumeration of (target, sorted control set) with `k` controls. */
template<class Fn>
void for_each_transformation( unsigned n, unsigned k, Fn&& fn )
{
  std::vector<unsigned> controls;
  for ( unsigned target = 0; target < n; ++target )
  {
    for ( std::uint32_t set = 0; set < ( 1u << n ); ++set )
    {
      if ( static_cast<unsigned>( std::popcount( set ) ) != k || ( ( set >> target ) & 1u ) )
      {
        continue;
      }
      controls.clear();
      for ( unsigned v = 0; v < n; ++v )
      {
        if ( ( set >> v ) & 1u )
        {
          controls.push_back( v );
        }
      }
      fn( transformation::make( controls, target ) );
    }
  }
}

/* Gauss-Jordan step on the linear part: row i keeps its pivot column only. */
std::optional<transformation> gaussian_step( expression_state const& state )
{
  auto const n = state.num_vars();
  std::uint32_t used = 0u;
  for ( auto const& e : state.exprs )
  {
    std::uint32_t row = e.support();
    auto const free = row & ~used;
    if ( free == 0u )
    {
      continue;
    }
    auto const pivot = static_cast<unsigned>( std::countr_zero( free ) );
    for ( unsigned j = 0; j < n; ++j )
    {
      if ( j != pivot && ( ( row >> j ) & 1u ) )
      {
        return transformation::make( { j }, pivot );
      }
    }
    used |= 1u << pivot;
  }
  return std::nullopt;
}

std::optional<transformation> constant_step( expression_state const& state )
{
  for ( auto const& e : state.exprs )
  {
    if ( e.contains( cube::one() ) && e.support() != 0u )
    {
      return transformation::make( {}, static_cast<unsigned>( std::countr_zero( e.support() ) ) );
    }
  }
  return std::nullopt;
}

bool invariant_holds( circuit const& c, std::vector<esop_expression> const& exprs, truth_table const& spec )
{
  auto const lines = simulate_columns( c );
  auto const n = spec.num_inputs();
  for ( std::uint64_t x = 0; x < spec.num_rows(); ++x )
  {
    std::uint64_t y = 0u;
    for ( unsigned j = 0; j < n; ++j )
    {
      y |= std::uint64_t{ lines[j].get( x ) } << j;
    }
    for ( unsigned i = 0; i < exprs.size(); ++i )
    {
      if ( exprs[i].evaluate( y ) != spec.get( x, i ) )
      {
        return false;
      }
    }
  }
  return true;
}

} // namespace

std::vector<esop_expression> substitute_all( std::vector<esop_expression> const& exprs, transformation const& t )
{
  std::vector<esop_expression> result;
  result.reserve( exprs.size() );
  for ( auto const& e : exprs )
  {
    result.push_back( e.substitute( t.target, replacement_of( t, e.num_vars() ) ) );
  }
  return result;
}

expression_state apply_substitution( expression_state state, transformation const& t )
{
  state.exprs = substitute_all( state.exprs, t );
  state.history.push_back( t );
  return state;
}

std::optional<transformation> check_t2( expression_state const& state, t2_policy policy )
{
  auto const before = state.nonlinear_count();
  for ( auto const& e : state.exprs )
  {
    auto const& cubes = e.cubes();
    for ( std::size_t i = 0; i < cubes.size(); ++i )
    {
      for ( std::size_t j = i + 1u; j < cubes.size(); ++j )
      {
        auto const p = cubes[i];
        auto const q = cubes[j];
        auto const common = p.mask() & q.mask();
        if ( p.degree() < 2u || q.degree() < 2u || common == 0u )
        {
          continue;
        }
        auto const only_p = p.mask() & ~common;
        auto const only_q = q.mask() & ~common;
        auto const unique = only_p | only_q;
        if ( unique == 0u )
        {
          continue;
        }
        auto const target = static_cast<unsigned>( std::countr_zero( unique ) );
        auto const other_side = ( ( only_p >> target ) & 1u ) ? only_q : only_p;
        auto const control_set = policy == t2_policy::unique_control ? other_side : common;
        for ( unsigned control = 0; control < 32u; ++control )
        {
          if ( !( ( control_set >> control ) & 1u ) )
          {
            continue;
          }
          auto const t = transformation::make( { control }, target );
          expression_state trial{ substitute_all( state.exprs, t ), {} };
          if ( trial.nonlinear_count() < before )
          {
            return t;
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace
{

std::optional<transformation> last_step( expression_state const& state )
{
  if ( state.history.empty() )
  {
    return std::nullopt;
  }
  return state.history.back();
}

std::optional<transformation> best_of( expression_state const& state, unsigned controls, unsigned degree,
                                       bool strict, std::optional<transformation> const& exclude )
{
  auto const n = state.num_vars();
  auto const before = state.count_degree_at_least( degree );
  std::optional<transformation> best;
  std::tuple<unsigned, unsigned, unsigned> best_score{};
  for_each_transformation( n, controls, [&]( transformation const& t ) {
    if ( exclude && t == *exclude )
    {
      return;
    }
    expression_state trial{ substitute_all( state.exprs, t ), {} };
    auto const primary = trial.count_degree_at_least( degree );
    if ( strict && primary >= before )
    {
      return;
    }
    std::tuple<unsigned, unsigned, unsigned> const s{ primary, trial.nonlinear_count(), trial.literal_count() };
    if ( !best || s < best_score )
    {
      best = t;
      best_score = s;
    }
  } );
  return best;
}

} // namespace

std::optional<transformation> find_t3( expression_state const& state )
{
  if ( state.num_vars() < 3u )
  {
    return std::nullopt;
  }
  return best_of( state, 2u, 2u, true, last_step( state ) );
}

std::optional<transformation> escalate_t3( expression_state const& state )
{
  if ( state.num_vars() < 3u )
  {
    return std::nullopt;
  }
  return best_of( state, 2u, 2u, false, last_step( state ) );
}

std::optional<transformation> find_t4( expression_state const& state )
{
  if ( state.num_vars() < 4u )
  {
    return std::nullopt;
  }
  return best_of( state, 3u, 3u, true, std::nullopt );
}

std::optional<transformation> linear_t2( expression_state const& state )
{
  auto const before = state.literal_count();
  std::optional<transformation> best;
  unsigned best_literals = before;
  for_each_transformation( state.num_vars(), 1u, [&]( transformation const& t ) {
    expression_state trial{ substitute_all( state.exprs, t ), {} };
    auto const literals = trial.literal_count();
    if ( literals < best_literals )
    {
      best = t;
      best_literals = literals;
    }
  } );
  return best;
}

ancilla_free_result ancilla_free_synthesize( permutation const& spec, ancilla_free_options const& options )
{
  auto const n = spec.num_vars();
  if ( n > 4u )
  {
    throw std::invalid_argument( "ancilla-free synthesis supports at most 4 variables" );
  }
  auto const table = truth_table_from_permutation( spec );
  auto const cap = options.iteration_cap != 0u ? options.iteration_cap : std::size_t{ 10u } << ( 2u * n );

  ancilla_free_result result;
  auto state = expression_state::from_permutation( spec );
  circuit c;
  for ( auto const& name : table.input_names() )
  {
    c.add_input( name );
  }

  auto apply = [&]( transformation const& t ) {
    state = apply_substitution( std::move( state ), t );
    c.add_gate( t.to_gate() );
    if ( options.check_steps && !invariant_holds( c, state.exprs, table ) )
    {
      throw std::logic_error( "substitution invariant broken after " + to_string( t ) );
    }
  };

  bool t4_phase = n >= 4u;
  bool gaussian = false;
  unsigned escalated_in_row = 0u;
  while ( !state.is_basic() )
  {
    if ( result.iterations++ >= cap )
    {
      result.message = "iteration cap of " + std::to_string( cap ) + " reached";
      result.transformations = state.history;
      return result;
    }
    if ( !state.is_linear() )
    {
      if ( t4_phase && state.count_degree_at_least( 3u ) > 0u )
      {
        if ( auto t = find_t4( state ) )
        {
          apply( *t );
          continue;
        }
      }
      t4_phase = false;
      auto candidate = check_t2( state, options.policy );
      if ( candidate && ( state.history.empty() || *candidate != state.history.back() ) )
      {
        apply( *candidate );
        escalated_in_row = 0u;
        continue;
      }
      auto t3 = find_t3( state );
      if ( !t3 && n >= 4u )
      {
        t3 = best_of( state, 3u, 2u, true, last_step( state ) );
      }
      if ( t3 )
      {
        apply( *t3 );
        escalated_in_row = 0u;
        continue;
      }
      if ( escalated_in_row >= options.max_escalations )
      {
        result.message = "no suitable transformation after " + std::to_string( escalated_in_row ) + " escalations";
        return result;
      }
      auto t = escalate_t3( state );
      if ( !t )
      {
        result.message = "no transformation available";
        return result;
      }
      apply( *t );
      ++escalated_in_row;
      ++result.escalations;
      continue;
    }
    std::optional<transformation> step;
    if ( !gaussian )
    {
      step = linear_t2( state );
      gaussian = !step;
    }
    if ( !step )
    {
      step = gaussian_step( state );
    }
    if ( !step )
    {
      step = constant_step( state );
    }
    if ( !step )
    {
      result.message = "linear phase stalled";
      return result;
    }
    apply( *step );
  }

  for ( unsigned i = 0; i < n; ++i )
  {
    c.assign_output( static_cast<line_id>( std::countr_zero( state.exprs[i].cubes().front().mask() ) ), i,
                     table.output_names()[i] );
  }
  auto const before = c.num_gates();
  c = place_outputs_positionally( std::move( c ), table );
  result.swaps = ( c.num_gates() - before ) / 3u;
  auto const check = verify_equivalence( c, table );
  if ( !check.equivalent )
  {
    throw verification_error( "ancilla-free circuit failed verification: " + check.message );
  }
  result.converged = true;
  result.transformations = state.history;
  result.cost = quantum_cost( c );
  result.circ = std::move( c );
  return result;
}

} // namespace revsyn
