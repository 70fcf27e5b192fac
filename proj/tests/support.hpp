#pragma once

#include <revsyn/circuit.hpp>
#include <revsyn/esop.hpp>
#include <revsyn/truth_table.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace revsyn::test
{

using rng_t = std::mt19937_64;

inline truth_table random_table( rng_t& rng, unsigned n, unsigned m )
{
  std::vector<std::uint64_t> rows( std::size_t{ 1 } << n );
  std::uniform_int_distribution<std::uint64_t> dist( 0u, ( std::uint64_t{ 1 } << m ) - 1u );
  for ( auto& r : rows )
  {
    r = dist( rng );
  }
  return truth_table( n, m, std::move( rows ) );
}

inline permutation random_permutation( rng_t& rng, unsigned n )
{
  std::vector<std::uint64_t> images( std::size_t{ 1 } << n );
  std::iota( images.begin(), images.end(), 0u );
  std::shuffle( images.begin(), images.end(), rng );
  return permutation( std::move( images ) );
}

inline esop_expression random_expression( rng_t& rng, unsigned n, unsigned max_cubes )
{
  std::uniform_int_distribution<std::uint32_t> mask( 0u, ( 1u << n ) - 1u );
  std::uniform_int_distribution<unsigned> count( 0u, max_cubes );
  std::vector<cube> cubes;
  for ( auto k = count( rng ); k > 0u; --k )
  {
    cubes.emplace_back( mask( rng ) );
  }
  return esop_expression( n, cubes );
}

/* random legal gates: Toffoli family with up to 3 controls, the odd Fredkin */
inline circuit random_circuit( rng_t& rng, unsigned inputs, unsigned constants, unsigned gates )
{
  circuit c;
  for ( unsigned i = 0; i < inputs; ++i )
  {
    c.add_input( "x" + std::to_string( i + 1u ) );
  }
  for ( unsigned i = 0; i < constants; ++i )
  {
    c.add_constant( "c" + std::to_string( i ), rng() & 1u );
  }
  auto const lines = inputs + constants;
  std::vector<line_id> ids( lines );
  std::iota( ids.begin(), ids.end(), 0u );
  for ( unsigned g = 0; g < gates; ++g )
  {
    std::shuffle( ids.begin(), ids.end(), rng );
    bool const fredkin = lines >= 2u && rng() % 8u == 0u;
    auto const reserved = fredkin ? 2u : 1u;
    auto const max_controls = std::min( 3u, lines - reserved );
    auto const k = static_cast<unsigned>( rng() % ( max_controls + 1u ) );
    std::vector<line_id> controls( ids.begin() + reserved, ids.begin() + reserved + k );
    if ( fredkin )
    {
      c.add_gate( gate::fredkin( controls, ids[0], ids[1] ) );
    }
    else
    {
      c.add_gate( gate::toffoli( controls, ids[0] ) );
    }
  }
  return c;
}

/* plain bit-level simulator, kept apart from the library's column simulator */
inline std::uint64_t run_bits( circuit const& c, std::uint64_t state )
{
  auto bit = [&]( line_id l ) { return ( state >> l ) & 1u; };
  for ( auto const& g : c.gates() )
  {
    bool on = true;
    for ( auto l : g.controls )
    {
      on = on && bit( l );
    }
    if ( !on )
    {
      continue;
    }
    if ( g.family == gate_family::fredkin )
    {
      auto const a = bit( g.target ), b = bit( *g.second_target );
      if ( a != b )
      {
        state ^= ( std::uint64_t{ 1 } << g.target ) | ( std::uint64_t{ 1 } << *g.second_target );
      }
    }
    else
    {
      state ^= std::uint64_t{ 1 } << g.target;
    }
  }
  return state;
}

inline std::uint64_t initial_state( circuit const& c, std::uint64_t input )
{
  std::uint64_t state = 0u;
  unsigned next = 0u;
  for ( line_id l = 0; l < c.num_lines(); ++l )
  {
    auto const& info = c.line( l );
    bool const v = info.origin == line_origin::primary_input ? ( ( input >> next++ ) & 1u ) : info.initial_value;
    state |= std::uint64_t( v ) << l;
  }
  return state;
}

/* same as run_bits for circuits wider than a machine word */
inline std::vector<bool> run_wide( circuit const& c, std::uint64_t input )
{
  std::vector<bool> state( c.num_lines() );
  unsigned next = 0u;
  for ( line_id l = 0; l < c.num_lines(); ++l )
  {
    auto const& info = c.line( l );
    state[l] = info.origin == line_origin::primary_input ? ( ( input >> next++ ) & 1u ) : info.initial_value;
  }
  for ( auto const& g : c.gates() )
  {
    bool on = true;
    for ( auto l : g.controls )
    {
      on = on && state[l];
    }
    if ( !on )
    {
      continue;
    }
    if ( g.family == gate_family::fredkin )
    {
      bool const a = state[g.target];
      state[g.target] = state[*g.second_target];
      state[*g.second_target] = a;
    }
    else
    {
      state[g.target] = !state[g.target];
    }
  }
  return state;
}

/* every output line carries its column on every input */
inline bool realizes( circuit const& c, truth_table const& spec )
{
  if ( c.num_inputs() != spec.num_inputs() )
  {
    return false;
  }
  std::vector<line_id> out( spec.num_outputs() );
  for ( unsigned o = 0; o < spec.num_outputs(); ++o )
  {
    auto const l = c.output_line( o );
    if ( !l )
    {
      return false;
    }
    out[o] = *l;
  }
  for ( std::uint64_t x = 0; x < spec.num_rows(); ++x )
  {
    auto const final = run_wide( c, x );
    for ( unsigned o = 0; o < spec.num_outputs(); ++o )
    {
      if ( final[out[o]] != bool( ( spec.row( x ) >> o ) & 1u ) )
      {
        return false;
      }
    }
  }
  return true;
}

/* ANF evaluated cube by cube */
inline bool eval_cubes( std::vector<cube> const& cubes, std::uint64_t x )
{
  bool v = false;
  for ( auto c : cubes )
  {
    v ^= ( x & c.mask() ) == c.mask();
  }
  return v;
}

} // namespace revsyn::test
