#include <revsyn/cost.hpp>

#include <algorithm>

namespace revsyn
{

std::uint64_t gate_cost( gate const& g )
{
  std::uint64_t const n = g.size() - 1u;
  if ( g.family == gate_family::fredkin )
  {
    return 2u * n * n - 2u * n + 3u;
  }
  if ( n == 0u )
  {
    return 1u;
  }
  return 2u * n * n - 2u * n + 1u;
}

namespace
{

bool is_tof3( gate const& g )
{
  return g.family == gate_family::toffoli && g.controls.size() == 2u;
}

bool forms_peres( gate const& tof, gate const& cx )
{
  if ( !is_tof3( tof ) || !cx.is_cnot() )
  {
    return false;
  }
  auto const a = tof.controls[0];
  auto const b = tof.controls[1];
  auto const c = cx.controls[0];
  return ( c == a && cx.target == b ) || ( c == b && cx.target == a );
}

} // namespace

std::vector<std::pair<std::size_t, std::size_t>> detect_peres( circuit const& c )
{
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto const& gates = c.gates();
  for ( std::size_t i = 0; i + 1u < gates.size(); )
  {
    if ( forms_peres( gates[i], gates[i + 1u] ) || forms_peres( gates[i + 1u], gates[i] ) )
    {
      pairs.emplace_back( i, i + 1u );
      i += 2u;
    }
    else
    {
      ++i;
    }
  }
  return pairs;
}

std::uint64_t raw_quantum_cost( circuit const& c )
{
  std::uint64_t qc = 0u;
  for ( auto const& g : c.gates() )
  {
    qc += gate_cost( g );
  }
  return qc;
}

cost_report quantum_cost( circuit const& c )
{
  cost_report r;
  auto const pairs = detect_peres( c );
  std::vector<bool> paired( c.num_gates(), false );
  for ( auto [i, j] : pairs )
  {
    paired[i] = paired[j] = true;
  }
  for ( std::size_t i = 0; i < c.num_gates(); ++i )
  {
    if ( !paired[i] )
    {
      r.quantum_cost += gate_cost( c.gates()[i] );
    }
  }
  r.peres_pairs = pairs.size();
  r.quantum_cost += peres_cost * r.peres_pairs;
  r.nct_gate_count = c.num_gates();
  r.gate_count = c.num_gates() - r.peres_pairs;
  r.line_count = c.num_lines();
  for ( auto const& l : c.lines() )
  {
    if ( l.output )
    {
      continue;
    }
    if ( l.origin == line_origin::constant && l.restored )
    {
      ++r.ancilla_count;
    }
    else
    {
      ++r.garbage_count;
    }
  }
  return r;
}

} // namespace revsyn
