#pragma once

#include <revsyn/circuit.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace revsyn
{

/*! \brief Quantum cost of a single gate.
 *
 * NOT and CNOT cost 1.  Tof_{n+1} costs 2n^2 - 2n + 1 and Fred_{n+1} costs
 * 2n^2 - 2n + 3, where n is the number of lines minus one.
 */
std::uint64_t gate_cost( gate const& g );

/*! \brief Quantum cost of a 3-line Peres gate. */
inline constexpr std::uint64_t peres_cost = 4u;

/*! \brief Greedy left-to-right pairing of adjacent Tof_3 / CNOT gates.
 *
 * A pair is Tof_3(A, B; C) next to CNOT(A; B) or CNOT(B; A), in either order.
 * Returns pairs of gate indices, each gate used at most once.
 */
std::vector<std::pair<std::size_t, std::size_t>> detect_peres( circuit const& c );

struct cost_report
{
  std::uint64_t quantum_cost = 0u;
  /*! Gates with every Peres pair counted as a single gate. */
  std::uint64_t gate_count = 0u;
  /*! Plain NCT gate count; a Peres pair counts as two gates. */
  std::uint64_t nct_gate_count = 0u;
  std::uint64_t line_count = 0u;
  std::uint64_t garbage_count = 0u;
  std::uint64_t ancilla_count = 0u;
  std::uint64_t peres_pairs = 0u;
  double runtime = 0.0;
};

/*! \brief Costs a circuit; line classes come from the circuit's line metadata.
 *
 * Ancillae are constant lines marked `restored` without an output; every
 * other line that carries no output is garbage.
 */
cost_report quantum_cost( circuit const& c );

/*! \brief Quantum cost without Peres pairing. */
std::uint64_t raw_quantum_cost( circuit const& c );

} // namespace revsyn
