#pragma once

#include <revsyn/ancilla_free.hpp>
#include <revsyn/cost.hpp>
#include <revsyn/mapper.hpp>
#include <revsyn/optimize.hpp>
#include <revsyn/truth_table.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace revsyn
{

/*! \brief Cartesian grid over the four knobs. */
struct sweep_grid
{
  std::vector<unsigned> toffoli_sizes{ 3u, 4u };
  std::vector<bool> cube_sharing{ false, true };
  std::vector<unsigned> kernel_thresholds{ 0u, 1u, 2u, 3u, 4u, 5u, 6u, 7u };
  std::vector<bool> parent_reduction{ false, true };

  /*! \brief Parses `T=3,4 C=0,1 K=0..7 P=0,1`; omitted knobs keep their defaults. */
  static sweep_grid parse( std::string const& text );

  /*! Sorted by (T, C, K, P). */
  std::vector<optimize_params> configurations( optimize_params const& base = {} ) const;
};

struct sweep_options
{
  unsigned threads = 0u;
  verify_options verify;
  bool timing = false;
};

struct sweep_row
{
  optimize_params params;
  cost_report cost;
  bool ok = false;
  std::string error;
};

/*! \brief Synthesizes `spec` for every configuration; rows come back in configuration order. */
std::vector<sweep_row> run_sweep( truth_table const& spec, std::vector<optimize_params> const& configs,
                                  sweep_options const& options = {} );

/*! \brief Indices of successful rows whose (QC, garbage) pair no other row dominates.
 *
 * Equal pairs are reported once, by their first row.
 */
std::vector<std::size_t> pareto_front( std::vector<sweep_row> const& rows );

/*! \brief Runs `fn(i)` for i in [0, count) on a pool of threads. */
void parallel_for( std::size_t count, unsigned threads, std::function<void( std::size_t )> const& fn );

/*! \brief All permutations of {0..2^n - 1} in lexicographic order. */
std::vector<permutation> all_permutations( unsigned n );

struct exhaustive_row
{
  std::size_t index = 0u;
  bool ok = false;
  std::uint64_t gates = 0u;
  std::uint64_t quantum_cost = 0u;
  std::uint64_t garbage = 0u;
  std::uint64_t ancilla = 0u;
  std::uint64_t lines = 0u;
  std::string error;
};

struct exhaustive_summary
{
  std::size_t functions = 0u;
  std::size_t succeeded = 0u;
  double mean_gates = 0.0;
  double mean_quantum_cost = 0.0;
  double mean_garbage = 0.0;
  std::uint64_t max_ancilla = 0u;
  std::vector<exhaustive_row> rows;
};

exhaustive_summary exhaustive_synthesis( unsigned n, synthesis_options const& options, unsigned threads = 0u );
exhaustive_summary exhaustive_ancilla_free( unsigned n, ancilla_free_options const& options, unsigned threads = 0u );

std::string exhaustive_csv_header();
std::string exhaustive_csv_line( exhaustive_row const& row, permutation const& p );

} // namespace revsyn
