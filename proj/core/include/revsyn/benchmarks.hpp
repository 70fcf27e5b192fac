#pragma once

#include <revsyn/truth_table.hpp>

#include <optional>
#include <string>
#include <vector>

namespace revsyn
{

struct benchmark_info
{
  std::string name;
  unsigned inputs;
  unsigned outputs;
  /*! False when the table is a stand-in with the published interface but not the original function. */
  bool faithful;
  std::string description;
};

/*! \brief All registered benchmark functions, sorted by name. */
std::vector<benchmark_info> const& benchmark_catalog();

std::optional<benchmark_info> find_benchmark( std::string const& name );

/*! \throws std::invalid_argument for unknown names */
truth_table benchmark_table( std::string const& name );

/*! \brief Permutations with the i-th prime at position i, remaining values ascending. */
permutation nth_prime_inc( unsigned n );
/*! \brief Hidden weighted bit: x rotated left by its number of ones. */
permutation hidden_weighted_bit( unsigned n );
permutation present_sbox();
permutation aes_sbox();

} // namespace revsyn
