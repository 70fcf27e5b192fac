#pragma once

#include <revsyn/circuit.hpp>
#include <revsyn/truth_table.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace revsyn
{

/*! \brief Applies the gates of `c` in order to one line assignment.
 *
 * \throws std::invalid_argument if `input.size() != c.num_lines()`
 */
std::vector<bool> simulate( circuit const& c, std::vector<bool> input );

/*! \brief Bit-parallel simulation over all 2^n assignments of the primary inputs.
 *
 * The k-th primary-input line receives the projection on variable k and
 * constant lines their initial value.  Returns the final column of every line.
 */
std::vector<truth_column> simulate_columns( circuit const& c );

/*! \brief Thrown when a synthesized circuit does not realize its specification. */
class verification_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

enum class verify_mode
{
  exhaustive,
  sample,
  off
};

struct verify_options
{
  verify_mode mode = verify_mode::exhaustive;
  std::uint64_t samples = 1u << 14u;
  std::uint64_t seed = 1u;
};

struct equivalence_result
{
  bool equivalent = false;
  std::optional<std::uint64_t> counterexample;
  std::optional<unsigned> mismatched_output;
  std::string message;
  /*! Constant lines that end in their initial value on every checked input. */
  std::vector<line_id> restored_constants;
  std::vector<line_id> unrestored_constants;
};

/*! \brief Compares the declared output lines of `c` against `spec`.
 *
 * Exhaustive mode requires at most 20 inputs; sample mode draws random
 * assignments from a seeded generator.
 */
equivalence_result verify_equivalence( circuit const& c, truth_table const& spec, verify_options const& options = {} );

/*! \brief Sets `restored` on the constant lines found restored by exhaustive simulation. */
void mark_restored_constants( circuit& c );

} // namespace revsyn
