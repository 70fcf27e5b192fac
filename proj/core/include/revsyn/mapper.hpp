#pragma once

#include <revsyn/circuit.hpp>
#include <revsyn/cost.hpp>
#include <revsyn/dag.hpp>
#include <revsyn/optimize.hpp>
#include <revsyn/simulation.hpp>
#include <revsyn/truth_table.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace revsyn
{

enum class target_rule
{
  xor_with_single_parent_leaf,
  and_with_xor_parent_single_leaf,
  max_child_min_parent
};

char const* to_string( target_rule rule );

struct target_choice
{
  node_id node = 0u;
  target_rule rule = target_rule::max_child_min_parent;
  /*! Leaf whose line becomes the target (rules 1 and 2). */
  std::optional<node_id> leaf;
};

/*! \brief Picks the next node to map, scanning nodes one level above the deepest leaves.
 *
 * Returns nothing once every output is a leaf.
 */
std::optional<target_choice> find_target( esop_dag const& dag );

/*! \brief Circuit under construction together with the function on every line. */
struct mapping_state
{
  circuit circ;
  std::vector<truth_column> functions;
  unsigned max_and_arity = 3u;

  /*! Starts with one primary-input line per variable. */
  static mapping_state for_inputs( std::vector<std::string> const& names, unsigned max_and_arity );
  line_id add_constant_line();
};

/*! \brief Emits the gates for `choice` and collapses the node into an identifier of its line. */
void map_target( esop_dag& dag, target_choice const& choice, mapping_state& state );

struct synthesis_options
{
  optimize_params params;
  verify_options verify;
  unsigned max_inputs = 16u;
};

struct synthesis_trace_entry
{
  target_rule rule;
  node_id node;
  std::size_t gates;
};

struct synthesis_result
{
  circuit circ;
  cost_report cost;
  std::vector<mutation_report> passes;
  std::vector<synthesis_trace_entry> trace;
  equivalence_result verification;
};

/*! \brief ANF, dag construction, optimization passes and mapping, then verification.
 *
 * \throws verification_error if the emitted circuit does not match `spec`
 */
synthesis_result synthesize( truth_table const& spec, synthesis_options const& options = {} );
synthesis_result synthesize( permutation const& spec, synthesis_options const& options = {} );

/*! \brief Assigns spec outputs to lines of minimum total QC.
 *
 * A line can carry one output.  An output whose function is on no free line
 * is copied onto a fresh constant line, a complemented function costs a NOT.
 * Exhaustive for up to 8 outputs, greedy above.
 */
circuit order_outputs( circuit c, truth_table const& spec );

/*! \brief Puts output `o` on line `o`, swapping line contents with CNOT triples.
 *
 * \throws std::invalid_argument if some output function is carried by no line
 */
circuit place_outputs_positionally( circuit c, truth_table const& spec );

} // namespace revsyn
