#pragma once

#include <revsyn/dag.hpp>
#include <revsyn/esop.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace revsyn
{

/*! \brief The four synthesis knobs plus pass limits. */
struct optimize_params
{
  /*! T: largest Toffoli gate (in lines) the mapper may emit. */
  unsigned max_and_arity = 4u;
  /*! C */
  bool cube_sharing = true;
  /*! K: kernels need more than K cubes to be used; 0 disables extraction. */
  unsigned kernel_threshold = 2u;
  /*! P */
  bool parent_reduction = false;
  /*! Also rewrite through xor nodes with more than two children. */
  bool generalized_expansion = false;
  unsigned max_sweeps = 32u;
  std::size_t max_kernels = 4096u;
};

struct kernel_entry
{
  esop_expression kernel;
  cube co_kernel;
  /*! Weak-division quotient of the dividend by `kernel`; always contains `co_kernel`. */
  esop_expression quotient;
  /*! dividend = quotient * kernel ^ remainder */
  esop_expression remainder;
};

using kernel_set = std::vector<kernel_entry>;

/*! \brief Enumerates the non-trivial kernels of an XOR sum of cubes.
 *
 * Recursive extraction dividing by every variable that occurs in at least two
 * cubes.  The expression itself is only reported when it has a common cube.
 */
kernel_set extract_kernels( esop_expression const& expr, std::size_t limit = 4096u );

/*! \brief Weak (algebraic) division of `dividend` by `divisor`.
 *
 * Returns the largest quotient with support disjoint from the divisor such
 * that every product cube occurs in the dividend.
 */
std::pair<esop_expression, esop_expression> weak_divide( esop_expression const& dividend, esop_expression const& divisor );

/*! \brief Kernel with more than `threshold` cubes and the smallest remainder.
 *
 * Ties prefer the larger kernel, then the smaller co-kernel mask.
 */
std::optional<kernel_entry> select_divisor( kernel_set const& kernels, unsigned threshold );

struct factored_form
{
  enum class kind
  {
    zero,
    term,
    product,
    sum
  };

  kind type = kind::zero;
  cube term;
  std::vector<factored_form> operands;

  static factored_form flat( esop_expression const& expr );
  esop_expression expand( unsigned num_vars ) const;
  /*! True for the plain two-level form (no product of sub-expressions). */
  bool is_flat() const;
};

/*! \brief Recursively factors `expr` with the kernel selected at each level. */
factored_form factor_expression( esop_expression const& expr, optimize_params const& params );

/*! \brief Builds the dag node for a factored form. */
node_id add_factored_form( esop_dag& dag, factored_form const& form, unsigned max_and_arity );

struct mutation_report
{
  std::string pass;
  std::size_t applications = 0u;
  std::size_t nodes_touched = 0u;
  long node_delta = 0;
};

/*! \brief Replaces each output's two-level form by its kernel factorization. */
mutation_report kernel_extraction( esop_dag& dag, optimize_params const& params );

/*! \brief Shares common children between same-kind nodes, deepest levels first. */
mutation_report common_cube_sharing( esop_dag& dag, unsigned max_sweeps = 32u );

/*! \brief Shareability of two same-kind gate nodes. */
bool shareable( esop_dag const& dag, node_id a, node_id b );

/*! \brief Reachable identifier with the fewest (at least two) parents that has
 * a two-child xor parent usable for parent reduction.
 */
std::optional<node_id> parent_reduction_candidate( esop_dag const& dag, bool generalized = false );

/*! \brief Moves uses of `leaf` behind an existing xor(leaf, b) node.
 *
 * Xor parents use leaf = (leaf ^ b) ^ b, and-parents containing b use
 * leaf.b = ((leaf ^ b).b) ^ b.  Reports no-op when no such xor node exists.
 */
mutation_report reduce_parents( esop_dag& dag, node_id leaf, bool generalized = false );

} // namespace revsyn
