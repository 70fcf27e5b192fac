#pragma once

#include <revsyn/circuit.hpp>
#include <revsyn/cost.hpp>
#include <revsyn/esop.hpp>
#include <revsyn/truth_table.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace revsyn
{

enum class transformation_kind
{
  t1,
  t2,
  t3,
  t4
};

/*! \brief Substitution target <- target ^ (product of controls); T1 has no control. */
struct transformation
{
  transformation_kind kind = transformation_kind::t2;
  std::vector<unsigned> controls;
  unsigned target = 0u;

  static transformation make( std::vector<unsigned> controls, unsigned target );
  gate to_gate() const;

  friend bool operator==( transformation const&, transformation const& ) = default;
};

std::string to_string( transformation const& t );

/*! \brief How check_t2 reads the rule for a pair of non-linear cubes. */
enum class t2_policy
{
  /*! Control and target are the variables owned by one cube each (ac ^ bc: b -> a). */
  unique_control,
  /*! Control is the shared variable, target a variable owned by one cube. */
  common_control
};

struct expression_state
{
  std::vector<esop_expression> exprs;
  std::vector<transformation> history;

  static expression_state from_permutation( permutation const& spec );

  unsigned num_vars() const;
  unsigned nonlinear_count() const;
  /*! Cubes of degree at least `degree`, summed over all expressions. */
  unsigned count_degree_at_least( unsigned degree ) const;
  unsigned literal_count() const;
  bool is_linear() const;
  /*! Every expression is a single literal and no two are equal. */
  bool is_basic() const;
};

/*! \brief Substitutes `t` into every expression and records it. */
expression_state apply_substitution( expression_state state, transformation const& t );

/*! \brief Same as above without touching the history. */
std::vector<esop_expression> substitute_all( std::vector<esop_expression> const& exprs, transformation const& t );

/*! \brief First pair-derived CNOT substitution that lowers the non-linear cube count. */
std::optional<transformation> check_t2( expression_state const& state, t2_policy policy = t2_policy::unique_control );

/*! \brief Toffoli substitution with the lowest resulting (non-linear, literal) counts.
 *
 * Only strict decreases of the non-linear count qualify.
 */
std::optional<transformation> find_t3( expression_state const& state );

/*! \brief Minimum-increase Toffoli substitution, used when nothing decreases. */
std::optional<transformation> escalate_t3( expression_state const& state );

/*! \brief Tof_4 substitution that lowers the number of degree-3 cubes. */
std::optional<transformation> find_t4( expression_state const& state );

/*! \brief CNOT step of the linear phase that lowers the literal count. */
std::optional<transformation> linear_t2( expression_state const& state );

struct ancilla_free_options
{
  t2_policy policy = t2_policy::unique_control;
  unsigned max_escalations = 2u;
  /*! 0 selects 10 * 4^n. */
  std::size_t iteration_cap = 0u;
  /*! Checks the substitution invariant against the spec after every step. */
  bool check_steps = false;
};

struct ancilla_free_result
{
  bool converged = false;
  std::string message;
  circuit circ;
  cost_report cost;
  std::vector<transformation> transformations;
  std::size_t iterations = 0u;
  std::size_t escalations = 0u;
  /*! CNOT triples appended to put output `o` on line `o`. */
  std::size_t swaps = 0u;
};

/*! \brief Rule-based synthesis on exactly n lines for n <= 4.
 *
 * \throws std::invalid_argument for n > 4
 * \throws verification_error if a converged circuit fails verification
 */
ancilla_free_result ancilla_free_synthesize( permutation const& spec, ancilla_free_options const& options = {} );

} // namespace revsyn
