#pragma once

#include <revsyn/esop.hpp>
#include <revsyn/truth_table.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace revsyn
{

using node_id = std::uint32_t;

enum class node_kind
{
  constant,
  identifier,
  root,
  and_node,
  xor_node
};

char const* to_string( node_kind kind );

struct dag_node
{
  node_id id = 0u;
  node_kind kind = node_kind::constant;
  /*! Sorted by id for and/xor nodes. */
  std::vector<node_id> children;
  std::vector<node_id> parents;
  /*! Longest distance from the root. */
  mutable std::uint32_t depth = 0u;
  /*! Variable (or line) index of an identifier, 0/1 for a constant. */
  std::uint32_t value = 0u;
  bool alive = true;

  bool is_leaf() const { return kind == node_kind::constant || kind == node_kind::identifier; }
  bool is_gate() const { return kind == node_kind::and_node || kind == node_kind::xor_node; }
};

struct output_binding
{
  std::string name;
  node_id node = 0u;
};

/*! \brief n-ary and/xor DAG over identifier and constant leaves.
 *
 * A single root collects the per-output top nodes.  And/xor nodes are
 * hash-consed on (kind, sorted children) and kept normalized: xor children
 * cancel in pairs, and-children are idempotent, constants are folded, and a
 * node left with one child is replaced by that child.
 */
class esop_dag
{
public:
  explicit esop_dag( unsigned num_vars = 0u );

  unsigned num_vars() const { return num_vars_; }
  node_id root() const { return root_; }

  node_id constant( bool value );
  /*! \brief The unique identifier node of `var`, created on demand. */
  node_id identifier( std::uint32_t var );
  std::optional<node_id> find_identifier( std::uint32_t var ) const;

  /*! \brief Returns a normalized node computing `kind` over `children`.
   *
   * May return an existing node, a child, or a constant.
   */
  node_id make( node_kind kind, std::vector<node_id> children );

  /*! \brief Looks up the normalized node without creating it. */
  std::optional<node_id> find( node_kind kind, std::vector<node_id> children );

  void add_output( std::string name, node_id node );
  std::vector<output_binding> const& outputs() const { return outputs_; }

  dag_node const& node( node_id id ) const { return nodes_.at( id ); }
  std::size_t capacity() const { return nodes_.size(); }
  std::vector<node_id> alive_nodes() const;
  std::size_t node_count() const;
  std::size_t gate_node_count() const;

  /*! \brief Replaces the children of an and/xor node, renormalizing.
   *
   * If the node collapses or becomes structurally equal to another node, its
   * uses are redirected and the id returned is the surviving node.
   */
  node_id set_children( node_id id, std::vector<node_id> children );

  /*! \brief Reroutes every use of `from` (including outputs) to `to`. */
  void redirect( node_id from, node_id to );

  /*! \brief Turns a gate node into an identifier leaf for `var`, dropping its children.
   *
   * An existing identifier for `var` is retired if nothing references it any more.
   */
  void convert_to_identifier( node_id id, std::uint32_t var );

  /*! \brief Removes nodes that the root cannot reach. */
  void collect_garbage();

  std::uint32_t max_depth() const;
  std::vector<node_id> nodes_at_depth( std::uint32_t depth ) const;
  std::uint32_t depth( node_id id ) const;
  void recompute_depths() const;
  /*! \brief Reachable nodes, every parent before its children. */
  std::vector<node_id> topological_order() const;

  /*! \brief Direct access for constructing corrupted graphs in tests. */
  dag_node& unsafe_node( node_id id ) { return nodes_.at( id ); }

private:
  node_id create( node_kind kind, std::vector<node_id> children, std::uint32_t value = 0u );
  std::optional<std::vector<node_id>> normalize( node_kind kind, std::vector<node_id> children, node_id& single );
  void attach( node_id parent, node_id child );
  void detach( node_id parent, node_id child );
  void release( node_id id );
  void rebuild_root();
  void unregister( node_id id );

  unsigned num_vars_;
  node_id root_ = 0u;
  std::vector<dag_node> nodes_;
  std::vector<output_binding> outputs_;
  std::map<std::pair<node_kind, std::vector<node_id>>, node_id> structure_;
  std::map<std::uint32_t, node_id> identifiers_;
  std::optional<node_id> constants_[2];
  std::vector<node_id> pins_;
  mutable bool depths_dirty_ = true;
};

/*! \brief Builds the and/xor DAG for per-output ANF expressions.
 *
 * Cubes of degree above `max_and_arity - 1` are split into nested and-nodes
 * so that every Toffoli derived from them has at most `max_and_arity` lines.
 *
 * \throws std::invalid_argument if `max_and_arity < 2` or `exprs` is empty
 */
esop_dag build_dag( std::vector<esop_expression> const& exprs, unsigned max_and_arity,
                    std::vector<std::string> const& output_names = {} );

/*! \brief Node for one cube, split according to the arity bound. */
node_id make_cube_node( esop_dag& dag, cube c, unsigned max_and_arity );

/*! \brief And-node over `children` with at most `max_and_arity - 1` children per node.
 *
 * Leading children stay at the outer node and the tail is nested.
 */
node_id make_and_bounded( esop_dag& dag, std::vector<node_id> children, unsigned max_and_arity );

/*! \brief Flattens every output back to ANF over GF(2). */
std::vector<esop_expression> dag_to_expressions( esop_dag const& dag );
esop_expression node_expression( esop_dag const& dag, node_id id );

/*! \brief Evaluates outputs with identifier `v` bound to `leaves[v]`. */
std::vector<truth_column> evaluate_columns( esop_dag const& dag, std::span<truth_column const> leaves );

/*! \brief Checks structural invariants; an empty result means valid. */
std::vector<std::string> validate_dag( esop_dag const& dag );

std::string to_text( esop_dag const& dag );
std::string to_dot( esop_dag const& dag );

} // namespace revsyn
