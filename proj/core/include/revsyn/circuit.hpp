#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace revsyn
{

using line_id = std::uint32_t;

enum class gate_family
{
  toffoli,
  fredkin
};

/*! \brief Multiple-controlled Toffoli or Fredkin gate.
 *
 * A Toffoli with 0 controls is a NOT, with 1 control a CNOT.  A Fredkin swaps
 * its two targets when all controls are 1.
 */
struct gate
{
  gate_family family = gate_family::toffoli;
  std::vector<line_id> controls;
  line_id target = 0u;
  std::optional<line_id> second_target;

  static gate not_gate( line_id target );
  static gate cnot( line_id control, line_id target );
  static gate toffoli( std::vector<line_id> controls, line_id target );
  static gate fredkin( std::vector<line_id> controls, line_id target1, line_id target2 );

  /*! \brief Number of lines the gate acts on (the `k` of Tof_k / Fred_k). */
  unsigned size() const;
  bool is_not() const { return family == gate_family::toffoli && controls.empty(); }
  bool is_cnot() const { return family == gate_family::toffoli && controls.size() == 1u; }
  bool acts_on( line_id line ) const;
  /*! \brief Target not among controls, controls distinct, Fredkin targets distinct. */
  bool is_legal() const;

  friend bool operator==( gate const&, gate const& ) = default;
};

enum class line_origin
{
  primary_input,
  constant
};

struct line_info
{
  std::string name;
  line_origin origin = line_origin::primary_input;
  bool initial_value = false;
  /*! Index into the specification's outputs, if the line carries one. */
  std::optional<unsigned> output;
  std::string output_name;
  /*! Constant line known to return to its initial value (an ancilla). */
  bool restored = false;
};

/*! \brief Ordered gate list over classified lines. */
class circuit
{
public:
  circuit() = default;

  line_id add_input( std::string name );
  line_id add_constant( std::string name, bool value = false );

  void add_gate( gate g );
  void append( circuit const& other );

  std::uint32_t num_lines() const { return static_cast<std::uint32_t>( lines_.size() ); }
  std::vector<gate> const& gates() const { return gates_; }
  std::vector<gate>& gates() { return gates_; }
  std::size_t num_gates() const { return gates_.size(); }

  std::vector<line_info> const& lines() const { return lines_; }
  line_info const& line( line_id id ) const { return lines_.at( id ); }
  line_info& line( line_id id ) { return lines_.at( id ); }

  std::uint32_t num_inputs() const;
  std::uint32_t num_constants() const;
  /*! \brief Line carrying spec output `output`, if assigned. */
  std::optional<line_id> output_line( unsigned output ) const;
  std::uint32_t num_outputs() const;
  void assign_output( line_id line, unsigned output, std::string name );
  void clear_outputs();

  /*! \brief Same circuit with the gate list reversed (its inverse). */
  circuit reversed() const;

  friend bool operator==( circuit const& a, circuit const& b );

private:
  std::vector<line_info> lines_;
  std::vector<gate> gates_;
};

} // namespace revsyn
