#pragma once

#include <revsyn/circuit.hpp>
#include <revsyn/cost.hpp>
#include <revsyn/optimize.hpp>
#include <revsyn/truth_table.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace revsyn
{

class parse_error : public std::runtime_error
{
public:
  parse_error( std::size_t line, std::string const& message );
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

enum class spec_format
{
  automatic,
  pla,
  permutation,
  cube_list
};

/*! \brief Accepts `auto`, `pla`, `perm` and `cubes`. */
spec_format parse_spec_format( std::string const& name );

struct parsed_spec
{
  truth_table table;
  /*! Set when the input was a permutation line. */
  std::optional<permutation> perm;
  /*! Non-fatal remarks, e.g. output don't-cares resolved to 0. */
  std::vector<std::string> warnings;
};

/*! \brief Reads a specification.
 *
 * PLA rows list x1 first and y1 first.  Input `-` is expanded, output `-`
 * becomes 0, rows that are never listed are 0.
 */
parsed_spec parse_spec( std::istream& in, spec_format format = spec_format::automatic );
parsed_spec parse_spec_string( std::string const& text, spec_format format = spec_format::automatic );
parsed_spec parse_spec_file( std::filesystem::path const& path, spec_format format = spec_format::automatic );

/*! \brief PLA text of a truth table, one row per input assignment. */
std::string write_pla( truth_table const& table );

/*! \brief TFC-style text; `cost` is emitted as `#` comments. */
void write_circuit( std::ostream& out, circuit const& c, std::optional<cost_report> const& cost = std::nullopt );
std::string circuit_to_string( circuit const& c, std::optional<cost_report> const& cost = std::nullopt );
void write_circuit_file( std::filesystem::path const& path, circuit const& c,
                         std::optional<cost_report> const& cost = std::nullopt );

circuit read_circuit( std::istream& in );
circuit read_circuit_string( std::string const& text );
circuit read_circuit_file( std::filesystem::path const& path );

/*! \brief One line of a run report. */
struct report_row
{
  std::string spec;
  std::string mode;
  optimize_params params;
  cost_report cost;
  bool include_runtime = false;
};

std::string report_header();
std::string report_line( report_row const& row );

} // namespace revsyn
