#pragma once

#include <revsyn/esop.hpp>
#include <revsyn/truth_table.hpp>

#include <span>
#include <vector>

namespace revsyn
{

/*! \brief In-place binary Moebius (Reed-Muller) butterfly.
 *
 * Maps a value vector of length 2^n to its ANF coefficient vector and back;
 * the transform is its own inverse over GF(2).  O(n 2^n).
 */
void anf_transform( std::span<std::uint8_t> values );

/*! \brief Word-parallel variant of `anf_transform` on a packed column. */
truth_column anf_transform( truth_column const& values );

esop_expression anf_from_column( truth_column const& column );
truth_column column_from_anf( esop_expression const& expr );

/*! \brief ANF of a single-output table.
 *
 * \throws std::invalid_argument for multi-output tables
 */
esop_expression anf_from_truth_table( truth_table const& tt );

/*! \brief One ANF per output column. */
std::vector<esop_expression> anf_per_output( truth_table const& tt );

truth_table truth_table_from_anf( esop_expression const& expr );
truth_table truth_table_from_anf( std::vector<esop_expression> const& exprs );

truth_table truth_table_from_permutation( permutation const& p );

} // namespace revsyn
