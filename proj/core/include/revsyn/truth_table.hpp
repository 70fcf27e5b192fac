#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace revsyn
{

/*! \brief One Boolean function stored as a packed column of 2^n bits.
 *
 * Bit `i` is the function value at input assignment `i`, where variable
 * `x_{k+1}` is bit `k` of `i`.
 */
class truth_column
{
public:
  truth_column() = default;
  explicit truth_column( unsigned num_vars );

  static truth_column projection( unsigned num_vars, unsigned var );
  static truth_column constant( unsigned num_vars, bool value );
  static truth_column from_words( unsigned num_vars, std::vector<std::uint64_t> words );

  unsigned num_vars() const { return num_vars_; }
  std::uint64_t num_bits() const { return std::uint64_t{ 1 } << num_vars_; }

  bool get( std::uint64_t index ) const { return ( words_[index >> 6u] >> ( index & 63u ) ) & 1u; }
  void set( std::uint64_t index, bool value );

  std::vector<std::uint64_t> const& words() const { return words_; }

  truth_column& operator^=( truth_column const& other );
  truth_column& operator&=( truth_column const& other );
  truth_column operator~() const;
  friend truth_column operator^( truth_column a, truth_column const& b ) { return a ^= b; }
  friend truth_column operator&( truth_column a, truth_column const& b ) { return a &= b; }

  std::uint64_t count_ones() const;
  bool is_const0() const;

  friend bool operator==( truth_column const&, truth_column const& ) = default;

private:
  void mask_tail();

  unsigned num_vars_ = 0u;
  std::vector<std::uint64_t> words_;
};

/*! \brief Bijection on {0, ..., 2^n - 1}. */
class permutation
{
public:
  permutation() = default;
  /*! \throws std::invalid_argument if `images` is not a bijection of a power-of-two size */
  explicit permutation( std::vector<std::uint64_t> images );

  static permutation identity( unsigned num_vars );

  std::vector<std::uint64_t> const& images() const { return images_; }
  std::size_t size() const { return images_.size(); }
  unsigned num_vars() const { return num_vars_; }
  std::uint64_t operator[]( std::uint64_t i ) const { return images_[i]; }

  friend bool operator==( permutation const&, permutation const& ) = default;

private:
  unsigned num_vars_ = 0u;
  std::vector<std::uint64_t> images_;
};

/*! \brief Multi-output Boolean function, one output bit-vector per input row.
 *
 * Output `j` of row `i` is bit `j` of `rows()[i]`, so at most 64 outputs are
 * supported.
 */
class truth_table
{
public:
  truth_table() = default;
  /*! \brief All-zero table with default labels `x1..xn`, `y1..ym`. */
  truth_table( unsigned num_inputs, unsigned num_outputs );
  truth_table( unsigned num_inputs, unsigned num_outputs, std::vector<std::uint64_t> rows );

  unsigned num_inputs() const { return num_inputs_; }
  unsigned num_outputs() const { return num_outputs_; }
  std::uint64_t num_rows() const { return std::uint64_t{ 1 } << num_inputs_; }

  std::vector<std::uint64_t> const& rows() const { return rows_; }
  std::uint64_t row( std::uint64_t input ) const { return rows_[input]; }
  bool get( std::uint64_t input, unsigned output ) const { return ( rows_[input] >> output ) & 1u; }
  void set( std::uint64_t input, unsigned output, bool value );

  std::vector<std::string> const& input_names() const { return input_names_; }
  std::vector<std::string> const& output_names() const { return output_names_; }
  void set_input_names( std::vector<std::string> names );
  void set_output_names( std::vector<std::string> names );

  truth_column column( unsigned output ) const;
  /*! \brief Single-output table holding output `output`. */
  truth_table output_table( unsigned output ) const;

  /*! \brief True iff inputs and outputs have equal width and rows form a bijection. */
  bool is_reversible() const;
  permutation to_permutation() const;

  friend bool operator==( truth_table const& a, truth_table const& b )
  {
    return a.num_inputs_ == b.num_inputs_ && a.num_outputs_ == b.num_outputs_ && a.rows_ == b.rows_;
  }

private:
  unsigned num_inputs_ = 0u;
  unsigned num_outputs_ = 0u;
  std::vector<std::uint64_t> rows_;
  std::vector<std::string> input_names_;
  std::vector<std::string> output_names_;
};

truth_table truth_table_from_columns( unsigned num_inputs, std::vector<truth_column> const& columns );

} // namespace revsyn
