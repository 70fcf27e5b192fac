#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace revsyn
{

/*! \brief Positive-polarity product term.
 *
 * Bit `i` of the mask selects variable `x_{i+1}`.  The empty mask is the
 * constant-1 cube.
 */
class cube
{
public:
  constexpr cube() = default;
  constexpr explicit cube( std::uint32_t mask ) : mask_( mask ) {}

  static cube one() { return cube{}; }
  static cube literal( unsigned var ) { return cube{ 1u << var }; }

  constexpr std::uint32_t mask() const { return mask_; }
  unsigned degree() const { return static_cast<unsigned>( std::popcount( mask_ ) ); }
  bool is_one() const { return mask_ == 0u; }
  bool has( unsigned var ) const { return ( mask_ >> var ) & 1u; }

  /*! \brief True iff every literal of `other` appears in this cube. */
  bool contains( cube other ) const { return ( mask_ & other.mask_ ) == other.mask_; }

  cube operator*( cube other ) const { return cube{ mask_ | other.mask_ }; }
  cube without( cube other ) const { return cube{ mask_ & ~other.mask_ }; }

  bool evaluate( std::uint64_t assignment ) const { return ( assignment & mask_ ) == mask_; }

  std::vector<unsigned> variables() const;

  friend constexpr bool operator==( cube, cube ) = default;
  friend constexpr auto operator<=>( cube a, cube b ) { return a.mask_ <=> b.mask_; }

private:
  std::uint32_t mask_ = 0u;
};

/*! \brief XOR of distinct positive-polarity cubes (ANF / PPRM form).
 *
 * Cubes are kept sorted by mask; inserting a cube that is already present
 * removes it, which is addition over GF(2).
 */
class esop_expression
{
public:
  esop_expression() = default;
  explicit esop_expression( unsigned num_vars ) : num_vars_( num_vars ) {}
  esop_expression( unsigned num_vars, std::initializer_list<cube> cubes );
  esop_expression( unsigned num_vars, std::vector<cube> cubes );

  static esop_expression constant( unsigned num_vars, bool value );
  static esop_expression variable( unsigned num_vars, unsigned var );

  unsigned num_vars() const { return num_vars_; }
  std::vector<cube> const& cubes() const { return cubes_; }
  std::size_t size() const { return cubes_.size(); }
  bool empty() const { return cubes_.empty(); }
  bool contains( cube c ) const;

  /*! \brief Adds `c` over GF(2): toggles its presence. */
  void toggle( cube c );

  unsigned degree() const;
  unsigned literal_count() const;
  /*! \brief Number of cubes of degree at least two. */
  unsigned nonlinear_count() const;
  /*! \brief Variables occurring in at least one cube. */
  std::uint32_t support() const;

  bool evaluate( std::uint64_t assignment ) const;

  esop_expression& operator^=( esop_expression const& other );
  friend esop_expression operator^( esop_expression a, esop_expression const& b ) { return a ^= b; }
  friend esop_expression operator*( esop_expression const& a, esop_expression const& b );
  friend esop_expression operator*( esop_expression const& a, cube c );

  /*! \brief Replaces `var` by `var ^ replacement` everywhere. */
  esop_expression substitute( unsigned var, esop_expression const& replacement ) const;

  friend bool operator==( esop_expression const& a, esop_expression const& b )
  {
    return a.cubes_ == b.cubes_;
  }

private:
  unsigned num_vars_ = 0u;
  std::vector<cube> cubes_;
};

/*! \brief Renders a cube as `x1x3`, or `1` for the constant cube. */
std::string to_string( cube c );
/*! \brief Renders `1 ^ x1 ^ x1x2`; the empty expression is `0`. */
std::string to_string( esop_expression const& expr );

} // namespace revsyn
