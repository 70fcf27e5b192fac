#include <revsyn/truth_table.hpp>

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace revsyn
{

namespace
{

constexpr unsigned max_table_vars = 30u;

std::vector<std::string> default_names( char prefix, unsigned count )
{
  std::vector<std::string> names;
  names.reserve( count );
  for ( auto i = 0u; i < count; ++i )
  {
    names.push_back( std::string( 1, prefix ) + std::to_string( i + 1u ) );
  }
  return names;
}

void check_labels( std::vector<std::string> const& names, unsigned expected, char const* what )
{
  if ( names.size() != expected )
  {
    throw std::invalid_argument( std::string( what ) + " label count does not match declared width" );
  }
  std::set<std::string> unique( names.begin(), names.end() );
  if ( unique.size() != names.size() )
  {
    throw std::invalid_argument( std::string( "duplicate " ) + what + " label" );
  }
}

} // namespace

truth_column::truth_column( unsigned num_vars )
    : num_vars_( num_vars ), words_( num_vars >= 6u ? ( std::size_t{ 1 } << ( num_vars - 6u ) ) : 1u, 0u )
{
  if ( num_vars > max_table_vars )
  {
    throw std::invalid_argument( "truth column too large" );
  }
}

truth_column truth_column::projection( unsigned num_vars, unsigned var )
{
  truth_column col( num_vars );
  if ( var < 6u )
  {
    static constexpr std::uint64_t patterns[] = { 0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
                                                  0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };
    std::fill( col.words_.begin(), col.words_.end(), patterns[var] );
  }
  else
  {
    auto const stride = std::size_t{ 1 } << ( var - 6u );
    for ( std::size_t w = 0; w < col.words_.size(); ++w )
    {
      col.words_[w] = ( w & stride ) ? ~std::uint64_t{ 0 } : 0u;
    }
  }
  col.mask_tail();
  return col;
}

truth_column truth_column::constant( unsigned num_vars, bool value )
{
  truth_column col( num_vars );
  if ( value )
  {
    std::fill( col.words_.begin(), col.words_.end(), ~std::uint64_t{ 0 } );
    col.mask_tail();
  }
  return col;
}

truth_column truth_column::from_words( unsigned num_vars, std::vector<std::uint64_t> words )
{
  truth_column col( num_vars );
  if ( words.size() != col.words_.size() )
  {
    throw std::invalid_argument( "word count does not match column size" );
  }
  col.words_ = std::move( words );
  col.mask_tail();
  return col;
}

void truth_column::set( std::uint64_t index, bool value )
{
  auto& w = words_[index >> 6u];
  auto const bit = std::uint64_t{ 1 } << ( index & 63u );
  w = value ? ( w | bit ) : ( w & ~bit );
}

truth_column& truth_column::operator^=( truth_column const& other )
{
  for ( std::size_t i = 0; i < words_.size(); ++i )
  {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

truth_column& truth_column::operator&=( truth_column const& other )
{
  for ( std::size_t i = 0; i < words_.size(); ++i )
  {
    words_[i] &= other.words_[i];
  }
  return *this;
}

truth_column truth_column::operator~() const
{
  auto copy = *this;
  for ( auto& w : copy.words_ )
  {
    w = ~w;
  }
  copy.mask_tail();
  return copy;
}

std::uint64_t truth_column::count_ones() const
{
  std::uint64_t n = 0u;
  for ( auto w : words_ )
  {
    n += static_cast<std::uint64_t>( std::popcount( w ) );
  }
  return n;
}

bool truth_column::is_const0() const
{
  return std::all_of( words_.begin(), words_.end(), []( auto w ) { return w == 0u; } );
}

void truth_column::mask_tail()
{
  if ( num_vars_ < 6u )
  {
    words_[0] &= ( std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << num_vars_ ) ) - 1u;
  }
}

permutation::permutation( std::vector<std::uint64_t> images ) : images_( std::move( images ) )
{
  if ( images_.empty() || !std::has_single_bit( images_.size() ) )
  {
    throw std::invalid_argument( "permutation size must be a power of two" );
  }
  num_vars_ = static_cast<unsigned>( std::countr_zero( images_.size() ) );
  std::vector<bool> seen( images_.size(), false );
  for ( auto v : images_ )
  {
    if ( v >= images_.size() || seen[v] )
    {
      throw std::invalid_argument( "permutation is not a bijection" );
    }
    seen[v] = true;
  }
}

permutation permutation::identity( unsigned num_vars )
{
  std::vector<std::uint64_t> images( std::size_t{ 1 } << num_vars );
  for ( std::size_t i = 0; i < images.size(); ++i )
  {
    images[i] = i;
  }
  return permutation( std::move( images ) );
}

truth_table::truth_table( unsigned num_inputs, unsigned num_outputs )
    : truth_table( num_inputs, num_outputs, std::vector<std::uint64_t>( std::size_t{ 1 } << num_inputs, 0u ) )
{
}

truth_table::truth_table( unsigned num_inputs, unsigned num_outputs, std::vector<std::uint64_t> rows )
    : num_inputs_( num_inputs ), num_outputs_( num_outputs ), rows_( std::move( rows ) ),
      input_names_( default_names( 'x', num_inputs ) ), output_names_( default_names( 'y', num_outputs ) )
{
  if ( num_inputs > max_table_vars )
  {
    throw std::invalid_argument( "too many inputs" );
  }
  if ( num_outputs == 0u || num_outputs > 64u )
  {
    throw std::invalid_argument( "output count must be in 1..64" );
  }
  if ( rows_.size() != ( std::size_t{ 1 } << num_inputs ) )
  {
    throw std::invalid_argument( "truth table must have exactly 2^n rows" );
  }
  if ( num_outputs < 64u )
  {
    for ( auto r : rows_ )
    {
      if ( r >> num_outputs )
      {
        throw std::invalid_argument( "row wider than declared output count" );
      }
    }
  }
}

void truth_table::set( std::uint64_t input, unsigned output, bool value )
{
  auto const bit = std::uint64_t{ 1 } << output;
  rows_[input] = value ? ( rows_[input] | bit ) : ( rows_[input] & ~bit );
}

void truth_table::set_input_names( std::vector<std::string> names )
{
  check_labels( names, num_inputs_, "input" );
  input_names_ = std::move( names );
}

void truth_table::set_output_names( std::vector<std::string> names )
{
  check_labels( names, num_outputs_, "output" );
  output_names_ = std::move( names );
}

truth_column truth_table::column( unsigned output ) const
{
  truth_column col( num_inputs_ );
  for ( std::uint64_t i = 0; i < rows_.size(); ++i )
  {
    if ( ( rows_[i] >> output ) & 1u )
    {
      col.set( i, true );
    }
  }
  return col;
}

truth_table truth_table::output_table( unsigned output ) const
{
  std::vector<std::uint64_t> rows( rows_.size() );
  for ( std::size_t i = 0; i < rows_.size(); ++i )
  {
    rows[i] = ( rows_[i] >> output ) & 1u;
  }
  truth_table t( num_inputs_, 1u, std::move( rows ) );
  t.input_names_ = input_names_;
  t.output_names_ = { output_names_[output] };
  return t;
}

bool truth_table::is_reversible() const
{
  if ( num_inputs_ != num_outputs_ )
  {
    return false;
  }
  std::vector<bool> seen( rows_.size(), false );
  for ( auto r : rows_ )
  {
    if ( seen[r] )
    {
      return false;
    }
    seen[r] = true;
  }
  return true;
}

permutation truth_table::to_permutation() const
{
  if ( !is_reversible() )
  {
    throw std::invalid_argument( "truth table is not reversible" );
  }
  return permutation( rows_ );
}

truth_table truth_table_from_columns( unsigned num_inputs, std::vector<truth_column> const& columns )
{
  truth_table t( num_inputs, static_cast<unsigned>( columns.size() ) );
  for ( unsigned o = 0; o < columns.size(); ++o )
  {
    for ( std::uint64_t i = 0; i < t.num_rows(); ++i )
    {
      if ( columns[o].get( i ) )
      {
        t.set( i, o, true );
      }
    }
  }
  return t;
}

} // namespace revsyn
