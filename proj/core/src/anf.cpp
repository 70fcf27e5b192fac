#include <revsyn/anf.hpp>

#include <stdexcept>

namespace revsyn
{

void anf_transform( std::span<std::uint8_t> values )
{
  for ( std::size_t stride = 1u; stride < values.size(); stride <<= 1u )
  {
    for ( std::size_t base = 0u; base < values.size(); base += stride << 1u )
    {
      for ( std::size_t i = base; i < base + stride; ++i )
      {
        values[i + stride] ^= values[i];
      }
    }
  }
}

truth_column anf_transform( truth_column const& values )
{
  /* in-word strides: 1, 2, 4, 8, 16, 32 */
  static constexpr std::uint64_t low_masks[] = { 0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
                                                 0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull };
  auto words = values.words();
  auto const n = values.num_vars();
  for ( unsigned v = 0u; v < n && v < 6u; ++v )
  {
    auto const shift = 1u << v;
    for ( auto& w : words )
    {
      w ^= ( w & low_masks[v] ) << shift;
    }
  }
  for ( std::size_t stride = 1u; stride < words.size(); stride <<= 1u )
  {
    for ( std::size_t base = 0u; base < words.size(); base += stride << 1u )
    {
      for ( std::size_t i = base; i < base + stride; ++i )
      {
        words[i + stride] ^= words[i];
      }
    }
  }
  return truth_column::from_words( n, std::move( words ) );
}

esop_expression anf_from_column( truth_column const& column )
{
  auto const coeffs = anf_transform( column );
  std::vector<cube> cubes;
  for ( std::uint64_t i = 0; i < coeffs.num_bits(); ++i )
  {
    if ( coeffs.get( i ) )
    {
      cubes.emplace_back( static_cast<std::uint32_t>( i ) );
    }
  }
  return esop_expression( column.num_vars(), std::move( cubes ) );
}

truth_column column_from_anf( esop_expression const& expr )
{
  truth_column coeffs( expr.num_vars() );
  for ( auto c : expr.cubes() )
  {
    coeffs.set( c.mask(), true );
  }
  return anf_transform( coeffs );
}

esop_expression anf_from_truth_table( truth_table const& tt )
{
  if ( tt.num_outputs() != 1u )
  {
    throw std::invalid_argument( "anf_from_truth_table expects a single-output table" );
  }
  return anf_from_column( tt.column( 0u ) );
}

std::vector<esop_expression> anf_per_output( truth_table const& tt )
{
  std::vector<esop_expression> exprs;
  exprs.reserve( tt.num_outputs() );
  for ( auto o = 0u; o < tt.num_outputs(); ++o )
  {
    exprs.push_back( anf_from_column( tt.column( o ) ) );
  }
  return exprs;
}

truth_table truth_table_from_anf( esop_expression const& expr )
{
  return truth_table_from_anf( std::vector<esop_expression>{ expr } );
}

truth_table truth_table_from_anf( std::vector<esop_expression> const& exprs )
{
  if ( exprs.empty() )
  {
    throw std::invalid_argument( "no expressions given" );
  }
  auto const n = exprs.front().num_vars();
  std::vector<truth_column> columns;
  columns.reserve( exprs.size() );
  for ( auto const& e : exprs )
  {
    if ( e.num_vars() != n )
    {
      throw std::invalid_argument( "expressions disagree on the number of variables" );
    }
    columns.push_back( column_from_anf( e ) );
  }
  return truth_table_from_columns( n, columns );
}

truth_table truth_table_from_permutation( permutation const& p )
{
  auto const n = p.num_vars();
  return truth_table( n, n, p.images() );
}

} // namespace revsyn
