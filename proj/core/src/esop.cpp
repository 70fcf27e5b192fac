#include <revsyn/esop.hpp>

#include <algorithm>
#include <stdexcept>

namespace revsyn
{

std::vector<unsigned> cube::variables() const
{
  std::vector<unsigned> vars;
  for ( auto m = mask_; m != 0u; m &= m - 1u )
  {
    vars.push_back( static_cast<unsigned>( std::countr_zero( m ) ) );
  }
  return vars;
}

esop_expression::esop_expression( unsigned num_vars, std::initializer_list<cube> cubes )
    : esop_expression( num_vars, std::vector<cube>( cubes ) )
{
}

esop_expression::esop_expression( unsigned num_vars, std::vector<cube> cubes )
    : num_vars_( num_vars )
{
  std::sort( cubes.begin(), cubes.end() );
  /* pairs of equal cubes cancel */
  for ( std::size_t i = 0; i < cubes.size(); )
  {
    std::size_t j = i;
    while ( j < cubes.size() && cubes[j] == cubes[i] )
    {
      ++j;
    }
    if ( ( j - i ) % 2u == 1u )
    {
      cubes_.push_back( cubes[i] );
    }
    i = j;
  }
  if ( num_vars_ < 32u )
  {
    for ( auto c : cubes_ )
    {
      if ( c.mask() >> num_vars_ )
      {
        throw std::invalid_argument( "cube " + to_string( c ) + " uses a variable beyond the expression's arity" );
      }
    }
  }
}

esop_expression esop_expression::constant( unsigned num_vars, bool value )
{
  esop_expression e( num_vars );
  if ( value )
  {
    e.cubes_.push_back( cube::one() );
  }
  return e;
}

esop_expression esop_expression::variable( unsigned num_vars, unsigned var )
{
  return esop_expression( num_vars, { cube::literal( var ) } );
}

bool esop_expression::contains( cube c ) const
{
  return std::binary_search( cubes_.begin(), cubes_.end(), c );
}

void esop_expression::toggle( cube c )
{
  auto it = std::lower_bound( cubes_.begin(), cubes_.end(), c );
  if ( it != cubes_.end() && *it == c )
  {
    cubes_.erase( it );
  }
  else
  {
    cubes_.insert( it, c );
  }
}

unsigned esop_expression::degree() const
{
  unsigned d = 0u;
  for ( auto c : cubes_ )
  {
    d = std::max( d, c.degree() );
  }
  return d;
}

unsigned esop_expression::literal_count() const
{
  unsigned n = 0u;
  for ( auto c : cubes_ )
  {
    n += c.degree();
  }
  return n;
}

unsigned esop_expression::nonlinear_count() const
{
  return static_cast<unsigned>( std::count_if( cubes_.begin(), cubes_.end(), []( cube c ) { return c.degree() >= 2u; } ) );
}

std::uint32_t esop_expression::support() const
{
  std::uint32_t s = 0u;
  for ( auto c : cubes_ )
  {
    s |= c.mask();
  }
  return s;
}

bool esop_expression::evaluate( std::uint64_t assignment ) const
{
  bool value = false;
  for ( auto c : cubes_ )
  {
    value ^= c.evaluate( assignment );
  }
  return value;
}

esop_expression& esop_expression::operator^=( esop_expression const& other )
{
  std::vector<cube> merged;
  merged.reserve( cubes_.size() + other.cubes_.size() );
  std::set_symmetric_difference( cubes_.begin(), cubes_.end(), other.cubes_.begin(), other.cubes_.end(),
                                 std::back_inserter( merged ) );
  cubes_ = std::move( merged );
  num_vars_ = std::max( num_vars_, other.num_vars_ );
  return *this;
}

esop_expression operator*( esop_expression const& a, esop_expression const& b )
{
  std::vector<cube> products;
  products.reserve( a.size() * b.size() );
  for ( auto ca : a.cubes() )
  {
    for ( auto cb : b.cubes() )
    {
      products.push_back( ca * cb );
    }
  }
  return esop_expression( std::max( a.num_vars(), b.num_vars() ), std::move( products ) );
}

esop_expression operator*( esop_expression const& a, cube c )
{
  std::vector<cube> products;
  products.reserve( a.size() );
  for ( auto ca : a.cubes() )
  {
    products.push_back( ca * c );
  }
  return esop_expression( a.num_vars(), std::move( products ) );
}

esop_expression esop_expression::substitute( unsigned var, esop_expression const& replacement ) const
{
  /* c = var * rest  ->  var * rest ^ replacement * rest */
  std::vector<cube> result;
  result.reserve( cubes_.size() * ( 1u + replacement.size() ) );
  for ( auto c : cubes_ )
  {
    result.push_back( c );
    if ( c.has( var ) )
    {
      auto const rest = c.without( cube::literal( var ) );
      for ( auto r : replacement.cubes() )
      {
        result.push_back( rest * r );
      }
    }
  }
  return esop_expression( num_vars_, std::move( result ) );
}

std::string to_string( cube c )
{
  if ( c.is_one() )
  {
    return "1";
  }
  std::string s;
  for ( auto v : c.variables() )
  {
    s += "x" + std::to_string( v + 1u );
  }
  return s;
}

std::string to_string( esop_expression const& expr )
{
  if ( expr.empty() )
  {
    return "0";
  }
  std::string s;
  for ( auto c : expr.cubes() )
  {
    if ( !s.empty() )
    {
      s += " ^ ";
    }
    s += to_string( c );
  }
  return s;
}

} // namespace revsyn
