#include <revsyn/benchmarks.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace revsyn
{

namespace
{

using row_fn = std::function<std::uint64_t( std::uint64_t )>;

struct entry
{
  benchmark_info info;
  row_fn fn;
};

unsigned weight( std::uint64_t x )
{
  return static_cast<unsigned>( std::popcount( x ) );
}

bool bit( std::uint64_t x, unsigned k )
{
  return ( x >> k ) & 1u;
}

row_fn symmetric( std::initializer_list<unsigned> weights )
{
  std::vector<unsigned> w( weights );
  return [w]( std::uint64_t x ) -> std::uint64_t { return std::find( w.begin(), w.end(), weight( x ) ) != w.end(); };
}

row_fn from_permutation( permutation p )
{
  return [p = std::move( p )]( std::uint64_t x ) { return p[x]; };
}

/* Applies a Toffoli cascade given as (controls mask, target bit) pairs. */
row_fn cascade( std::vector<std::pair<std::uint64_t, unsigned>> gates )
{
  return [gates = std::move( gates )]( std::uint64_t x ) {
    for ( auto [controls, target] : gates )
    {
      if ( ( x & controls ) == controls )
      {
        x ^= std::uint64_t{ 1 } << target;
      }
    }
    return x;
  };
}

std::uint8_t gf_mul( std::uint8_t a, std::uint8_t b )
{
  std::uint8_t p = 0u;
  while ( b )
  {
    if ( b & 1u )
    {
      p ^= a;
    }
    a = static_cast<std::uint8_t>( ( a << 1u ) ^ ( ( a & 0x80u ) ? 0x1bu : 0u ) );
    b >>= 1u;
  }
  return p;
}

std::vector<entry> build_catalog()
{
  std::vector<entry> e;
  auto add = [&]( std::string name, unsigned n, unsigned m, bool faithful, std::string desc, row_fn fn ) {
    e.push_back( { { std::move( name ), n, m, faithful, std::move( desc ) }, std::move( fn ) } );
  };

  add( "2of5", 5, 1, true, "1 iff exactly two inputs are 1", symmetric( { 2 } ) );
  add( "3_17", 3, 3, true, "3-variable permutation from its ANF f1 = ac^bc^a^c^1, f2 = a^b^c^1, f3 = ab^bc^b^c^1",
       []( std::uint64_t x ) -> std::uint64_t {
         bool const a = bit( x, 0 ), b = bit( x, 1 ), c = bit( x, 2 );
         bool const f1 = ( a && c ) ^ ( b && c ) ^ a ^ c ^ 1;
         bool const f2 = a ^ b ^ c ^ 1;
         bool const f3 = ( a && b ) ^ ( b && c ) ^ b ^ c ^ 1;
         return std::uint64_t{ f1 } | ( std::uint64_t{ f2 } << 1u ) | ( std::uint64_t{ f3 } << 2u );
       } );
  add( "4_49", 4, 4, false, "4-variable permutation stand-in",
       from_permutation( permutation( { 15, 1, 12, 3, 5, 6, 8, 7, 0, 10, 13, 9, 2, 4, 14, 11 } ) ) );
  add( "4mod5", 4, 1, true, "1 iff the input is divisible by 5", []( std::uint64_t x ) -> std::uint64_t { return x % 5u == 0u; } );
  add( "5mod5", 5, 1, true, "1 iff the input is divisible by 5", []( std::uint64_t x ) -> std::uint64_t { return x % 5u == 0u; } );
  add( "5one013", 5, 1, true, "1 iff the weight is 0, 1 or 3", symmetric( { 0, 1, 3 } ) );
  add( "5one245", 5, 1, true, "1 iff the weight is 2, 4 or 5", symmetric( { 2, 4, 5 } ) );
  add( "5xp1", 7, 10, false, "stand-in: low 10 bits of x*x + 1",
       []( std::uint64_t x ) { return ( x * x + 1u ) & 0x3ffu; } );
  add( "6one0246", 6, 1, true, "1 iff the weight is even", symmetric( { 0, 2, 4, 6 } ) );
  add( "6one135", 6, 1, true, "1 iff the weight is odd", symmetric( { 1, 3, 5 } ) );
  add( "6sym", 6, 1, true, "1 iff the weight is 2, 3 or 4", symmetric( { 2, 3, 4 } ) );
  add( "9sym", 9, 1, true, "1 iff the weight is between 3 and 6", symmetric( { 3, 4, 5, 6 } ) );
  add( "aes_sbox", 8, 8, true, "AES S-box", from_permutation( aes_sbox() ) );
  add( "alu", 5, 1, false, "stand-in: x1..x3 select one of eight operations on x4, x5",
       []( std::uint64_t x ) -> std::uint64_t {
         bool const a = bit( x, 3 ), b = bit( x, 4 );
         bool const r[8] = { a && b, a || b, a != b, !( a && b ), !( a || b ), a == b, a, !b };
         return r[x & 7u];
       } );
  add( "bw", 5, 28, false, "stand-in: pairwise ands and xors, negations, majority, parity and the full and",
       []( std::uint64_t x ) {
         std::uint64_t y = 0u;
         unsigned k = 0u;
         for ( unsigned i = 0; i < 5u; ++i )
         {
           for ( unsigned j = i + 1u; j < 5u; ++j )
           {
             y |= std::uint64_t( bit( x, i ) && bit( x, j ) ) << k++;
             y |= std::uint64_t( bit( x, i ) != bit( x, j ) ) << k++;
           }
         }
         for ( unsigned i = 0; i < 5u; ++i )
         {
           y |= std::uint64_t( !bit( x, i ) ) << k++;
         }
         y |= std::uint64_t( weight( x & 7u ) >= 2u ) << k++;
         y |= std::uint64_t( weight( x ) & 1u ) << k++;
         y |= std::uint64_t( x == 31u ) << k++;
         return y;
       } );
  add( "cycle10_2", 12, 12, false, "stand-in: increments x1..x10 modulo 1024 when x11 and x12 are 1",
       []( std::uint64_t x ) {
         if ( ( x >> 10u ) == 3u )
         {
           return ( x & ~std::uint64_t{ 0x3ff } ) | ( ( x + 1u ) & 0x3ffu );
         }
         return x;
       } );
  add( "decod24", 2, 4, true, "2-to-4 decoder", []( std::uint64_t x ) { return std::uint64_t{ 1 } << x; } );
  add( "f51m", 8, 8, false, "stand-in: product of the two 4-bit halves",
       []( std::uint64_t x ) { return ( x & 15u ) * ( x >> 4u ); } );
  add( "graycode6", 6, 6, true, "binary to Gray code", []( std::uint64_t x ) { return x ^ ( x >> 1u ); } );
  add( "ham3", 3, 3, false, "stand-in: Toffoli cascade on three lines",
       cascade( { { 0b010, 0 }, { 0b101, 1 }, { 0b001, 2 }, { 0b100, 0 } } ) );
  add( "ham7", 7, 7, false, "stand-in: Hamming-style parity network with two Toffoli gates",
       cascade( { { 0b0000001, 4 }, { 0b0000010, 4 }, { 0b0001000, 4 }, { 0b0000001, 5 }, { 0b0000100, 5 },
                  { 0b0001000, 5 }, { 0b0000010, 6 }, { 0b0000100, 6 }, { 0b0001000, 6 }, { 0b0110000, 0 },
                  { 0b1000100, 1 } } ) );
  for ( unsigned n = 4u; n <= 8u; ++n )
  {
    add( "hwb" + std::to_string( n ), n, n, true, "hidden weighted bit", from_permutation( hidden_weighted_bit( n ) ) );
  }
  add( "majority3", 3, 1, true, "majority of three", symmetric( { 2, 3 } ) );
  add( "majority5", 5, 1, true, "majority of five", symmetric( { 3, 4, 5 } ) );
  add( "mod5adder", 6, 6, false, "stand-in: (a, b) -> (a, (a + b) mod 5) for a, b < 5, identity otherwise",
       []( std::uint64_t x ) {
         auto const a = x & 7u, b = x >> 3u;
         if ( a < 5u && b < 5u )
         {
           return a | ( ( ( a + b ) % 5u ) << 3u );
         }
         return x;
       } );
  for ( unsigned n = 3u; n <= 8u; ++n )
  {
    add( "nth_prime" + std::to_string( n ) + "_inc", n, n, true, "i-th prime at position i, other values ascending",
         from_permutation( nth_prime_inc( n ) ) );
  }
  add( "present_sbox", 4, 4, true, "PRESENT S-box", from_permutation( present_sbox() ) );
  add( "rd32", 3, 2, true, "weight of the input", []( std::uint64_t x ) -> std::uint64_t { return weight( x ); } );
  add( "rd53", 5, 3, true, "weight of the input", []( std::uint64_t x ) -> std::uint64_t { return weight( x ); } );
  add( "rd73", 7, 3, true, "weight of the input", []( std::uint64_t x ) -> std::uint64_t { return weight( x ); } );
  add( "rd84", 8, 4, true, "weight of the input", []( std::uint64_t x ) -> std::uint64_t { return weight( x ); } );
  add( "sqr6", 6, 12, true, "square of the input", []( std::uint64_t x ) { return x * x; } );
  add( "wim", 4, 7, false, "stand-in: seven-segment decoder for hexadecimal digits",
       []( std::uint64_t x ) -> std::uint64_t {
         static constexpr std::uint8_t seg[16] = { 0x3f, 0x06, 0x5b, 0x4f, 0x66, 0x6d, 0x7d, 0x07,
                                                   0x7f, 0x6f, 0x77, 0x7c, 0x39, 0x5e, 0x79, 0x71 };
         return seg[x];
       } );
  add( "xor5", 5, 1, true, "parity of five inputs", symmetric( { 1, 3, 5 } ) );
  add( "z4ml", 7, 4, true, "sum of two 3-bit numbers and a carry",
       []( std::uint64_t x ) { return ( x & 7u ) + ( ( x >> 3u ) & 7u ) + ( x >> 6u ); } );

  std::sort( e.begin(), e.end(), []( entry const& a, entry const& b ) { return a.info.name < b.info.name; } );
  return e;
}

std::vector<entry> const& catalog()
{
  static std::vector<entry> const c = build_catalog();
  return c;
}

} // namespace

std::vector<benchmark_info> const& benchmark_catalog()
{
  static std::vector<benchmark_info> const infos = [] {
    std::vector<benchmark_info> v;
    for ( auto const& e : catalog() )
    {
      v.push_back( e.info );
    }
    return v;
  }();
  return infos;
}

std::optional<benchmark_info> find_benchmark( std::string const& name )
{
  for ( auto const& e : catalog() )
  {
    if ( e.info.name == name )
    {
      return e.info;
    }
  }
  return std::nullopt;
}

truth_table benchmark_table( std::string const& name )
{
  for ( auto const& e : catalog() )
  {
    if ( e.info.name != name )
    {
      continue;
    }
    truth_table t( e.info.inputs, e.info.outputs );
    auto const mask = e.info.outputs == 64u ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << e.info.outputs ) - 1u;
    for ( std::uint64_t x = 0; x < t.num_rows(); ++x )
    {
      auto const y = e.fn( x );
      if ( y & ~mask )
      {
        throw std::logic_error( "benchmark " + name + " produces more than " + std::to_string( e.info.outputs ) + " outputs" );
      }
      for ( unsigned j = 0; j < e.info.outputs; ++j )
      {
        t.set( x, j, ( y >> j ) & 1u );
      }
    }
    return t;
  }
  throw std::invalid_argument( "unknown benchmark '" + name + "'" );
}

permutation nth_prime_inc( unsigned n )
{
  auto const size = std::uint64_t{ 1 } << n;
  std::vector<bool> composite( size, false );
  std::vector<std::uint64_t> images{ 0u };
  std::vector<bool> used( size, false );
  used[0] = true;
  for ( std::uint64_t k = 2; k < size; ++k )
  {
    if ( composite[k] )
    {
      continue;
    }
    images.push_back( k );
    used[k] = true;
    for ( auto j = k * k; j < size; j += k )
    {
      composite[j] = true;
    }
  }
  for ( std::uint64_t k = 0; k < size; ++k )
  {
    if ( !used[k] )
    {
      images.push_back( k );
    }
  }
  return permutation( std::move( images ) );
}

permutation hidden_weighted_bit( unsigned n )
{
  auto const size = std::uint64_t{ 1 } << n;
  std::vector<std::uint64_t> images( size );
  for ( std::uint64_t x = 0; x < size; ++x )
  {
    auto const s = weight( x ) % n;
    images[x] = s == 0u ? x : ( ( x << s ) | ( x >> ( n - s ) ) ) & ( size - 1u );
  }
  return permutation( std::move( images ) );
}

permutation present_sbox()
{
  return permutation( { 0xc, 0x5, 0x6, 0xb, 0x9, 0x0, 0xa, 0xd, 0x3, 0xe, 0xf, 0x8, 0x4, 0x7, 0x1, 0x2 } );
}

permutation aes_sbox()
{
  std::vector<std::uint64_t> images( 256u );
  for ( unsigned x = 0; x < 256u; ++x )
  {
    std::uint8_t inv = 0u;
    for ( unsigned y = 1; y < 256u && x != 0u; ++y )
    {
      if ( gf_mul( static_cast<std::uint8_t>( x ), static_cast<std::uint8_t>( y ) ) == 1u )
      {
        inv = static_cast<std::uint8_t>( y );
        break;
      }
    }
    unsigned s = inv;
    for ( unsigned r = 1; r <= 4u; ++r )
    {
      s ^= ( ( inv << r ) | ( inv >> ( 8u - r ) ) ) & 0xffu;
    }
    images[x] = s ^ 0x63u;
  }
  return permutation( std::move( images ) );
}

} // namespace revsyn
