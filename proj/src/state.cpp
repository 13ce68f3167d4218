#include "mpu/state.hpp"

#include "mpu/error.hpp"

namespace mpu
{

namespace
{

std::size_t mix( std::size_t seed, std::uint64_t value )
{
    value ^= value >> 33;
    value *= 0xff51afd7ed558ccdULL;
    value ^= value >> 33;
    return seed ^ ( value + 0x9e3779b97f4a7c15ULL + ( seed << 6 ) + ( seed >> 2 ) );
}

} // namespace

BoolState BoolState::parse( std::string_view text )
{
    BoolState s( text.size() );
    for ( std::size_t i = 0; i < text.size(); ++i )
    {
        if ( text[ i ] == '1' )
            s.set( i, true );
        else if ( text[ i ] != '0' )
            throw Error( ErrorKind::invalid_argument,
                         "invalid Boolean state '" + std::string( text ) + "': expected only '0' and '1'" );
    }
    return s;
}

std::string BoolState::to_string() const
{
    std::string out( _size, '0' );
    for ( std::size_t i = 0; i < _size; ++i )
        if ( ( *this )[ i ] )
            out[ i ] = '1';
    return out;
}

std::size_t BoolState::hash() const
{
    std::size_t h = _size;
    for ( auto w : _words )
        h = mix( h, w );
    return h;
}

BoolState BoolState::from_index( std::uint64_t code, std::size_t size )
{
    BoolState s( size );
    for ( std::size_t i = 0; i < size; ++i )
        s.set( size - 1 - i, ( code >> i ) & 1u );
    return s;
}

std::uint64_t BoolState::index() const
{
    std::uint64_t code = 0;
    for ( std::size_t i = 0; i < _size; ++i )
        code = ( code << 1 ) | ( ( *this )[ i ] ? 1u : 0u );
    return code;
}

std::strong_ordering operator<=>( const BoolState& lhs, const BoolState& rhs )
{
    const auto common = std::min( lhs.size(), rhs.size() );
    for ( std::size_t i = 0; i < common; ++i )
        if ( lhs[ i ] != rhs[ i ] )
            return lhs[ i ] ? std::strong_ordering::greater : std::strong_ordering::less;
    return lhs.size() <=> rhs.size();
}

Level level_from_char( char c )
{
    switch ( c )
    {
    case '0': return Level::zero;
    case '1': return Level::one;
    case 'i': return Level::inc;
    case 'd': return Level::dec;
    default:
        throw Error( ErrorKind::invalid_argument, std::string( "invalid level '" ) + c + "': expected 0, i, d or 1" );
    }
}

MPState::MPState( const BoolState& s ) : _levels( s.size() )
{
    for ( std::size_t i = 0; i < s.size(); ++i )
        _levels[ i ] = s[ i ] ? Level::one : Level::zero;
}

MPState MPState::parse( std::string_view text )
{
    MPState x( text.size() );
    for ( std::size_t i = 0; i < text.size(); ++i )
        x._levels[ i ] = level_from_char( text[ i ] );
    return x;
}

bool MPState::is_boolean() const
{
    for ( auto l : _levels )
        if ( !mpu::is_boolean( l ) )
            return false;
    return true;
}

BoolState MPState::to_bool() const
{
    BoolState s( size() );
    for ( std::size_t i = 0; i < size(); ++i )
        s.set( i, _levels[ i ] == Level::one );
    return s;
}

std::string MPState::to_string() const
{
    std::string out( size(), '0' );
    for ( std::size_t i = 0; i < size(); ++i )
        out[ i ] = to_char( _levels[ i ] );
    return out;
}

std::size_t MPState::hash() const
{
    std::size_t h = size();
    std::uint64_t word = 0;
    std::size_t filled = 0;
    for ( auto l : _levels )
    {
        word = ( word << 8 ) | static_cast< unsigned char >( l );
        if ( ++filled == 8 )
        {
            h = mix( h, word );
            word = 0;
            filled = 0;
        }
    }
    return mix( h, word );
}

MPState MPState::from_index( std::uint64_t code, std::size_t size )
{
    MPState x( size );
    for ( std::size_t i = 0; i < size; ++i )
    {
        x._levels[ size - 1 - i ] = all_levels[ code & 3u ];
        code >>= 2;
    }
    return x;
}

std::strong_ordering operator<=>( const MPState& lhs, const MPState& rhs )
{
    return lhs.to_string() <=> rhs.to_string();
}

StatePattern StatePattern::parse( std::string_view text )
{
    for ( char c : text )
        if ( c != '0' && c != '1' && c != 'i' && c != 'd' && c != '*' )
            throw Error( ErrorKind::invalid_argument,
                         "malformed target pattern '" + std::string( text ) + "': expected characters from {0,1,i,d,*}" );
    StatePattern p;
    p._text = std::string( text );
    return p;
}

bool StatePattern::matches( const BoolState& s ) const
{
    if ( s.size() != _text.size() )
        return false;
    for ( std::size_t i = 0; i < _text.size(); ++i )
    {
        const char c = _text[ i ];
        if ( c == '*' )
            continue;
        if ( c == 'i' || c == 'd' || ( c == '1' ) != s[ i ] )
            return false;
    }
    return true;
}

bool StatePattern::matches( const MPState& s ) const
{
    if ( s.size() != _text.size() )
        return false;
    for ( std::size_t i = 0; i < _text.size(); ++i )
        if ( _text[ i ] != '*' && _text[ i ] != to_char( s[ i ] ) )
            return false;
    return true;
}

} // namespace mpu
