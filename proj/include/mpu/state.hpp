#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mpu
{

// A configuration over {0,1}^n, one bit per component in declaration order.
// Textual form is a string over {0,1} in the same order.
class BoolState
{
    std::size_t _size = 0;
    std::vector<std::uint64_t> _words;

public:
    BoolState() = default;
    explicit BoolState( std::size_t size ) : _size{ size }, _words( ( size + 63 ) / 64, 0 ) {}

    static BoolState parse( std::string_view text );

    [[nodiscard]] std::size_t size() const { return _size; }

    [[nodiscard]] bool operator[]( std::size_t i ) const { return ( _words[ i >> 6 ] >> ( i & 63 ) ) & 1u; }

    void set( std::size_t i, bool value )
    {
        const auto mask = std::uint64_t{ 1 } << ( i & 63 );
        if ( value )
            _words[ i >> 6 ] |= mask;
        else
            _words[ i >> 6 ] &= ~mask;
    }

    void flip( std::size_t i ) { _words[ i >> 6 ] ^= std::uint64_t{ 1 } << ( i & 63 ); }

    [[nodiscard]] BoolState with( std::size_t i, bool value ) const
    {
        auto copy = *this;
        copy.set( i, value );
        return copy;
    }

    [[nodiscard]] BoolState flipped( std::size_t i ) const
    {
        auto copy = *this;
        copy.flip( i );
        return copy;
    }

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::size_t hash() const;

    // Enumeration helpers for exhaustive checks; bit 0 of `code` is the
    // last component so that increasing codes follow lexicographic order.
    static BoolState from_index( std::uint64_t code, std::size_t size );
    [[nodiscard]] std::uint64_t index() const;

    friend bool operator==( const BoolState& lhs, const BoolState& rhs ) = default;

    // Lexicographic on the textual form.
    friend std::strong_ordering operator<=>( const BoolState& lhs, const BoolState& rhs );
};

enum class Level : char
{
    zero = '0',
    inc = 'i',
    dec = 'd',
    one = '1',
};

[[nodiscard]] constexpr bool is_boolean( Level l ) { return l == Level::zero || l == Level::one; }
[[nodiscard]] constexpr char to_char( Level l ) { return static_cast< char >( l ); }
[[nodiscard]] Level level_from_char( char c );

inline constexpr Level all_levels[] = { Level::zero, Level::inc, Level::dec, Level::one };

// A Most Permissive configuration over {0,i,d,1}^n.
class MPState
{
    std::vector< Level > _levels;

public:
    MPState() = default;
    explicit MPState( std::size_t size, Level fill = Level::zero ) : _levels( size, fill ) {}
    explicit MPState( const BoolState& s );

    static MPState parse( std::string_view text );

    [[nodiscard]] std::size_t size() const { return _levels.size(); }
    [[nodiscard]] Level operator[]( std::size_t i ) const { return _levels[ i ]; }
    void set( std::size_t i, Level l ) { _levels[ i ] = l; }

    [[nodiscard]] MPState with( std::size_t i, Level l ) const
    {
        auto copy = *this;
        copy._levels[ i ] = l;
        return copy;
    }

    [[nodiscard]] bool is_boolean() const;
    // Only valid when is_boolean().
    [[nodiscard]] BoolState to_bool() const;

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::size_t hash() const;

    // Base-4 enumeration over levels in the order 0,i,d,1; last component
    // is the least significant digit.
    static MPState from_index( std::uint64_t code, std::size_t size );

    friend bool operator==( const MPState& lhs, const MPState& rhs ) = default;
    friend std::strong_ordering operator<=>( const MPState& lhs, const MPState& rhs );
};

// A target set given as a string over {0,1,i,d,*}; '*' matches any level.
class StatePattern
{
    std::string _text;

public:
    StatePattern() = default;
    static StatePattern parse( std::string_view text );

    [[nodiscard]] std::size_t size() const { return _text.size(); }
    [[nodiscard]] const std::string& text() const { return _text; }
    [[nodiscard]] char operator[]( std::size_t i ) const { return _text[ i ]; }

    [[nodiscard]] bool matches( const BoolState& s ) const;
    [[nodiscard]] bool matches( const MPState& s ) const;
};

} // namespace mpu

template <>
struct std::hash< mpu::BoolState >
{
    std::size_t operator()( const mpu::BoolState& s ) const noexcept { return s.hash(); }
};

template <>
struct std::hash< mpu::MPState >
{
    std::size_t operator()( const mpu::MPState& s ) const noexcept { return s.hash(); }
};
