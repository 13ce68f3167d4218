#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace mpu
{

// Boolean expression tree over component indices.
class Expr
{
public:
    enum class Kind : std::uint8_t
    {
        constant,
        variable,
        negation,
        conjunction,
        disjunction,
    };

    static Expr constant( bool value );
    static Expr variable( std::size_t index );

    friend Expr operator!( Expr e );
    friend Expr operator&( Expr a, Expr b );
    friend Expr operator|( Expr a, Expr b );

    [[nodiscard]] Kind kind() const { return _kind; }
    [[nodiscard]] bool value() const { return _index != 0; }
    [[nodiscard]] std::size_t index() const { return _index; }
    [[nodiscard]] const std::vector< Expr >& args() const { return _args; }

    template < class Assignment >
    [[nodiscard]] bool eval( const Assignment& s ) const
    {
        switch ( _kind )
        {
        case Kind::constant: return _index != 0;
        case Kind::variable: return s[ _index ];
        case Kind::negation: return !_args[ 0 ].eval( s );
        case Kind::conjunction: return _args[ 0 ].eval( s ) && _args[ 1 ].eval( s );
        case Kind::disjunction: return _args[ 0 ].eval( s ) || _args[ 1 ].eval( s );
        }
        return false;
    }

    // Syntactic occurrences, not functional support.
    void collect_variables( std::set< std::size_t >& out ) const;

    friend bool operator==( const Expr& a, const Expr& b ) = default;

private:
    Expr( Kind kind, std::size_t index, std::vector< Expr > args )
            : _kind{ kind }, _index{ index }, _args{ std::move( args ) }
    {
    }

    Kind _kind = Kind::constant;
    std::size_t _index = 0; // variable index, or constant value
    std::vector< Expr > _args;
};

// Infix rendering with '!', '&', '|' and minimal parentheses.
[[nodiscard]] std::string to_string( const Expr& e, std::span< const std::string > names );

} // namespace mpu
