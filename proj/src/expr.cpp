#include "mpu/expr.hpp"

namespace mpu
{

Expr Expr::constant( bool value )
{
    return Expr( Kind::constant, value ? 1 : 0, {} );
}

Expr Expr::variable( std::size_t index )
{
    return Expr( Kind::variable, index, {} );
}

Expr operator!( Expr e )
{
    return Expr( Expr::Kind::negation, 0, { std::move( e ) } );
}

Expr operator&( Expr a, Expr b )
{
    return Expr( Expr::Kind::conjunction, 0, { std::move( a ), std::move( b ) } );
}

Expr operator|( Expr a, Expr b )
{
    return Expr( Expr::Kind::disjunction, 0, { std::move( a ), std::move( b ) } );
}

void Expr::collect_variables( std::set< std::size_t >& out ) const
{
    if ( _kind == Kind::variable )
        out.insert( _index );
    for ( const auto& a : _args )
        a.collect_variables( out );
}

namespace
{

// Binding strength: or < and < not/atom.
int precedence( const Expr& e )
{
    switch ( e.kind() )
    {
    case Expr::Kind::disjunction: return 0;
    case Expr::Kind::conjunction: return 1;
    default: return 2;
    }
}

void render( const Expr& e, std::span< const std::string > names, std::string& out )
{
    auto child = [ & ]( const Expr& c, int min_prec ) {
        if ( precedence( c ) < min_prec )
        {
            out += '(';
            render( c, names, out );
            out += ')';
        }
        else
            render( c, names, out );
    };

    switch ( e.kind() )
    {
    case Expr::Kind::constant: out += e.value() ? '1' : '0'; break;
    case Expr::Kind::variable: out += names[ e.index() ]; break;
    case Expr::Kind::negation:
        out += '!';
        child( e.args()[ 0 ], 2 );
        break;
    case Expr::Kind::conjunction:
        child( e.args()[ 0 ], 1 );
        out += " & ";
        child( e.args()[ 1 ], 1 );
        break;
    case Expr::Kind::disjunction:
        child( e.args()[ 0 ], 0 );
        out += " | ";
        child( e.args()[ 1 ], 0 );
        break;
    }
}

} // namespace

std::string to_string( const Expr& e, std::span< const std::string > names )
{
    std::string out;
    render( e, names, out );
    return out;
}

} // namespace mpu
