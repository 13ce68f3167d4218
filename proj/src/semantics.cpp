#include "mpu/semantics.hpp"

#include "mpu/error.hpp"

#include <utility>

namespace mpu
{

std::string_view to_string( Semantics s )
{
    switch ( s )
    {
    case Semantics::sync: return "sync";
    case Semantics::async: return "async";
    case Semantics::general: return "general";
    case Semantics::mp: return "mp";
    }
    return "unknown";
}

Semantics semantics_from_string( std::string_view text )
{
    if ( text == "sync" )
        return Semantics::sync;
    if ( text == "async" )
        return Semantics::async;
    if ( text == "general" )
        return Semantics::general;
    if ( text == "mp" )
        return Semantics::mp;
    throw Error( ErrorKind::invalid_argument,
                 "unknown semantics '" + std::string( text ) + "': expected sync, async, general or mp" );
}

namespace
{

void check_arity( const BooleanNetwork& net, std::size_t size )
{
    if ( size != net.size() )
        throw Error( ErrorKind::invalid_argument, "state length " + std::to_string( size ) +
                                                          " does not match network size " + std::to_string( net.size() ) );
}

std::vector< std::size_t > unstable_components( const BooleanNetwork& net, const BoolState& s )
{
    std::vector< std::size_t > out;
    for ( std::size_t j = 0; j < net.size(); ++j )
        if ( net.function( j ).eval( s ) != s[ j ] )
            out.push_back( j );
    return out;
}

} // namespace

BoolState sync_successor( const BooleanNetwork& net, const BoolState& s )
{
    check_arity( net, s.size() );
    BoolState next( s.size() );
    for ( std::size_t j = 0; j < net.size(); ++j )
        next.set( j, net.function( j ).eval( s ) );
    return next;
}

std::vector< BoolState > async_successors( const BooleanNetwork& net, const BoolState& s )
{
    check_arity( net, s.size() );
    std::vector< BoolState > out;
    for ( auto j : unstable_components( net, s ) )
        out.push_back( s.flipped( j ) );
    return out;
}

std::vector< BoolState > general_successors( const BooleanNetwork& net, const BoolState& s )
{
    check_arity( net, s.size() );
    const auto unstable = unstable_components( net, s );
    if ( unstable.size() >= 32 )
        throw Error( ErrorKind::size_limit, "too many unstable components for generalized asynchronous enumeration" );
    std::vector< BoolState > out;
    const std::uint64_t subsets = std::uint64_t{ 1 } << unstable.size();
    out.reserve( subsets - 1 );
    for ( std::uint64_t mask = 1; mask < subsets; ++mask )
    {
        auto next = s;
        for ( std::size_t i = 0; i < unstable.size(); ++i )
            if ( ( mask >> i ) & 1u )
                next.flip( unstable[ i ] );
        out.push_back( std::move( next ) );
    }
    return out;
}

bool gamma_can_be( const BooleanNetwork& net, std::size_t j, const MPState& x, bool value )
{
    check_arity( net, x.size() );
    if ( j >= net.size() )
        throw Error( ErrorKind::invalid_argument, "component index " + std::to_string( j ) + " out of range" );
    return net.function( j ).can_attain( value, [ & ]( Bdd::var_id v ) {
        switch ( x[ v ] )
        {
        case Level::zero: return std::pair{ true, false };
        case Level::one: return std::pair{ false, true };
        default: return std::pair{ true, true };
        }
    } );
}

std::vector< MPState > mp_successors( const BooleanNetwork& net, const MPState& x )
{
    check_arity( net, x.size() );
    std::vector< MPState > out;
    for ( std::size_t j = 0; j < net.size(); ++j )
    {
        const auto level = x[ j ];
        if ( ( level == Level::zero || level == Level::dec ) && gamma_can_be( net, j, x, true ) )
            out.push_back( x.with( j, Level::inc ) );
        if ( ( level == Level::one || level == Level::inc ) && gamma_can_be( net, j, x, false ) )
            out.push_back( x.with( j, Level::dec ) );
        if ( level == Level::inc )
            out.push_back( x.with( j, Level::one ) );
        if ( level == Level::dec )
            out.push_back( x.with( j, Level::zero ) );
    }
    return out;
}

} // namespace mpu
