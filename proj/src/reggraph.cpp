#include "mpu/reggraph.hpp"

#include <algorithm>

namespace mpu
{

std::string_view to_string( Sign s )
{
    switch ( s )
    {
    case Sign::positive: return "positive";
    case Sign::negative: return "negative";
    case Sign::dual: return "dual";
    }
    return "unknown";
}

const RegEdge* RegGraph::find( std::size_t source, std::size_t target ) const
{
    for ( const auto& e : edges )
        if ( e.source == source && e.target == target )
            return &e;
    return nullptr;
}

const RegEdge* RegGraph::find( std::string_view source, std::string_view target ) const
{
    const auto s = std::find( names.begin(), names.end(), source );
    const auto t = std::find( names.begin(), names.end(), target );
    if ( s == names.end() || t == names.end() )
        return nullptr;
    return find( static_cast< std::size_t >( s - names.begin() ), static_cast< std::size_t >( t - names.begin() ) );
}

namespace
{

std::optional< BoolState > witness( const Bdd& condition, std::size_t n, std::size_t source )
{
    const auto solution = condition.any_solution( n );
    if ( !solution )
        return std::nullopt;
    BoolState s( n );
    for ( std::size_t i = 0; i < n; ++i )
        s.set( i, ( *solution )[ i ] );
    s.set( source, false );
    return s;
}

} // namespace

RegGraph infer_regulatory_graph( const BooleanNetwork& net )
{
    RegGraph g;
    g.names = net.names();
    const auto n = net.size();
    for ( std::size_t j = 0; j < n; ++j )
    {
        const auto& f = net.function( j );
        for ( auto k : f.support() )
        {
            const auto f0 = f.restrict( k, false );
            const auto f1 = f.restrict( k, true );
            auto pos = witness( f1 & ~f0, n, k );
            auto neg = witness( f0 & ~f1, n, k );
            if ( !pos && !neg )
                continue;
            const auto sign = pos && neg ? Sign::dual : ( pos ? Sign::positive : Sign::negative );
            g.edges.push_back( { k, j, sign, std::move( pos ), std::move( neg ) } );
        }
    }
    return g;
}

} // namespace mpu
