#include "mpu/json_io.hpp"

#include "mpu/bnet.hpp"

namespace mpu
{

json to_json( const BooleanNetwork& net )
{
    json out;
    out[ "size" ] = net.size();
    out[ "components" ] = json::array();
    for ( std::size_t j = 0; j < net.size(); ++j )
    {
        json regulators = json::array();
        for ( auto k : support( net.function( j ) ) )
            regulators.push_back( net.name( k ) );
        out[ "components" ].push_back( { { "name", net.name( j ) },
                                         { "rule", to_string( net.rule( j ), net.names() ) },
                                         { "regulators", std::move( regulators ) } } );
    }
    return out;
}

json to_json( const ReachResult& r )
{
    return { { "verdict", to_string( r.verdict ) }, { "explored", r.explored }, { "witness", r.witness } };
}

json to_json( const RegGraph& g )
{
    json out;
    out[ "nodes" ] = g.names;
    out[ "edges" ] = json::array();
    for ( const auto& e : g.edges )
    {
        json edge{ { "source", g.names[ e.source ] }, { "target", g.names[ e.target ] }, { "sign", to_string( e.sign ) } };
        if ( e.positive_witness )
            edge[ "positive_witness" ] = e.positive_witness->to_string();
        if ( e.negative_witness )
            edge[ "negative_witness" ] = e.negative_witness->to_string();
        out[ "edges" ].push_back( std::move( edge ) );
    }
    return out;
}

json to_json( const std::vector< Attractor >& attractors )
{
    json out = json::array();
    for ( const auto& a : attractors )
        out.push_back( { { "kind", to_string( a.kind ) }, { "states", state_list( a.states ) } } );
    return out;
}

json to_json( const oracle::EquivalenceReport& report )
{
    json out;
    out[ "network" ] = report.network;
    out[ "mode" ] = to_string( report.mode );
    out[ "scope" ] = report.all_levels ? "all-levels" : "boolean";
    out[ "pairs_checked" ] = report.pairs_checked;
    out[ "holds" ] = report.holds();
    out[ "mismatches" ] = json::array();
    for ( const auto& m : report.mismatches )
        out[ "mismatches" ].push_back( { { "source", m.source },
                                         { "target", m.target },
                                         { "mp_reachable", m.mp_reachable },
                                         { "unfolded_reachable", m.unfolded_reachable },
                                         { "witness", m.witness } } );
    out[ "subsumption_violations" ] = json::array();
    for ( const auto& [ source, target ] : report.subsumption_violations )
        out[ "subsumption_violations" ].push_back( { { "source", source }, { "target", target } } );
    return out;
}

json to_json( const Error& e )
{
    json out{ { "error", to_string( e.kind() ) }, { "message", e.what() } };
    if ( const auto* p = dynamic_cast< const ParseError* >( &e ) )
    {
        out[ "line" ] = p->line();
        out[ "column" ] = p->column();
    }
    return out;
}

} // namespace mpu
