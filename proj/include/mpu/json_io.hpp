#pragma once

#include "json.hpp"

#include "mpu/error.hpp"
#include "mpu/network.hpp"
#include "mpu/oracle.hpp"
#include "mpu/reach.hpp"
#include "mpu/reggraph.hpp"

#include <vector>

namespace mpu
{

using json = nlohmann::ordered_json;

[[nodiscard]] json to_json( const BooleanNetwork& net );
[[nodiscard]] json to_json( const ReachResult& r );
[[nodiscard]] json to_json( const RegGraph& g );
[[nodiscard]] json to_json( const std::vector< Attractor >& attractors );
[[nodiscard]] json to_json( const oracle::EquivalenceReport& report );
[[nodiscard]] json to_json( const Error& e );

template < class State >
[[nodiscard]] json to_json( const Stg< State >& g )
{
    json out;
    out[ "semantics" ] = g.semantics;
    out[ "cap" ] = g.cap;
    out[ "cap_exceeded" ] = g.cap_exceeded;
    out[ "roots" ] = json::array();
    for ( const auto& r : g.roots )
        out[ "roots" ].push_back( r.to_string() );
    out[ "nodes" ] = json::array();
    for ( const auto& n : g.nodes )
        out[ "nodes" ].push_back( n.to_string() );
    out[ "edges" ] = json::array();
    for ( const auto& e : g.edges )
        out[ "edges" ].push_back( { { "from", g.nodes[ e.from ].to_string() },
                                    { "to", g.nodes[ e.to ].to_string() },
                                    { "style", e.style == EdgeStyle::solid ? "solid" : "dotted" } } );
    return out;
}

template < class State >
[[nodiscard]] json state_list( const std::vector< State >& states )
{
    json out = json::array();
    for ( const auto& s : states )
        out.push_back( s.to_string() );
    return out;
}

} // namespace mpu
