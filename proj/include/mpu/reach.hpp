#pragma once

#include "mpu/error.hpp"
#include "mpu/network.hpp"
#include "mpu/semantics.hpp"
#include "mpu/state.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mpu
{

inline constexpr std::size_t default_cap = 1'000'000;

enum class EdgeStyle
{
    solid,
    dotted,
};

// Explored state transition graph. Nodes are in discovery (breadth-first)
// order; edges in the order they were generated.
template < class State >
struct Stg
{
    struct Edge
    {
        std::size_t from;
        std::size_t to;
        EdgeStyle style = EdgeStyle::solid;
    };

    std::string semantics;
    std::vector< State > roots;
    std::size_t cap = default_cap;
    bool cap_exceeded = false;
    std::vector< State > nodes;
    std::vector< Edge > edges;
};

enum class Verdict
{
    reachable,
    unreachable,
    cap_exceeded,
};

[[nodiscard]] std::string_view to_string( Verdict v );

struct ReachResult
{
    Verdict verdict = Verdict::unreachable;
    std::size_t explored = 0;
    // Source first, matching target last; empty unless reachable.
    std::vector< std::string > witness;
};

struct Attractor
{
    enum class Kind
    {
        stable_state,
        complex,
    };

    Kind kind;
    // Sorted lexicographically.
    std::vector< BoolState > states;
};

[[nodiscard]] std::string_view to_string( Attractor::Kind k );

namespace detail
{

inline void check_cap( std::size_t cap )
{
    if ( cap == 0 )
        throw Error( ErrorKind::invalid_argument, "cap must be positive" );
}

// Breadth-first exploration storing at most `cap` nodes; discovering one
// more sets cap_exceeded and stops.
template < class State, class Successors >
Stg< State > explore( std::vector< State > roots, Successors&& successors, std::size_t cap, std::string semantics )
{
    check_cap( cap );
    Stg< State > g;
    g.semantics = std::move( semantics );
    g.cap = cap;
    g.roots = roots;
    std::unordered_map< State, std::size_t > index;

    auto add = [ & ]( const State& s ) -> std::optional< std::size_t > {
        if ( auto it = index.find( s ); it != index.end() )
            return it->second;
        if ( g.nodes.size() >= cap )
        {
            g.cap_exceeded = true;
            return std::nullopt;
        }
        index.emplace( s, g.nodes.size() );
        g.nodes.push_back( s );
        return g.nodes.size() - 1;
    };

    for ( const auto& r : roots )
        if ( !add( r ) )
            return g;

    for ( std::size_t i = 0; i < g.nodes.size(); ++i )
    {
        const auto next = successors( g.nodes[ i ] );
        for ( const auto& t : next )
        {
            const auto target = add( t );
            if ( !target )
                return g;
            g.edges.push_back( { i, *target, EdgeStyle::solid } );
        }
    }
    return g;
}

template < class State, class Successors, class Matches >
ReachResult search( const State& from, Successors&& successors, Matches&& matches, std::size_t cap )
{
    check_cap( cap );
    ReachResult result;
    std::vector< State > nodes{ from };
    std::vector< std::size_t > parent{ 0 };
    std::unordered_map< State, std::size_t > index{ { from, 0 } };

    auto finish = [ & ]( std::size_t hit ) {
        result.verdict = Verdict::reachable;
        std::vector< std::string > path;
        for ( auto i = hit;; i = parent[ i ] )
        {
            path.push_back( nodes[ i ].to_string() );
            if ( i == 0 )
                break;
        }
        result.witness.assign( path.rbegin(), path.rend() );
    };

    if ( matches( from ) )
    {
        result.explored = 1;
        finish( 0 );
        return result;
    }

    for ( std::size_t i = 0; i < nodes.size(); ++i )
    {
        const auto next = successors( nodes[ i ] );
        for ( const auto& t : next )
        {
            if ( index.contains( t ) )
                continue;
            if ( nodes.size() >= cap )
            {
                result.verdict = Verdict::cap_exceeded;
                result.explored = nodes.size();
                return result;
            }
            index.emplace( t, nodes.size() );
            nodes.push_back( t );
            parent.push_back( i );
            if ( matches( t ) )
            {
                result.explored = nodes.size();
                finish( nodes.size() - 1 );
                return result;
            }
        }
    }
    result.verdict = Verdict::unreachable;
    result.explored = nodes.size();
    return result;
}

} // namespace detail

// Boolean successors under sync, async or general semantics. Fixed points
// of the synchronous map have no successor.
[[nodiscard]] std::vector< BoolState > successors( const BooleanNetwork& net, Semantics semantics,
                                                   const BoolState& s );

// Semantics must not be mp.
[[nodiscard]] Stg< BoolState > reachable_set( const BooleanNetwork& net, Semantics semantics, const BoolState& from,
                                               std::size_t cap = default_cap );
[[nodiscard]] Stg< MPState > reachable_set( const BooleanNetwork& net, const MPState& from,
                                             std::size_t cap = default_cap );

[[nodiscard]] ReachResult reaches( const BooleanNetwork& net, Semantics semantics, const BoolState& from,
                                   const StatePattern& to, std::size_t cap = default_cap );
[[nodiscard]] ReachResult reaches( const BooleanNetwork& net, const MPState& from, const StatePattern& to,
                                   std::size_t cap = default_cap );
// Parses `from` as a Boolean state, or as an MP state for mp semantics.
[[nodiscard]] ReachResult reaches( const BooleanNetwork& net, Semantics semantics, std::string_view from,
                                   std::string_view to, std::size_t cap = default_cap );

// All solutions of f(x) = x in lexicographic order, from the conjunction of
// the per-component equivalences.
[[nodiscard]] std::vector< BoolState > fixed_points( const BooleanNetwork& net );

// Terminal SCCs of the whole state space; throws Error(cap_exceeded) when
// 2^n > cap. Stable states first, then by smallest member.
[[nodiscard]] std::vector< Attractor > attractors( const BooleanNetwork& net, Semantics semantics,
                                                   std::size_t cap = default_cap );
// Terminal SCCs of the graph reachable from `roots`.
[[nodiscard]] std::vector< Attractor > attractors( const BooleanNetwork& net, Semantics semantics,
                                                   std::span< const BoolState > roots,
                                                   std::size_t cap = default_cap );

// Boolean configurations Most Permissive-reachable from `from`. Edge x -> y
// iff y is reached from x through non-Boolean states only (x != y); solid
// when y is a generalized asynchronous successor of x, dotted otherwise.
// The cap bounds the total number of Most Permissive states visited.
[[nodiscard]] Stg< BoolState > mp_boolean_projection( const BooleanNetwork& net, const BoolState& from,
                                                       std::size_t cap = default_cap );

} // namespace mpu
