#include "mpu/reach.hpp"

#include <algorithm>
#include <unordered_set>

namespace mpu
{

std::string_view to_string( Verdict v )
{
    switch ( v )
    {
    case Verdict::reachable: return "reachable";
    case Verdict::unreachable: return "unreachable";
    case Verdict::cap_exceeded: return "cap-exceeded";
    }
    return "unknown";
}

std::string_view to_string( Attractor::Kind k )
{
    return k == Attractor::Kind::stable_state ? "stable-state" : "complex";
}

std::vector< BoolState > successors( const BooleanNetwork& net, Semantics semantics, const BoolState& s )
{
    switch ( semantics )
    {
    case Semantics::sync:
    {
        auto next = sync_successor( net, s );
        if ( next == s )
            return {};
        return { std::move( next ) };
    }
    case Semantics::async: return async_successors( net, s );
    case Semantics::general: return general_successors( net, s );
    case Semantics::mp: break;
    }
    throw Error( ErrorKind::invalid_argument, "mp semantics works on Most Permissive states" );
}

Stg< BoolState > reachable_set( const BooleanNetwork& net, Semantics semantics, const BoolState& from, std::size_t cap )
{
    if ( from.size() != net.size() )
        throw Error( ErrorKind::invalid_argument, "state length does not match network size" );
    if ( semantics == Semantics::mp )
        throw Error( ErrorKind::invalid_argument, "mp exploration starts from a Most Permissive state" );
    return detail::explore(
            std::vector< BoolState >{ from },
            [ & ]( const BoolState& s ) { return successors( net, semantics, s ); }, cap,
            std::string( to_string( semantics ) ) );
}

Stg< MPState > reachable_set( const BooleanNetwork& net, const MPState& from, std::size_t cap )
{
    if ( from.size() != net.size() )
        throw Error( ErrorKind::invalid_argument, "state length does not match network size" );
    return detail::explore(
            std::vector< MPState >{ from }, [ & ]( const MPState& x ) { return mp_successors( net, x ); }, cap, "mp" );
}

ReachResult reaches( const BooleanNetwork& net, Semantics semantics, const BoolState& from, const StatePattern& to,
                     std::size_t cap )
{
    if ( from.size() != net.size() || to.size() != net.size() )
        throw Error( ErrorKind::invalid_argument, "state or pattern length does not match network size" );
    if ( semantics == Semantics::mp )
        return reaches( net, MPState( from ), to, cap );
    return detail::search(
            from, [ & ]( const BoolState& s ) { return successors( net, semantics, s ); },
            [ & ]( const BoolState& s ) { return to.matches( s ); }, cap );
}

ReachResult reaches( const BooleanNetwork& net, const MPState& from, const StatePattern& to, std::size_t cap )
{
    if ( from.size() != net.size() || to.size() != net.size() )
        throw Error( ErrorKind::invalid_argument, "state or pattern length does not match network size" );
    return detail::search(
            from, [ & ]( const MPState& x ) { return mp_successors( net, x ); },
            [ & ]( const MPState& x ) { return to.matches( x ); }, cap );
}

ReachResult reaches( const BooleanNetwork& net, Semantics semantics, std::string_view from, std::string_view to,
                     std::size_t cap )
{
    const auto target = StatePattern::parse( to );
    if ( semantics == Semantics::mp )
        return reaches( net, MPState::parse( from ), target, cap );
    return reaches( net, semantics, BoolState::parse( from ), target, cap );
}

std::vector< BoolState > fixed_points( const BooleanNetwork& net )
{
    auto& manager = *net.manager();
    auto stable = manager.constant( true );
    for ( std::size_t j = 0; j < net.size(); ++j )
        stable &= ~( net.function( j ) ^ manager.var( static_cast< Bdd::var_id >( j ) ) );

    std::vector< BoolState > out;
    stable.for_each_solution( net.size(), [ & ]( const std::vector< bool >& assignment ) {
        BoolState s( assignment.size() );
        for ( std::size_t i = 0; i < assignment.size(); ++i )
            s.set( i, assignment[ i ] );
        out.push_back( std::move( s ) );
    } );
    return out;
}

namespace
{

// Terminal strongly connected components via iterative Tarjan.
std::vector< std::vector< std::size_t > > terminal_sccs( std::size_t node_count,
                                                         const std::vector< std::vector< std::size_t > >& adjacency )
{
    constexpr auto unvisited = static_cast< std::size_t >( -1 );
    std::vector< std::size_t > index( node_count, unvisited );
    std::vector< std::size_t > low( node_count, 0 );
    std::vector< bool > on_stack( node_count, false );
    std::vector< std::size_t > component( node_count, unvisited );
    std::vector< std::size_t > stack;
    std::vector< std::vector< std::size_t > > sccs;
    std::size_t counter = 0;

    struct frame
    {
        std::size_t node;
        std::size_t next_edge;
    };

    for ( std::size_t root = 0; root < node_count; ++root )
    {
        if ( index[ root ] != unvisited )
            continue;
        std::vector< frame > call{ { root, 0 } };
        index[ root ] = low[ root ] = counter++;
        stack.push_back( root );
        on_stack[ root ] = true;

        while ( !call.empty() )
        {
            auto& top = call.back();
            const auto v = top.node;
            if ( top.next_edge < adjacency[ v ].size() )
            {
                const auto w = adjacency[ v ][ top.next_edge++ ];
                if ( index[ w ] == unvisited )
                {
                    index[ w ] = low[ w ] = counter++;
                    stack.push_back( w );
                    on_stack[ w ] = true;
                    call.push_back( { w, 0 } );
                }
                else if ( on_stack[ w ] )
                    low[ v ] = std::min( low[ v ], index[ w ] );
                continue;
            }

            if ( low[ v ] == index[ v ] )
            {
                std::vector< std::size_t > members;
                std::size_t w;
                do
                {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[ w ] = false;
                    component[ w ] = sccs.size();
                    members.push_back( w );
                } while ( w != v );
                sccs.push_back( std::move( members ) );
            }
            call.pop_back();
            if ( !call.empty() )
            {
                const auto parent = call.back().node;
                low[ parent ] = std::min( low[ parent ], low[ v ] );
            }
        }
    }

    std::vector< std::vector< std::size_t > > terminal;
    for ( std::size_t c = 0; c < sccs.size(); ++c )
    {
        bool leaves = false;
        for ( auto v : sccs[ c ] )
            for ( auto w : adjacency[ v ] )
                leaves = leaves || component[ w ] != c;
        if ( !leaves )
            terminal.push_back( sccs[ c ] );
    }
    return terminal;
}

std::vector< Attractor > attractors_of( const Stg< BoolState >& g )
{
    std::vector< std::vector< std::size_t > > adjacency( g.nodes.size() );
    for ( const auto& e : g.edges )
        adjacency[ e.from ].push_back( e.to );

    std::vector< Attractor > out;
    for ( const auto& members : terminal_sccs( g.nodes.size(), adjacency ) )
    {
        Attractor a;
        a.kind = members.size() == 1 ? Attractor::Kind::stable_state : Attractor::Kind::complex;
        for ( auto m : members )
            a.states.push_back( g.nodes[ m ] );
        std::sort( a.states.begin(), a.states.end() );
        out.push_back( std::move( a ) );
    }
    std::sort( out.begin(), out.end(), []( const Attractor& lhs, const Attractor& rhs ) {
        if ( lhs.kind != rhs.kind )
            return lhs.kind == Attractor::Kind::stable_state;
        return lhs.states.front() < rhs.states.front();
    } );
    return out;
}

} // namespace

std::vector< Attractor > attractors( const BooleanNetwork& net, Semantics semantics, std::span< const BoolState > roots,
                                     std::size_t cap )
{
    if ( semantics == Semantics::mp )
        throw Error( ErrorKind::invalid_argument, "attractors are computed for sync, async or general semantics" );
    for ( const auto& r : roots )
        if ( r.size() != net.size() )
            throw Error( ErrorKind::invalid_argument, "state length does not match network size" );
    const auto g = detail::explore(
            std::vector< BoolState >( roots.begin(), roots.end() ),
            [ & ]( const BoolState& s ) { return successors( net, semantics, s ); }, cap,
            std::string( to_string( semantics ) ) );
    if ( g.cap_exceeded )
        throw Error( ErrorKind::cap_exceeded,
                     "state space exceeds the cap of " + std::to_string( cap ) + " states" );
    return attractors_of( g );
}

std::vector< Attractor > attractors( const BooleanNetwork& net, Semantics semantics, std::size_t cap )
{
    detail::check_cap( cap );
    if ( net.size() >= 63 || ( std::uint64_t{ 1 } << net.size() ) > cap )
        throw Error( ErrorKind::cap_exceeded, "state space of 2^" + std::to_string( net.size() ) +
                                                      " states exceeds the cap of " + std::to_string( cap ) );
    std::vector< BoolState > all;
    const std::uint64_t count = std::uint64_t{ 1 } << net.size();
    all.reserve( count );
    for ( std::uint64_t code = 0; code < count; ++code )
        all.push_back( BoolState::from_index( code, net.size() ) );
    return attractors( net, semantics, all, cap );
}

Stg< BoolState > mp_boolean_projection( const BooleanNetwork& net, const BoolState& from, std::size_t cap )
{
    detail::check_cap( cap );
    if ( from.size() != net.size() )
        throw Error( ErrorKind::invalid_argument, "state length does not match network size" );

    Stg< BoolState > g;
    g.semantics = "mp-boolean-projection";
    g.cap = cap;
    g.roots = { from };
    g.nodes = { from };
    std::unordered_map< BoolState, std::size_t > index{ { from, 0 } };
    std::size_t visited = 1;

    for ( std::size_t i = 0; i < g.nodes.size(); ++i )
    {
        const auto source = g.nodes[ i ];
        const auto classical = general_successors( net, source );

        // Inner search over non-Boolean states only; Boolean states are
        // recorded as edge targets and not expanded.
        std::vector< MPState > frontier{ MPState( source ) };
        std::unordered_set< MPState > seen{ frontier.front() };
        std::vector< BoolState > targets;
        for ( std::size_t k = 0; k < frontier.size(); ++k )
        {
            for ( auto& y : mp_successors( net, frontier[ k ] ) )
            {
                if ( !seen.insert( y ).second )
                    continue;
                if ( ++visited > cap )
                {
                    g.cap_exceeded = true;
                    return g;
                }
                if ( y.is_boolean() )
                    targets.push_back( y.to_bool() );
                else
                    frontier.push_back( std::move( y ) );
            }
        }

        std::sort( targets.begin(), targets.end() );
        for ( const auto& t : targets )
        {
            if ( t == source )
                continue;
            std::size_t to;
            if ( auto it = index.find( t ); it != index.end() )
                to = it->second;
            else
            {
                to = g.nodes.size();
                index.emplace( t, to );
                g.nodes.push_back( t );
            }
            const bool solid = std::find( classical.begin(), classical.end(), t ) != classical.end();
            g.edges.push_back( { i, to, solid ? EdgeStyle::solid : EdgeStyle::dotted } );
        }
    }
    return g;
}

} // namespace mpu
