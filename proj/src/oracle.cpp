#include "mpu/oracle.hpp"

#include "mpu/error.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_map>

namespace mpu::oracle
{

namespace
{

// Whether some completion of x (free coordinates at i/d) gives f_j = value.
bool some_completion_gives( const BooleanNetwork& net, std::size_t j, const MPState& x, bool value )
{
    std::vector< std::size_t > free;
    BoolState base( x.size() );
    for ( std::size_t k = 0; k < x.size(); ++k )
    {
        if ( is_boolean( x[ k ] ) )
            base.set( k, x[ k ] == Level::one );
        else
            free.push_back( k );
    }
    const std::uint64_t completions = std::uint64_t{ 1 } << free.size();
    for ( std::uint64_t bits = 0; bits < completions; ++bits )
    {
        auto s = base;
        for ( std::size_t i = 0; i < free.size(); ++i )
            s.set( free[ i ], ( bits >> i ) & 1u );
        if ( eval_rule( net, j, s ) == value )
            return true;
    }
    return false;
}

template < class State, class Successors >
std::unordered_map< State, std::size_t > bfs( const State& from, Successors&& successors,
                                              std::vector< State >& order, std::vector< std::size_t >& parent )
{
    order.assign( { from } );
    parent.assign( { 0 } );
    std::unordered_map< State, std::size_t > index{ { from, 0 } };
    for ( std::size_t i = 0; i < order.size(); ++i )
    {
        for ( auto& t : successors( order[ i ] ) )
        {
            if ( index.contains( t ) )
                continue;
            index.emplace( t, order.size() );
            order.push_back( std::move( t ) );
            parent.push_back( i );
        }
    }
    return index;
}

template < class State >
std::vector< std::string > path_to( std::size_t target, const std::vector< State >& order,
                                    const std::vector< std::size_t >& parent )
{
    std::vector< std::string > path;
    for ( auto i = target;; i = parent[ i ] )
    {
        path.push_back( order[ i ].to_string() );
        if ( i == 0 )
            break;
    }
    return { path.rbegin(), path.rend() };
}

std::vector< BoolState > naive_async( const BooleanNetwork& net, const BoolState& s )
{
    std::vector< BoolState > out;
    for ( std::size_t j = 0; j < net.size(); ++j )
        if ( eval_rule( net, j, s ) != s[ j ] )
            out.push_back( s.flipped( j ) );
    return out;
}

Expr random_rule( std::mt19937_64& rng, const std::vector< std::size_t >& regulators, std::size_t depth )
{
    auto draw = [ & ]( std::uint64_t bound ) { return rng() % bound; };
    if ( depth == 0 || draw( 3 ) == 0 )
    {
        auto v = Expr::variable( regulators[ draw( regulators.size() ) ] );
        return draw( 2 ) == 0 ? v : !v;
    }
    auto lhs = random_rule( rng, regulators, depth - 1 );
    auto rhs = random_rule( rng, regulators, depth - 1 );
    auto e = draw( 2 ) == 0 ? std::move( lhs ) & std::move( rhs ) : std::move( lhs ) | std::move( rhs );
    return draw( 5 ) == 0 ? !std::move( e ) : e;
}

bool is_constant_rule( const Expr& e, std::size_t n )
{
    std::set< std::size_t > vars;
    e.collect_variables( vars );
    const std::vector< std::size_t > used( vars.begin(), vars.end() );
    BoolState s( n );
    std::optional< bool > first;
    for ( std::uint64_t bits = 0; bits < ( std::uint64_t{ 1 } << used.size() ); ++bits )
    {
        for ( std::size_t i = 0; i < used.size(); ++i )
            s.set( used[ i ], ( bits >> i ) & 1u );
        const bool v = e.eval( s );
        if ( first && *first != v )
            return false;
        first = v;
    }
    return true;
}

} // namespace

std::set< MPState > naive_mp_successors( const BooleanNetwork& net, const MPState& x )
{
    if ( net.size() > max_naive_size )
        throw Error( ErrorKind::size_limit, "naive Most Permissive successors are limited to " +
                                                    std::to_string( max_naive_size ) + " components" );
    if ( x.size() != net.size() )
        throw Error( ErrorKind::invalid_argument, "state length does not match network size" );

    std::set< MPState > out;
    for ( std::size_t j = 0; j < net.size(); ++j )
    {
        switch ( x[ j ] )
        {
        case Level::zero:
            if ( some_completion_gives( net, j, x, true ) )
                out.insert( x.with( j, Level::inc ) );
            break;
        case Level::one:
            if ( some_completion_gives( net, j, x, false ) )
                out.insert( x.with( j, Level::dec ) );
            break;
        case Level::inc:
            out.insert( x.with( j, Level::one ) );
            if ( some_completion_gives( net, j, x, false ) )
                out.insert( x.with( j, Level::dec ) );
            break;
        case Level::dec:
            out.insert( x.with( j, Level::zero ) );
            if ( some_completion_gives( net, j, x, true ) )
                out.insert( x.with( j, Level::inc ) );
            break;
        }
    }
    return out;
}

BooleanNetwork random_network( const RandomNetSpec& spec )
{
    if ( spec.n == 0 )
        throw Error( ErrorKind::invalid_argument, "random networks need at least one component" );
    std::mt19937_64 rng( spec.seed );
    const auto max_regs = std::max< std::size_t >( 1, std::min( spec.max_regulators, spec.n ) );

    std::vector< std::string > names;
    std::vector< Expr > rules;
    for ( std::size_t j = 0; j < spec.n; ++j )
    {
        names.push_back( "x" + std::to_string( j + 1 ) );

        std::vector< std::size_t > pool( spec.n );
        for ( std::size_t k = 0; k < spec.n; ++k )
            pool[ k ] = k;
        const auto count = 1 + rng() % max_regs;
        for ( std::size_t i = 0; i < count; ++i )
            std::swap( pool[ i ], pool[ i + rng() % ( spec.n - i ) ] );
        pool.resize( count );
        std::sort( pool.begin(), pool.end() );
        rules.push_back( random_rule( rng, pool, spec.depth ) );
    }

    const bool all_constant = std::all_of( rules.begin(), rules.end(),
                                           [ & ]( const Expr& r ) { return is_constant_rule( r, spec.n ); } );
    if ( all_constant )
        rules[ 0 ] = Expr::variable( rng() % spec.n );
    return BooleanNetwork( std::move( names ), std::move( rules ) );
}

EquivalenceReport check_equivalence( const BooleanNetwork& net, Mode mode, std::string id, bool all_levels )
{
    if ( net.size() > max_equivalence_size )
        throw Error( ErrorKind::size_limit, "equivalence checks are limited to " +
                                                    std::to_string( max_equivalence_size ) + " components" );

    EquivalenceReport report;
    report.network = std::move( id );
    report.mode = mode;
    report.all_levels = all_levels;

    const auto n = net.size();
    const auto unfolding = unfold( net, UnfoldSpec::full( net, mode ) );
    const auto& extended = unfolding.network;

    std::vector< MPState > endpoints;
    if ( all_levels )
        for ( std::uint64_t code = 0; code < ( std::uint64_t{ 1 } << ( 2 * n ) ); ++code )
            endpoints.push_back( MPState::from_index( code, n ) );
    else
        for ( std::uint64_t code = 0; code < ( std::uint64_t{ 1 } << n ); ++code )
            endpoints.push_back( MPState( BoolState::from_index( code, n ) ) );

    for ( const auto& x : endpoints )
    {
        std::vector< MPState > mp_order;
        std::vector< std::size_t > mp_parent;
        const auto mp_index = bfs(
                x,
                [ & ]( const MPState& s ) {
                    const auto next = naive_mp_successors( net, s );
                    return std::vector< MPState >( next.begin(), next.end() );
                },
                mp_order, mp_parent );

        std::vector< BoolState > ext_order;
        std::vector< std::size_t > ext_parent;
        const auto ext_index = bfs(
                encode_state( x, unfolding.layout ), [ & ]( const BoolState& s ) { return naive_async( extended, s ); },
                ext_order, ext_parent );

        std::unordered_map< BoolState, std::size_t > async_index;
        if ( x.is_boolean() )
        {
            std::vector< BoolState > order;
            std::vector< std::size_t > parent;
            async_index = bfs( x.to_bool(), [ & ]( const BoolState& s ) { return naive_async( net, s ); }, order,
                               parent );
        }

        for ( const auto& y : endpoints )
        {
            ++report.pairs_checked;
            const auto mp_hit = mp_index.find( y );
            const auto ext_hit = ext_index.find( encode_state( y, unfolding.layout ) );
            const bool mp_reach = mp_hit != mp_index.end();
            const bool ext_reach = ext_hit != ext_index.end();
            if ( mp_reach != ext_reach )
            {
                report.mismatches.push_back(
                        { x.to_string(), y.to_string(), mp_reach, ext_reach,
                          mp_reach ? path_to( mp_hit->second, mp_order, mp_parent )
                                   : path_to( ext_hit->second, ext_order, ext_parent ) } );
            }
            if ( x.is_boolean() && y.is_boolean() && async_index.contains( y.to_bool() ) && !mp_reach )
                report.subsumption_violations.emplace_back( x.to_string(), y.to_string() );
        }
    }
    return report;
}

} // namespace mpu::oracle
