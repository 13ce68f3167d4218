#include "mpu/bdd.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace mpu
{

std::size_t BddManager::triple_hash::operator()( const triple& t ) const noexcept
{
    std::uint64_t h = std::get< 0 >( t );
    h = h * 0x9e3779b97f4a7c15ULL + std::get< 1 >( t );
    h = h * 0x9e3779b97f4a7c15ULL + std::get< 2 >( t );
    return static_cast< std::size_t >( h ^ ( h >> 29 ) );
}

BddManager::BddManager()
{
    _nodes.push_back( { terminal_var, false_node, false_node } );
    _nodes.push_back( { terminal_var, true_node, true_node } );
}

std::shared_ptr< BddManager > BddManager::create()
{
    return std::shared_ptr< BddManager >( new BddManager() );
}

Bdd BddManager::constant( bool value )
{
    return { shared_from_this(), value ? true_node : false_node };
}

Bdd BddManager::var( var_id v )
{
    return { shared_from_this(), make( v, false_node, true_node ) };
}

Bdd BddManager::nvar( var_id v )
{
    return { shared_from_this(), make( v, true_node, false_node ) };
}

Bdd BddManager::ite( var_id v, const Bdd& high, const Bdd& low )
{
    return ( var( v ) & high ) | ( nvar( v ) & low );
}

BddManager::node_id BddManager::make( var_id v, node_id low, node_id high )
{
    if ( low == high )
        return low;
    assert( v < _nodes[ low ].var && v < _nodes[ high ].var );
    const triple key{ v, low, high };
    if ( auto it = _unique.find( key ); it != _unique.end() )
        return it->second;
    const auto id = static_cast< node_id >( _nodes.size() );
    _nodes.push_back( { v, low, high } );
    _unique.emplace( key, id );
    return id;
}

BddManager::node_id BddManager::negate( node_id a )
{
    if ( a <= true_node )
        return a ^ 1u;
    if ( auto it = _negate_cache.find( a ); it != _negate_cache.end() )
        return it->second;
    const auto n = _nodes[ a ];
    const auto low = negate( n.low );
    const auto high = negate( n.high );
    const auto result = make( n.var, low, high );
    _negate_cache.emplace( a, result );
    return result;
}

BddManager::node_id BddManager::apply( op o, node_id a, node_id b )
{
    switch ( o )
    {
    case op::conj:
        if ( a == false_node || b == false_node )
            return false_node;
        if ( a == true_node || a == b )
            return b;
        if ( b == true_node )
            return a;
        break;
    case op::disj:
        if ( a == true_node || b == true_node )
            return true_node;
        if ( a == false_node || a == b )
            return b;
        if ( b == false_node )
            return a;
        break;
    case op::exclusive:
        if ( a == b )
            return false_node;
        if ( a == false_node )
            return b;
        if ( b == false_node )
            return a;
        if ( a == true_node )
            return negate( b );
        if ( b == true_node )
            return negate( a );
        break;
    }

    if ( a > b )
        std::swap( a, b );
    const triple key{ static_cast< std::uint32_t >( o ), a, b };
    if ( auto it = _apply_cache.find( key ); it != _apply_cache.end() )
        return it->second;

    const auto na = _nodes[ a ];
    const auto nb = _nodes[ b ];
    const auto v = std::min( na.var, nb.var );
    const auto a_low = na.var == v ? na.low : a;
    const auto a_high = na.var == v ? na.high : a;
    const auto b_low = nb.var == v ? nb.low : b;
    const auto b_high = nb.var == v ? nb.high : b;

    const auto low = apply( o, a_low, b_low );
    const auto high = apply( o, a_high, b_high );
    const auto result = make( v, low, high );
    _apply_cache.emplace( key, result );
    return result;
}

BddManager::node_id BddManager::restrict( node_id a, var_id v, bool value )
{
    std::unordered_map< node_id, node_id > memo;
    std::function< node_id( node_id ) > go = [ & ]( node_id id ) -> node_id {
        const auto n = _nodes[ id ];
        if ( n.var > v )
            return id;
        if ( n.var == v )
            return value ? n.high : n.low;
        if ( auto it = memo.find( id ); it != memo.end() )
            return it->second;
        const auto low = go( n.low );
        const auto high = go( n.high );
        const auto result = make( n.var, low, high );
        memo.emplace( id, result );
        return result;
    };
    return go( a );
}

BddManager::node_id BddManager::exists( node_id a, var_id v )
{
    return apply( op::disj, restrict( a, v, false ), restrict( a, v, true ) );
}

Bdd operator&( const Bdd& a, const Bdd& b )
{
    assert( a._manager == b._manager );
    return { a._manager, a._manager->apply( BddManager::op::conj, a._id, b._id ) };
}

Bdd operator|( const Bdd& a, const Bdd& b )
{
    assert( a._manager == b._manager );
    return { a._manager, a._manager->apply( BddManager::op::disj, a._id, b._id ) };
}

Bdd operator^( const Bdd& a, const Bdd& b )
{
    assert( a._manager == b._manager );
    return { a._manager, a._manager->apply( BddManager::op::exclusive, a._id, b._id ) };
}

Bdd operator~( const Bdd& a )
{
    return { a._manager, a._manager->negate( a._id ) };
}

std::vector< Bdd::var_id > Bdd::support() const
{
    std::set< var_id > vars;
    std::unordered_set< BddManager::node_id > seen;
    std::vector< BddManager::node_id > stack{ _id };
    while ( !stack.empty() )
    {
        const auto id = stack.back();
        stack.pop_back();
        if ( id <= BddManager::true_node || !seen.insert( id ).second )
            continue;
        const auto& n = _manager->at( id );
        vars.insert( n.var );
        stack.push_back( n.low );
        stack.push_back( n.high );
    }
    return { vars.begin(), vars.end() };
}

std::vector< Bdd::cube > Bdd::cubes() const
{
    std::vector< cube > out;
    cube path;
    std::function< void( BddManager::node_id ) > walk = [ & ]( BddManager::node_id id ) {
        if ( id == BddManager::false_node )
            return;
        if ( id == BddManager::true_node )
        {
            out.push_back( path );
            return;
        }
        const auto n = _manager->at( id );
        path.emplace_back( n.var, false );
        walk( n.low );
        path.back().second = true;
        walk( n.high );
        path.pop_back();
    };
    walk( _id );
    return out;
}

void Bdd::for_each_solution( std::size_t nvars, const std::function< void( const std::vector< bool >& ) >& visit ) const
{
    std::vector< bool > assignment( nvars, false );
    std::function< void( std::size_t, BddManager::node_id ) > walk = [ & ]( std::size_t v, BddManager::node_id id ) {
        if ( id == BddManager::false_node )
            return;
        if ( v == nvars )
        {
            if ( id == BddManager::true_node )
                visit( assignment );
            return;
        }
        const auto& n = _manager->at( id );
        const bool tested = n.var == v;
        assignment[ v ] = false;
        walk( v + 1, tested ? n.low : id );
        assignment[ v ] = true;
        walk( v + 1, tested ? n.high : id );
        assignment[ v ] = false;
    };
    walk( 0, _id );
}

std::optional< std::vector< bool > > Bdd::any_solution( std::size_t nvars ) const
{
    if ( is_false() )
        return std::nullopt;
    std::vector< bool > assignment( nvars, false );
    auto id = _id;
    // Prefer the low branch whenever it is satisfiable; reduced diagrams
    // have no false-only non-terminal nodes.
    while ( id > BddManager::true_node )
    {
        const auto& n = _manager->at( id );
        if ( n.low != BddManager::false_node )
            id = n.low;
        else
        {
            assignment[ n.var ] = true;
            id = n.high;
        }
    }
    return assignment;
}

std::size_t Bdd::node_count() const
{
    std::unordered_set< BddManager::node_id > seen;
    std::vector< BddManager::node_id > stack{ _id };
    while ( !stack.empty() )
    {
        const auto id = stack.back();
        stack.pop_back();
        if ( !seen.insert( id ).second || id <= BddManager::true_node )
            continue;
        stack.push_back( _manager->at( id ).low );
        stack.push_back( _manager->at( id ).high );
    }
    return seen.size();
}

} // namespace mpu
