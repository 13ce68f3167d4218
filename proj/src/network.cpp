#include "mpu/network.hpp"

#include "mpu/error.hpp"

#include <algorithm>

namespace mpu
{

Bdd to_bdd( const Expr& e, BddManager& manager, const std::function< Bdd::var_id( std::size_t ) >& var_of )
{
    switch ( e.kind() )
    {
    case Expr::Kind::constant: return manager.constant( e.value() );
    case Expr::Kind::variable: return manager.var( var_of( e.index() ) );
    case Expr::Kind::negation: return ~to_bdd( e.args()[ 0 ], manager, var_of );
    case Expr::Kind::conjunction:
        return to_bdd( e.args()[ 0 ], manager, var_of ) & to_bdd( e.args()[ 1 ], manager, var_of );
    case Expr::Kind::disjunction:
        return to_bdd( e.args()[ 0 ], manager, var_of ) | to_bdd( e.args()[ 1 ], manager, var_of );
    }
    return manager.constant( false );
}

Bdd to_bdd( const Expr& e, BddManager& manager )
{
    return to_bdd( e, manager, []( std::size_t k ) { return static_cast< Bdd::var_id >( k ); } );
}

Expr sum_of_products( const Bdd& f )
{
    if ( f.is_constant() )
        return Expr::constant( f.is_true() );
    std::optional< Expr > sum;
    for ( const auto& cube : f.cubes() )
    {
        std::optional< Expr > product;
        for ( const auto& [ v, positive ] : cube )
        {
            auto literal = positive ? Expr::variable( v ) : !Expr::variable( v );
            product = product ? ( std::move( *product ) & std::move( literal ) ) : std::move( literal );
        }
        sum = sum ? ( std::move( *sum ) | std::move( *product ) ) : std::move( *product );
    }
    return *sum;
}

void BooleanNetwork::index_names()
{
    for ( std::size_t j = 0; j < _names.size(); ++j )
        if ( !_index.emplace( _names[ j ], j ).second )
            throw Error( ErrorKind::invalid_argument, "duplicate component name '" + _names[ j ] + "'" );
}

BooleanNetwork::BooleanNetwork( std::vector< std::string > names, std::vector< Expr > rules )
        : _names{ std::move( names ) }, _rules{ std::move( rules ) }, _manager{ BddManager::create() }
{
    if ( _names.size() != _rules.size() )
        throw Error( ErrorKind::invalid_argument, "component and rule counts differ" );
    index_names();
    _functions.reserve( _rules.size() );
    for ( const auto& r : _rules )
    {
        std::set< std::size_t > vars;
        r.collect_variables( vars );
        if ( !vars.empty() && *vars.rbegin() >= _names.size() )
            throw Error( ErrorKind::invalid_argument, "rule refers to an undeclared component index" );
        _functions.push_back( to_bdd( r, *_manager ) );
    }
}

BooleanNetwork::BooleanNetwork( std::vector< std::string > names, std::vector< Bdd > functions )
        : _names{ std::move( names ) }, _functions{ std::move( functions ) }
{
    if ( _names.size() != _functions.size() )
        throw Error( ErrorKind::invalid_argument, "component and rule counts differ" );
    index_names();
    _manager = _functions.empty() ? BddManager::create() : _functions.front().manager();
    _rules.reserve( _functions.size() );
    for ( const auto& f : _functions )
    {
        if ( f.manager() != _manager )
            throw Error( ErrorKind::invalid_argument, "rule diagrams must share one manager" );
        for ( auto v : f.support() )
            if ( v >= _names.size() )
                throw Error( ErrorKind::invalid_argument, "rule depends on an undeclared component index" );
        _rules.push_back( sum_of_products( f ) );
    }
}

std::optional< std::size_t > BooleanNetwork::index_of( std::string_view name ) const
{
    if ( auto it = _index.find( std::string( name ) ); it != _index.end() )
        return it->second;
    return std::nullopt;
}

bool eval_rule( const BooleanNetwork& net, std::size_t j, const BoolState& s )
{
    if ( j >= net.size() )
        throw Error( ErrorKind::invalid_argument, "component index " + std::to_string( j ) + " out of range" );
    if ( s.size() != net.size() )
        throw Error( ErrorKind::invalid_argument, "state length " + std::to_string( s.size() ) +
                                                          " does not match network size " + std::to_string( net.size() ) );
    return net.rule( j ).eval( s );
}

const Bdd& build_function( const BooleanNetwork& net, std::size_t j )
{
    return net.function( j );
}

std::vector< std::size_t > support( const Bdd& f )
{
    const auto vars = f.support();
    return { vars.begin(), vars.end() };
}

bool same_functions( const BooleanNetwork& a, const BooleanNetwork& b )
{
    if ( a.names() != b.names() )
        return false;
    auto manager = BddManager::create();
    for ( std::size_t j = 0; j < a.size(); ++j )
        if ( to_bdd( a.rule( j ), *manager ) != to_bdd( b.rule( j ), *manager ) )
            return false;
    return true;
}

} // namespace mpu
