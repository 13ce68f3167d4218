#include "mpu/unfold.hpp"

#include "mpu/error.hpp"
#include "mpu/semantics.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace mpu
{

Triplet Triplet::parse( std::string_view bits )
{
    if ( bits.size() != 3 || bits.find_first_not_of( "01" ) != std::string_view::npos )
        throw Error( ErrorKind::invalid_argument, "invalid triplet '" + std::string( bits ) + "'" );
    return { bits[ 0 ] == '1', bits[ 1 ] == '1', bits[ 2 ] == '1' };
}

std::string Triplet::to_string() const
{
    return { a ? '1' : '0', b ? '1' : '0', c ? '1' : '0' };
}

Triplet encode_level( Level l )
{
    switch ( l )
    {
    case Level::zero: return { false, false, false };
    case Level::inc: return { false, false, true };
    case Level::dec: return { true, false, true };
    case Level::one: return { true, true, true };
    }
    return {};
}

std::optional< Level > decode_triplet( Triplet t )
{
    for ( auto l : all_levels )
        if ( encode_level( l ) == t )
            return l;
    return std::nullopt;
}

bool is_artifact( Triplet t )
{
    return t.b && !t.c;
}

bool is_valid_triplet( Triplet t )
{
    return !is_artifact( t );
}

Triplet triplet_step( Triplet own, bool plus, bool minus )
{
    const auto [ a, b, c ] = own;
    if ( !a && !b && !c )
        return { false, false, plus };
    if ( !a && !b && c )
        return { minus, true, true };
    if ( !a && b && !c )
        return { false, false, false };
    if ( !a && b && c )
        return { true, true, true };
    if ( a && !b && !c )
        return { false, false, false };
    if ( a && !b && c )
        return { !plus, false, false };
    if ( a && b && !c )
        return { true, true, true };
    return { true, !minus, true };
}

std::string_view to_string( Mode m )
{
    return m == Mode::exact ? "exact" : "syntactic";
}

Mode mode_from_string( std::string_view text )
{
    if ( text == "exact" )
        return Mode::exact;
    if ( text == "syntactic" )
        return Mode::syntactic;
    throw Error( ErrorKind::invalid_argument, "unknown mode '" + std::string( text ) + "': expected exact or syntactic" );
}

UnfoldSpec UnfoldSpec::full( const BooleanNetwork& net, Mode mode )
{
    return { std::vector< bool >( net.size(), true ), mode };
}

UnfoldSpec UnfoldSpec::none( const BooleanNetwork& net, Mode mode )
{
    return { std::vector< bool >( net.size(), false ), mode };
}

UnfoldSpec UnfoldSpec::of( const BooleanNetwork& net, std::span< const std::string > components, Mode mode )
{
    auto spec = none( net, mode );
    for ( const auto& name : components )
    {
        const auto k = net.index_of( name );
        if ( !k )
            throw Error( ErrorKind::invalid_argument, "unknown component '" + name + "'" );
        spec.selected[ *k ] = true;
    }
    return spec;
}

UnfoldLayout::UnfoldLayout( const BooleanNetwork& net, const std::vector< bool >& selected )
        : _unfolded{ selected }, _original_names{ net.names() }
{
    if ( selected.size() != net.size() )
        throw Error( ErrorKind::invalid_argument, "unfold selection does not match network size" );

    std::vector< std::string > collisions;
    _offset.reserve( net.size() );
    for ( std::size_t k = 0; k < net.size(); ++k )
    {
        _offset.push_back( _names.size() );
        if ( !_unfolded[ k ] )
        {
            _names.push_back( net.name( k ) );
            continue;
        }
        for ( const char* suffix : { "_a", "_b", "_c" } )
        {
            auto generated = net.name( k ) + suffix;
            if ( net.index_of( generated ) )
                collisions.push_back( generated );
            _names.push_back( std::move( generated ) );
        }
    }
    if ( !collisions.empty() )
    {
        std::string list;
        for ( const auto& c : collisions )
            list += ( list.empty() ? "" : ", " ) + c;
        throw Error( ErrorKind::name_collision, "unfolded names collide with existing components: " + list );
    }
}

namespace
{

Bdd::var_id as_var( std::size_t index )
{
    return static_cast< Bdd::var_id >( index );
}

// Reading "component k may be seen at 1".
Bdd allow_one( const UnfoldLayout& layout, std::size_t k, BddManager& out )
{
    return layout.unfolded( k ) ? out.var( as_var( layout.c( k ) ) ) : out.var( as_var( layout.offset( k ) ) );
}

// Reading "component k may be seen at 0".
Bdd allow_zero( const UnfoldLayout& layout, std::size_t k, BddManager& out )
{
    return layout.unfolded( k ) ? out.nvar( as_var( layout.b( k ) ) ) : out.nvar( as_var( layout.offset( k ) ) );
}

Bdd substitute( const Expr& e, bool negated, const UnfoldLayout& layout, BddManager& out )
{
    switch ( e.kind() )
    {
    case Expr::Kind::constant: return out.constant( e.value() != negated );
    case Expr::Kind::variable:
        return negated ? allow_zero( layout, e.index(), out ) : allow_one( layout, e.index(), out );
    case Expr::Kind::negation: return substitute( e.args()[ 0 ], !negated, layout, out );
    case Expr::Kind::conjunction:
    case Expr::Kind::disjunction:
    {
        auto lhs = substitute( e.args()[ 0 ], negated, layout, out );
        auto rhs = substitute( e.args()[ 1 ], negated, layout, out );
        const bool conj = ( e.kind() == Expr::Kind::conjunction ) != negated;
        return conj ? lhs & rhs : lhs | rhs;
    }
    }
    return out.constant( false );
}

// Conjunction of own-triplet literals, e.g. "0*1".
Bdd triplet_cube( const UnfoldLayout& layout, std::size_t k, std::string_view bits, BddManager& out )
{
    auto result = out.constant( true );
    for ( std::size_t i = 0; i < 3; ++i )
    {
        const auto v = as_var( layout.offset( k ) + i );
        if ( bits[ i ] == '1' )
            result &= out.var( v );
        else if ( bits[ i ] == '0' )
            result &= out.nvar( v );
    }
    return result;
}

} // namespace

Bdd exact_condition( const Bdd& f, std::span< const std::size_t > component_of_var, const UnfoldLayout& layout,
                     Polarity polarity, BddManager& out )
{
    const bool target = polarity == Polarity::plus;
    std::unordered_map< BddManager::node_id, Bdd > memo;
    std::function< Bdd( const Bdd& ) > transform = [ & ]( const Bdd& g ) -> Bdd {
        if ( g.is_constant() )
            return out.constant( g.is_true() == target );
        if ( auto it = memo.find( g.id() ); it != memo.end() )
            return it->second;
        const auto k = component_of_var[ g.var() ];
        auto result = ( allow_one( layout, k, out ) & transform( g.high() ) ) |
                      ( allow_zero( layout, k, out ) & transform( g.low() ) );
        memo.emplace( g.id(), result );
        return result;
    };
    return transform( f );
}

Bdd syntactic_condition( const Expr& f, const UnfoldLayout& layout, Polarity polarity, BddManager& out )
{
    return substitute( f, polarity == Polarity::minus, layout, out );
}

Bdd build_condition( const BooleanNetwork& net, std::size_t j, const UnfoldLayout& layout, Polarity polarity,
                     Mode mode, BddManager& out )
{
    if ( j >= net.size() )
        throw Error( ErrorKind::invalid_argument, "component index " + std::to_string( j ) + " out of range" );
    if ( mode == Mode::syntactic )
        return syntactic_condition( net.rule( j ), layout, polarity, out );
    std::vector< std::size_t > identity( net.size() );
    for ( std::size_t k = 0; k < identity.size(); ++k )
        identity[ k ] = k;
    return exact_condition( net.function( j ), identity, layout, polarity, out );
}

Unfolding unfold( const BooleanNetwork& net, const UnfoldSpec& spec )
{
    UnfoldLayout layout( net, spec.selected );
    auto out = BddManager::create();

    std::vector< Bdd > rules;
    rules.reserve( layout.size() );
    for ( std::size_t j = 0; j < net.size(); ++j )
    {
        const auto plus = build_condition( net, j, layout, Polarity::plus, spec.mode, *out );
        const auto minus = build_condition( net, j, layout, Polarity::minus, spec.mode, *out );

        if ( !layout.unfolded( j ) )
        {
            const auto x = out->var( as_var( layout.offset( j ) ) );
            rules.push_back( ( ~x & plus ) | ( x & ~minus ) );
            continue;
        }

        auto t = [ & ]( std::string_view bits ) { return triplet_cube( layout, j, bits, *out ); };
        rules.push_back( t( "011" ) | t( "110" ) | t( "111" ) | ( t( "001" ) & minus ) | ( t( "101" ) & ~plus ) );
        rules.push_back( t( "110" ) | t( "0*1" ) | ( t( "111" ) & ~minus ) );
        rules.push_back( t( "11*" ) | t( "0*1" ) | ( t( "000" ) & plus ) );
    }

    return { BooleanNetwork( layout.names(), std::move( rules ) ), std::move( layout ), spec.mode };
}

BoolState encode_state( const MPState& x, const UnfoldLayout& layout )
{
    if ( x.size() != layout.original_size() )
        throw Error( ErrorKind::invalid_argument, "state length does not match network size" );
    BoolState s( layout.size() );
    for ( std::size_t k = 0; k < x.size(); ++k )
    {
        if ( layout.unfolded( k ) )
        {
            const auto t = encode_level( x[ k ] );
            s.set( layout.a( k ), t.a );
            s.set( layout.b( k ), t.b );
            s.set( layout.c( k ), t.c );
        }
        else
        {
            if ( !is_boolean( x[ k ] ) )
                throw Error( ErrorKind::invalid_argument,
                             "component " + layout.original_name( k ) + " is not unfolded and must be at a Boolean level" );
            s.set( layout.offset( k ), x[ k ] == Level::one );
        }
    }
    return s;
}

Triplet triplet_of( const BoolState& s, const UnfoldLayout& layout, std::size_t k )
{
    return { s[ layout.a( k ) ], s[ layout.b( k ) ], s[ layout.c( k ) ] };
}

MPState decode_state( const BoolState& s, const UnfoldLayout& layout )
{
    if ( s.size() != layout.size() )
        throw Error( ErrorKind::invalid_argument, "state length does not match unfolded network size" );
    MPState x( layout.original_size() );
    for ( std::size_t k = 0; k < layout.original_size(); ++k )
    {
        if ( !layout.unfolded( k ) )
        {
            x.set( k, s[ layout.offset( k ) ] ? Level::one : Level::zero );
            continue;
        }
        const auto t = triplet_of( s, layout, k );
        const auto level = decode_triplet( t );
        if ( !level )
            throw Error( ErrorKind::non_level_triplet,
                         "component " + layout.original_name( k ) + " has non-level triplet " + t.to_string() );
        x.set( k, *level );
    }
    return x;
}

bool is_encoded( const BoolState& s, const UnfoldLayout& layout )
{
    for ( std::size_t k = 0; k < layout.original_size(); ++k )
        if ( layout.unfolded( k ) && !decode_triplet( triplet_of( s, layout, k ) ) )
            return false;
    return true;
}

bool is_valid( const BoolState& s, const UnfoldLayout& layout )
{
    for ( std::size_t k = 0; k < layout.original_size(); ++k )
        if ( layout.unfolded( k ) && is_artifact( triplet_of( s, layout, k ) ) )
            return false;
    return true;
}

StatePattern encode_pattern( const StatePattern& p, const UnfoldLayout& layout )
{
    if ( p.size() != layout.original_size() )
        throw Error( ErrorKind::invalid_argument, "pattern length does not match network size" );
    std::string text;
    for ( std::size_t k = 0; k < p.size(); ++k )
    {
        if ( !layout.unfolded( k ) )
        {
            if ( p[ k ] == 'i' || p[ k ] == 'd' )
                throw Error( ErrorKind::invalid_argument, "pattern level on a plain component must be 0, 1 or *" );
            text += p[ k ];
        }
        else if ( p[ k ] == '*' )
            text += "***";
        else
            text += encode_level( level_from_char( p[ k ] ) ).to_string();
    }
    return StatePattern::parse( text );
}

std::vector< BoolState > translate_trajectory( const BooleanNetwork& net, std::span< const MPState > path )
{
    std::vector< BoolState > out;
    if ( path.empty() )
        return out;
    const UnfoldLayout layout( net, std::vector< bool >( net.size(), true ) );
    out.push_back( encode_state( path[ 0 ], layout ) );
    for ( std::size_t step = 0; step + 1 < path.size(); ++step )
    {
        const auto& x = path[ step ];
        const auto& y = path[ step + 1 ];
        const auto successors = mp_successors( net, x );
        if ( std::find( successors.begin(), successors.end(), y ) == successors.end() )
            throw Error( ErrorKind::not_a_path, "no Most Permissive transition " + x.to_string() + " -> " + y.to_string() );

        std::size_t j = 0;
        while ( x[ j ] == y[ j ] )
            ++j;
        if ( x[ j ] == Level::inc && y[ j ] == Level::one )
        {
            auto mid = out.back();
            mid.set( layout.b( j ), true );
            out.push_back( std::move( mid ) );
        }
        else if ( x[ j ] == Level::dec && y[ j ] == Level::zero )
        {
            auto mid = out.back();
            mid.set( layout.c( j ), false );
            out.push_back( std::move( mid ) );
        }
        out.push_back( encode_state( y, layout ) );
    }
    return out;
}

} // namespace mpu
