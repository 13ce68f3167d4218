#include "doctest.h"

#include "fixtures.hpp"

#include "mpu/bnet.hpp"
#include "mpu/dot.hpp"
#include "mpu/error.hpp"
#include "mpu/network.hpp"
#include "mpu/reggraph.hpp"

#include <random>

using namespace mpu;

namespace
{

Expr random_expr( std::mt19937& rng, std::size_t nvars, int depth )
{
    if ( depth == 0 || rng() % 4 == 0 )
    {
        if ( rng() % 16 == 0 )
            return Expr::constant( rng() % 2 );
        auto v = Expr::variable( rng() % nvars );
        return rng() % 2 ? v : !v;
    }
    auto l = random_expr( rng, nvars, depth - 1 );
    auto r = random_expr( rng, nvars, depth - 1 );
    auto e = rng() % 2 ? l & r : l | r;
    return rng() % 4 == 0 ? !e : e;
}

// Push every negation down to the literals.
Expr nnf( const Expr& e, bool negate = false )
{
    switch ( e.kind() )
    {
    case Expr::Kind::constant: return Expr::constant( e.value() != negate );
    case Expr::Kind::variable: return negate ? !e : e;
    case Expr::Kind::negation: return nnf( e.args()[ 0 ], !negate );
    case Expr::Kind::conjunction:
        return negate ? nnf( e.args()[ 0 ], true ) | nnf( e.args()[ 1 ], true )
                      : nnf( e.args()[ 0 ] ) & nnf( e.args()[ 1 ] );
    case Expr::Kind::disjunction:
        return negate ? nnf( e.args()[ 0 ], true ) & nnf( e.args()[ 1 ], true )
                      : nnf( e.args()[ 0 ] ) | nnf( e.args()[ 1 ] );
    }
    return e;
}

std::vector< bool > truth_table( const Expr& e, std::size_t nvars )
{
    std::vector< bool > out;
    for ( std::uint64_t code = 0; code < ( std::uint64_t{ 1 } << nvars ); ++code )
        out.push_back( e.eval( BoolState::from_index( code, nvars ) ) );
    return out;
}

} // namespace

TEST_CASE( "bool and mp state strings" )
{
    const auto s = BoolState::parse( "0110" );
    CHECK( s.size() == 4 );
    CHECK( s[ 1 ] );
    CHECK_FALSE( s[ 3 ] );
    CHECK( s.flipped( 0 ).to_string() == "1110" );
    CHECK( BoolState::from_index( s.index(), 4 ) == s );
    CHECK( BoolState::from_index( 1, 3 ).to_string() == "001" );
    CHECK( BoolState::parse( "011" ) < BoolState::parse( "100" ) );
    CHECK_THROWS_AS( (void)BoolState::parse( "01x" ), Error );

    const auto x = MPState::parse( "0id1" );
    CHECK( x[ 1 ] == Level::inc );
    CHECK_FALSE( x.is_boolean() );
    CHECK( x.to_string() == "0id1" );
    CHECK( MPState::parse( "101" ).to_bool().to_string() == "101" );
    CHECK( MPState::from_index( 1, 2 ).to_string() == "0i" );
    CHECK_THROWS_AS( (void)MPState::parse( "0x" ), Error );

    std::vector< std::string > all;
    for ( std::uint64_t code = 0; code < 64; ++code )
        all.push_back( MPState::from_index( code, 3 ).to_string() );
    CHECK( std::set< std::string >( all.begin(), all.end() ).size() == 64 );
}

TEST_CASE( "state patterns" )
{
    const auto p = StatePattern::parse( "*1i" );
    CHECK( p.matches( MPState::parse( "01i" ) ) );
    CHECK_FALSE( p.matches( MPState::parse( "01d" ) ) );
    CHECK_FALSE( p.matches( BoolState::parse( "011" ) ) );
    CHECK( StatePattern::parse( "**" ).matches( BoolState::parse( "10" ) ) );
    CHECK_THROWS_AS( (void)StatePattern::parse( "1?" ), Error );
}

TEST_CASE( "bdd basics" )
{
    auto m = BddManager::create();
    const auto x = m->var( 0 );
    const auto y = m->var( 1 );
    CHECK( ( x & ~x ).is_false() );
    CHECK( ( x | ~x ).is_true() );
    CHECK( ( x & y ) == ( y & x ) );
    CHECK( ( ~( x & y ) ) == ( ~x | ~y ) );
    CHECK( ( x ^ y ).node_count() == 5 );
    CHECK( ( x & y ).restrict( 0, true ) == y );
    CHECK( ( x & y ).exists( 1 ) == x );
    CHECK( ( x | ( y & ~y ) ).support() == std::vector< Bdd::var_id >{ 0 } );

    std::vector< std::string > solutions;
    ( x | y ).for_each_solution( 2, [ & ]( const std::vector< bool >& v ) {
        solutions.push_back( std::string{ v[ 0 ] ? '1' : '0', v[ 1 ] ? '1' : '0' } );
    } );
    CHECK( solutions == std::vector< std::string >{ "01", "10", "11" } );
    CHECK( *( x | y ).any_solution( 2 ) == std::vector< bool >{ false, true } );
    CHECK_FALSE( m->constant( false ).any_solution( 2 ) );
}

TEST_CASE( "canonicity: semantic equality iff diagram equality" )
{
    std::mt19937 rng( 42 );
    auto m = BddManager::create();
    for ( int round = 0; round < 300; ++round )
    {
        const std::size_t nvars = 1 + rng() % 12;
        const auto a = random_expr( rng, nvars, 4 );
        const auto b = rng() % 3 == 0 ? nnf( a ) : random_expr( rng, nvars, 4 );
        const bool same = truth_table( a, nvars ) == truth_table( b, nvars );
        CHECK( same == ( to_bdd( a, *m ) == to_bdd( b, *m ) ) );
    }
}

TEST_CASE( "eval_rule agrees with the diagram on every state" )
{
    for ( std::uint64_t seed = 1; seed <= 12; ++seed )
    {
        std::mt19937 rng( static_cast< unsigned >( seed ) );
        const std::size_t n = seed;
        std::vector< std::string > names;
        std::vector< Expr > rules;
        for ( std::size_t j = 0; j < n; ++j )
        {
            names.push_back( "v" + std::to_string( j ) );
            rules.push_back( random_expr( rng, n, 4 ) );
        }
        const BooleanNetwork net( names, rules );
        for ( std::uint64_t code = 0; code < ( std::uint64_t{ 1 } << n ); ++code )
        {
            const auto s = BoolState::from_index( code, n );
            for ( std::size_t j = 0; j < n; ++j )
                REQUIRE( eval_rule( net, j, s ) == build_function( net, j ).eval( s ) );
        }
    }
}

TEST_CASE( "parse Example A" )
{
    const auto net = fixtures::example_a();
    REQUIRE( net.size() == 3 );
    CHECK( net.names() == std::vector< std::string >{ "x1", "x2", "x3" } );
    CHECK( eval_rule( net, 0, BoolState::parse( "111" ) ) == false );
    CHECK( eval_rule( net, 2, BoolState::parse( "000" ) ) == true );
    CHECK( support( net.function( 0 ) ) == std::vector< std::size_t >{ 0, 2 } );
    CHECK( support( net.function( 1 ) ) == std::vector< std::size_t >{ 0 } );
    CHECK( net.function( 1 ) == net.manager()->var( 0 ) );

    const auto bare = parse_bnet( "x1, x1 & !x3\nx2, x1\nx3, !x1" );
    CHECK( same_functions( net, bare ) );
}

TEST_CASE( "parse variants" )
{
    const auto constant = parse_bnet( "a, 1" );
    CHECK( constant.size() == 1 );
    CHECK( constant.function( 0 ).is_true() );
    CHECK( support( constant.function( 0 ) ).empty() );
    CHECK( eval_rule( constant, 0, BoolState::parse( "0" ) ) );

    const auto signal = parse_bnet( "x1, signal\nx2, x1\nx3, !x1 & x2\nsignal, signal" );
    CHECK( signal.names() == std::vector< std::string >{ "x1", "x2", "x3", "signal" } );

    const auto commented = parse_bnet( "# header comment\n\nTARGETS, FACTORS\nb, (a | !b) & 1\na, !(a & b)\n" );
    CHECK( commented.names() == std::vector< std::string >{ "b", "a" } );
    CHECK( support( commented.function( 0 ) ) == std::vector< std::size_t >{ 0, 1 } );

    CHECK( parse_bnet( "a, a & !a" ).function( 0 ).is_false() );
    CHECK( support( parse_bnet( "x1, x1 | (x2 & !x2)\nx2, x2" ).function( 0 ) ) == std::vector< std::size_t >{ 0 } );
}

TEST_CASE( "parse errors" )
{
    auto kind_of = []( std::string_view text ) {
        try
        {
            (void)parse_bnet( text );
        }
        catch ( const Error& e )
        {
            return e.kind();
        }
        return ErrorKind::io;
    };
    CHECK( kind_of( "" ) == ErrorKind::empty_model );
    CHECK( kind_of( "# only a comment\n" ) == ErrorKind::empty_model );
    CHECK( kind_of( "a, b" ) == ErrorKind::undeclared_identifier );
    CHECK( kind_of( "a, a\na, !a" ) == ErrorKind::duplicate_target );
    CHECK( kind_of( "a, a &" ) == ErrorKind::syntax );
    CHECK( kind_of( "a a" ) == ErrorKind::syntax );
    CHECK( kind_of( "1a, 1" ) == ErrorKind::syntax );

    try
    {
        (void)parse_bnet( "a, a\nb, a & (c | b)" );
        FAIL( "expected a parse error" );
    }
    catch ( const ParseError& e )
    {
        CHECK( e.kind() == ErrorKind::undeclared_identifier );
        CHECK( e.line() == 2 );
        CHECK( e.column() == 9 );
    }
    CHECK_THROWS_AS( (void)load_bnet( "/nonexistent/model.bnet" ), Error );
}

TEST_CASE( "print_bnet" )
{
    CHECK( print_bnet( fixtures::example_a() ) == "targets, factors\nx1, x1 & !x3\nx2, x1\nx3, !x1\n" );
    CHECK( print_bnet( parse_bnet( "a, 0" ) ) == "targets, factors\na, 0\n" );
    CHECK( print_bnet( parse_bnet( "a, 1" ) ) == "targets, factors\na, 1\n" );
    CHECK( print_bnet( parse_bnet( "a, b | !a\nb, b" ) ) == "targets, factors\na, !a | a & b\nb, b\n" );
}

TEST_CASE( "round trip preserves every function" )
{
    std::mt19937 rng( 7 );
    for ( int round = 0; round < 40; ++round )
    {
        const std::size_t n = 1 + rng() % 8;
        std::vector< std::string > names;
        std::vector< Expr > rules;
        for ( std::size_t j = 0; j < n; ++j )
        {
            names.push_back( "g" + std::to_string( j ) );
            rules.push_back( random_expr( rng, n, 4 ) );
        }
        const BooleanNetwork net( names, rules );
        const auto text = print_bnet( net );
        const auto back = parse_bnet( text );
        CHECK( same_functions( net, back ) );
        CHECK( print_bnet( back ) == text );
    }
}

TEST_CASE( "network construction errors" )
{
    CHECK_THROWS_AS( BooleanNetwork( { "a", "a" }, std::vector< Expr >{ Expr::constant( true ), Expr::constant( false ) } ),
                     Error );
    CHECK_THROWS_AS( BooleanNetwork( { "a" }, std::vector< Expr >{ Expr::variable( 3 ) } ), Error );
    const auto net = fixtures::example_a();
    CHECK_THROWS_AS( (void)eval_rule( net, 3, BoolState::parse( "000" ) ), Error );
    CHECK_THROWS_AS( (void)eval_rule( net, 0, BoolState::parse( "00" ) ), Error );
}

TEST_CASE( "regulatory graph of Example A" )
{
    const auto g = infer_regulatory_graph( fixtures::example_a() );
    REQUIRE( g.edges.size() == 4 );
    CHECK( g.find( "x1", "x1" )->sign == Sign::positive );
    CHECK( g.find( "x3", "x1" )->sign == Sign::negative );
    CHECK( g.find( "x1", "x2" )->sign == Sign::positive );
    CHECK( g.find( "x1", "x3" )->sign == Sign::negative );
    CHECK( g.find( "x2", "x3" ) == nullptr );

    const auto dot = export_dot( g );
    CHECK( dot.find( "\"x3\" -> \"x1\" [color=red, arrowhead=tee]" ) != std::string::npos );
    CHECK( dot.find( "\"x1\" -> \"x2\" [color=green, arrowhead=normal]" ) != std::string::npos );
    CHECK( dot == export_dot( infer_regulatory_graph( fixtures::example_a() ) ) );
}

TEST_CASE( "regulatory graph edge cases" )
{
    CHECK( infer_regulatory_graph( parse_bnet( "a, 1\nb, 0" ) ).edges.empty() );

    const auto g = infer_regulatory_graph( parse_bnet( "a, a & !b | !a & b\nb, b" ) );
    CHECK( g.find( "a", "a" )->sign == Sign::dual );
    CHECK( g.find( "b", "a" )->sign == Sign::dual );
    CHECK( export_dot( g ).find( "color=blue" ) != std::string::npos );
}

TEST_CASE( "sign soundness: witnesses exhibit their direction" )
{
    std::mt19937 rng( 99 );
    for ( int round = 0; round < 30; ++round )
    {
        const std::size_t n = 2 + rng() % 5;
        std::vector< std::string > names;
        std::vector< Expr > rules;
        for ( std::size_t j = 0; j < n; ++j )
        {
            names.push_back( "r" + std::to_string( j ) );
            rules.push_back( random_expr( rng, n, 3 ) );
        }
        const BooleanNetwork net( names, rules );
        const auto g = infer_regulatory_graph( net );
        for ( const auto& e : g.edges )
        {
            CHECK( ( e.positive_witness || e.negative_witness ) );
            CHECK( ( e.sign == Sign::dual ) == ( e.positive_witness && e.negative_witness ) );
            if ( e.positive_witness )
            {
                CHECK_FALSE( ( *e.positive_witness )[ e.source ] );
                CHECK_FALSE( eval_rule( net, e.target, *e.positive_witness ) );
                CHECK( eval_rule( net, e.target, e.positive_witness->with( e.source, true ) ) );
            }
            if ( e.negative_witness )
            {
                CHECK( eval_rule( net, e.target, *e.negative_witness ) );
                CHECK_FALSE( eval_rule( net, e.target, e.negative_witness->with( e.source, true ) ) );
            }
        }
        // Absent edges really are absent.
        for ( std::size_t j = 0; j < n; ++j )
            for ( std::size_t k = 0; k < n; ++k )
            {
                const auto sup = support( net.function( j ) );
                const bool depends = std::find( sup.begin(), sup.end(), k ) != sup.end();
                CHECK( depends == ( g.find( k, j ) != nullptr ) );
            }
    }
}
