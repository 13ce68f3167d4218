// Command-line front end: analyses print JSON on stdout (DOT with
// --format dot); errors print a JSON record on stderr.
//
// Exit status: 0 success, 1 reach verdict "unreachable" or failed verify,
// 2 usage or input error, 3 cap exceeded.

#include "CLI11.hpp"

#include "mpu/bnet.hpp"
#include "mpu/dot.hpp"
#include "mpu/json_io.hpp"
#include "mpu/oracle.hpp"
#include "mpu/reach.hpp"
#include "mpu/reggraph.hpp"
#include "mpu/semantics.hpp"
#include "mpu/unfold.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;

struct options
{
    bool pretty = false;
    std::string model;
    std::string state;
    std::string from;
    std::string to;
    std::string semantics = "async";
    std::string mode = "exact";
    std::string format = "json";
    std::string output;
    std::vector< std::string > components;
    std::optional< std::size_t > cap;
    bool project_boolean = false;
    std::size_t seeds = 0;
    std::size_t random_n = 3;
};

std::size_t effective_cap( const options& opt )
{
    if ( opt.cap )
        return *opt.cap;
    if ( const char* env = std::getenv( "MPU_CAP" ) )
    {
        try
        {
            std::size_t used = 0;
            const auto value = std::stoull( env, &used );
            if ( used == std::string_view( env ).size() && value > 0 )
                return value;
        }
        catch ( const std::exception& )
        {
        }
        throw mpu::Error( mpu::ErrorKind::invalid_argument, "MPU_CAP must be a positive integer" );
    }
    return mpu::default_cap;
}

void write_output( const options& opt, const std::string& text )
{
    if ( opt.output.empty() || opt.output == "-" )
    {
        std::cout << text;
        return;
    }
    std::ofstream out( opt.output, std::ios::binary );
    if ( !out || !( out << text ) )
        throw mpu::Error( mpu::ErrorKind::io, "cannot write '" + opt.output + "'" );
}

void print_json( const options& opt, const mpu::json& j )
{
    std::cout << ( opt.pretty ? j.dump( 2 ) : j.dump() ) << '\n';
}

void print_states( const options& opt, const mpu::json& list )
{
    if ( !opt.pretty )
    {
        print_json( opt, list );
        return;
    }
    for ( const auto& s : list )
        std::cout << s.get< std::string >() << '\n';
}

int cmd_show( const options& opt )
{
    const auto net = mpu::load_bnet( opt.model );
    if ( opt.pretty )
    {
        for ( std::size_t j = 0; j < net.size(); ++j )
            std::cout << net.name( j ) << " = " << mpu::to_string( net.rule( j ), net.names() ) << '\n';
        return exit_ok;
    }
    print_json( opt, mpu::to_json( net ) );
    return exit_ok;
}

int cmd_fixpoints( const options& opt )
{
    const auto net = mpu::load_bnet( opt.model );
    print_states( opt, mpu::state_list( mpu::fixed_points( net ) ) );
    return exit_ok;
}

int cmd_succ( const options& opt )
{
    const auto net = mpu::load_bnet( opt.model );
    const auto semantics = mpu::semantics_from_string( opt.semantics );
    if ( semantics == mpu::Semantics::mp )
    {
        print_states( opt, mpu::state_list( mpu::mp_successors( net, mpu::MPState::parse( opt.state ) ) ) );
        return exit_ok;
    }
    const auto s = mpu::BoolState::parse( opt.state );
    if ( semantics == mpu::Semantics::sync )
        print_states( opt, mpu::state_list( std::vector{ mpu::sync_successor( net, s ) } ) );
    else
        print_states( opt, mpu::state_list( mpu::successors( net, semantics, s ) ) );
    return exit_ok;
}

int cmd_unfold( const options& opt )
{
    const auto net = mpu::load_bnet( opt.model );
    const auto mode = mpu::mode_from_string( opt.mode );
    const auto spec = opt.components.empty() ? mpu::UnfoldSpec::full( net, mode )
                                             : mpu::UnfoldSpec::of( net, opt.components, mode );
    const auto result = mpu::unfold( net, spec );
    const auto text = mpu::print_bnet( result.network );
    if ( opt.output.empty() || opt.output == "-" )
    {
        std::cout << text;
        return exit_ok;
    }
    write_output( opt, text );
    mpu::json unfolded = mpu::json::array();
    for ( std::size_t k = 0; k < net.size(); ++k )
        if ( result.layout.unfolded( k ) )
            unfolded.push_back( net.name( k ) );
    print_json( opt, { { "output", opt.output },
                       { "mode", mpu::to_string( mode ) },
                       { "unfolded", std::move( unfolded ) },
                       { "components", result.network.size() } } );
    return exit_ok;
}

int cmd_reach( const options& opt )
{
    const auto net = mpu::load_bnet( opt.model );
    const auto semantics = mpu::semantics_from_string( opt.semantics );
    const auto result = mpu::reaches( net, semantics, opt.from, opt.to, effective_cap( opt ) );
    if ( opt.pretty )
    {
        std::cout << "verdict:  " << mpu::to_string( result.verdict ) << '\n'
                  << "explored: " << result.explored << '\n';
        for ( std::size_t i = 0; i < result.witness.size(); ++i )
            std::cout << ( i == 0 ? "witness:  " : "       -> " ) << result.witness[ i ] << '\n';
    }
    else
        print_json( opt, mpu::to_json( result ) );
    switch ( result.verdict )
    {
    case mpu::Verdict::reachable: return exit_ok;
    case mpu::Verdict::unreachable: return exit_negative;
    case mpu::Verdict::cap_exceeded: return exit_cap;
    }
    return exit_ok;
}

template < class State >
int emit_stg( const options& opt, const mpu::Stg< State >& g )
{
    if ( opt.format == "dot" )
        write_output( opt, mpu::export_dot( g ) );
    else
        write_output( opt, ( opt.pretty ? mpu::to_json( g ).dump( 2 ) : mpu::to_json( g ).dump() ) + "\n" );
    return g.cap_exceeded ? exit_cap : exit_ok;
}

int cmd_stg( const options& opt )
{
    const auto net = mpu::load_bnet( opt.model );
    const auto semantics = mpu::semantics_from_string( opt.semantics );
    const auto cap = effective_cap( opt );
    if ( opt.project_boolean )
    {
        if ( semantics != mpu::Semantics::mp )
            throw mpu::Error( mpu::ErrorKind::invalid_argument, "--project-boolean requires --semantics mp" );
        return emit_stg( opt, mpu::mp_boolean_projection( net, mpu::BoolState::parse( opt.from ), cap ) );
    }
    if ( semantics == mpu::Semantics::mp )
        return emit_stg( opt, mpu::reachable_set( net, mpu::MPState::parse( opt.from ), cap ) );
    return emit_stg( opt, mpu::reachable_set( net, semantics, mpu::BoolState::parse( opt.from ), cap ) );
}

int cmd_attractors( const options& opt )
{
    const auto net = mpu::load_bnet( opt.model );
    const auto found = mpu::attractors( net, mpu::semantics_from_string( opt.semantics ), effective_cap( opt ) );
    if ( opt.pretty )
    {
        for ( const auto& a : found )
        {
            std::cout << mpu::to_string( a.kind ) << ':';
            for ( const auto& s : a.states )
                std::cout << ' ' << s.to_string();
            std::cout << '\n';
        }
        return exit_ok;
    }
    print_json( opt, mpu::to_json( found ) );
    return exit_ok;
}

int cmd_reggraph( const options& opt )
{
    const auto net = mpu::load_bnet( opt.model );
    const auto g = mpu::infer_regulatory_graph( net );
    if ( opt.format == "dot" )
        write_output( opt, mpu::export_dot( g ) );
    else
        write_output( opt, ( opt.pretty ? mpu::to_json( g ).dump( 2 ) : mpu::to_json( g ).dump() ) + "\n" );
    return exit_ok;
}

int cmd_verify( const options& opt )
{
    const auto net = mpu::load_bnet( opt.model );
    const auto mode = mpu::mode_from_string( opt.mode );
    mpu::json reports = mpu::json::array();
    bool holds = true;

    auto run = [ & ]( const mpu::BooleanNetwork& n, const std::string& id ) {
        const auto report = mpu::oracle::check_equivalence( n, mode, id );
        holds = holds && report.holds();
        reports.push_back( mpu::to_json( report ) );
    };

    run( net, opt.model );
    for ( std::size_t seed = 1; seed <= opt.seeds; ++seed )
        run( mpu::oracle::random_network( { opt.random_n, 3, 3, seed } ),
             "random(n=" + std::to_string( opt.random_n ) + ",seed=" + std::to_string( seed ) + ")" );

    print_json( opt, { { "holds", holds }, { "reports", std::move( reports ) } } );
    return holds ? exit_ok : exit_negative;
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Boolean network analysis under classical and Most Permissive semantics" };
    app.require_subcommand( 1 );
    options opt;
    app.add_flag( "--pretty", opt.pretty, "Human-readable output instead of compact JSON" );

    const std::vector< std::string > all_semantics{ "sync", "async", "general", "mp" };
    auto model_arg = [ & ]( CLI::App* sub ) {
        sub->add_option( "model", opt.model, "Model file (.bnet)" )->required()->check( CLI::ExistingFile );
    };
    auto semantics_opt = [ & ]( CLI::App* sub, bool required ) {
        auto* o = sub->add_option( "--semantics", opt.semantics, "sync, async, general or mp" )
                          ->check( CLI::IsMember( all_semantics ) );
        if ( required )
            o->required();
    };
    auto cap_opt = [ & ]( CLI::App* sub ) {
        sub->add_option( "--cap", opt.cap, "Maximum number of explored states (default 1000000, env MPU_CAP)" )
                ->check( CLI::PositiveNumber );
    };

    auto* show = app.add_subcommand( "show", "Print components, rules and regulators" );
    model_arg( show );

    auto* fixpoints = app.add_subcommand( "fixpoints", "List the fixed points" );
    model_arg( fixpoints );

    auto* succ = app.add_subcommand( "succ", "List the successors of a state" );
    model_arg( succ );
    succ->add_option( "--state", opt.state, "State string over {0,1} (or {0,i,d,1} for mp)" )->required();
    semantics_opt( succ, true );

    auto* unfold = app.add_subcommand( "unfold", "Write the Boolean unfolding of a model" );
    model_arg( unfold );
    unfold->add_option( "--components", opt.components, "Components to unfold (default: all)" )->delimiter( ',' );
    unfold->add_option( "--mode", opt.mode, "exact or syntactic" )->check( CLI::IsMember( { "exact", "syntactic" } ) );
    unfold->add_option( "-o,--output", opt.output, "Output .bnet file (default: stdout)" );

    auto* reach = app.add_subcommand( "reach", "Decide reachability of a target pattern" );
    model_arg( reach );
    reach->add_option( "--from", opt.from, "Source state" )->required();
    reach->add_option( "--to", opt.to, "Target pattern over {0,1,i,d,*}" )->required();
    semantics_opt( reach, true );
    cap_opt( reach );

    auto* stg = app.add_subcommand( "stg", "Export the reachable state transition graph" );
    model_arg( stg );
    stg->add_option( "--from", opt.from, "Source state" )->required();
    semantics_opt( stg, true );
    stg->add_flag( "--project-boolean", opt.project_boolean, "Show only Boolean states of the mp graph" );
    stg->add_option( "--format", opt.format, "json or dot" )->check( CLI::IsMember( { "json", "dot" } ) );
    stg->add_option( "-o,--output", opt.output, "Output file (default: stdout)" );
    cap_opt( stg );

    auto* attractors = app.add_subcommand( "attractors", "List attractors of the full state space" );
    model_arg( attractors );
    attractors->add_option( "--semantics", opt.semantics, "sync, async or general" )
            ->required()
            ->check( CLI::IsMember( { "sync", "async", "general" } ) );
    cap_opt( attractors );

    auto* reggraph = app.add_subcommand( "reggraph", "Export the signed regulatory graph" );
    model_arg( reggraph );
    reggraph->add_option( "--format", opt.format, "json or dot" )->check( CLI::IsMember( { "json", "dot" } ) );
    reggraph->add_option( "-o,--output", opt.output, "Output file (default: stdout)" );

    auto* verify = app.add_subcommand( "verify", "Check Most Permissive vs unfolded reachability exhaustively" );
    model_arg( verify );
    verify->add_option( "--seeds", opt.seeds, "Also check this many seeded random networks" );
    verify->add_option( "--n", opt.random_n, "Size of the random networks" )->check( CLI::Range( 1, 4 ) );
    verify->add_option( "--mode", opt.mode, "exact or syntactic" )->check( CLI::IsMember( { "exact", "syntactic" } ) );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::CallForHelp& e )
    {
        return app.exit( e );
    }
    catch ( const CLI::ParseError& e )
    {
        std::cerr << mpu::json{ { "error", "usage" }, { "message", e.what() } }.dump() << '\n';
        return exit_usage;
    }

    try
    {
        if ( *show )
            return cmd_show( opt );
        if ( *fixpoints )
            return cmd_fixpoints( opt );
        if ( *succ )
            return cmd_succ( opt );
        if ( *unfold )
            return cmd_unfold( opt );
        if ( *reach )
            return cmd_reach( opt );
        if ( *stg )
            return cmd_stg( opt );
        if ( *attractors )
            return cmd_attractors( opt );
        if ( *reggraph )
            return cmd_reggraph( opt );
        if ( *verify )
            return cmd_verify( opt );
    }
    catch ( const mpu::Error& e )
    {
        std::cerr << mpu::to_json( e ).dump() << '\n';
        return e.kind() == mpu::ErrorKind::cap_exceeded ? exit_cap : exit_usage;
    }
    return exit_usage;
}
