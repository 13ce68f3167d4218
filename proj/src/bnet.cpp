#include "mpu/bnet.hpp"

#include "mpu/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace mpu
{

namespace
{

bool ident_start( char c )
{
    return std::isalpha( static_cast< unsigned char >( c ) ) || c == '_';
}

bool ident_char( char c )
{
    return std::isalnum( static_cast< unsigned char >( c ) ) || c == '_';
}

struct source_line
{
    std::size_t number;
    std::string_view text;
};

// Recursive-descent parser over one rule body.
class expr_parser
{
    std::string_view _text;
    std::size_t _pos;
    std::size_t _line;
    const std::unordered_map< std::string, std::size_t >& _targets;

    [[noreturn]] void fail( ErrorKind kind, const std::string& message ) const
    {
        throw ParseError( kind, message, _line, _pos + 1 );
    }

    void skip_ws()
    {
        while ( _pos < _text.size() && std::isspace( static_cast< unsigned char >( _text[ _pos ] ) ) )
            ++_pos;
    }

    bool accept( char c )
    {
        skip_ws();
        if ( _pos < _text.size() && _text[ _pos ] == c )
        {
            ++_pos;
            return true;
        }
        return false;
    }

    Expr expr()
    {
        auto e = conj();
        while ( accept( '|' ) )
            e = std::move( e ) | conj();
        return e;
    }

    Expr conj()
    {
        auto e = lit();
        while ( accept( '&' ) )
            e = std::move( e ) & lit();
        return e;
    }

    Expr lit()
    {
        skip_ws();
        if ( _pos >= _text.size() )
            fail( ErrorKind::syntax, "unexpected end of rule, expected a literal" );
        const char c = _text[ _pos ];
        if ( c == '!' )
        {
            ++_pos;
            return !lit();
        }
        if ( c == '(' )
        {
            ++_pos;
            auto e = expr();
            if ( !accept( ')' ) )
                fail( ErrorKind::syntax, "expected ')'" );
            return e;
        }
        if ( c == '0' || c == '1' )
        {
            ++_pos;
            if ( _pos < _text.size() && ident_char( _text[ _pos ] ) )
                fail( ErrorKind::syntax, "invalid token after constant" );
            return Expr::constant( c == '1' );
        }
        if ( ident_start( c ) )
        {
            const auto start = _pos;
            while ( _pos < _text.size() && ident_char( _text[ _pos ] ) )
                ++_pos;
            const std::string name( _text.substr( start, _pos - start ) );
            auto it = _targets.find( name );
            if ( it == _targets.end() )
            {
                _pos = start;
                fail( ErrorKind::undeclared_identifier, "reference to undeclared identifier '" + name + "'" );
            }
            return Expr::variable( it->second );
        }
        fail( ErrorKind::syntax, std::string( "unexpected character '" ) + c + "'" );
    }

public:
    expr_parser( std::string_view text, std::size_t offset, std::size_t line,
                 const std::unordered_map< std::string, std::size_t >& targets )
            : _text{ text }, _pos{ offset }, _line{ line }, _targets{ targets }
    {
    }

    Expr parse()
    {
        auto e = expr();
        skip_ws();
        if ( _pos != _text.size() )
            fail( ErrorKind::syntax, std::string( "unexpected character '" ) + _text[ _pos ] + "'" );
        return e;
    }
};

bool is_header( std::string_view line )
{
    auto lower = std::string( line );
    std::transform( lower.begin(), lower.end(), lower.begin(),
                    []( unsigned char c ) { return static_cast< char >( std::tolower( c ) ); } );
    std::string compact;
    for ( char c : lower )
        if ( !std::isspace( static_cast< unsigned char >( c ) ) )
            compact += c;
    return compact == "targets,factors" && lower.find( "targets" ) != std::string::npos;
}

} // namespace

BooleanNetwork parse_bnet( std::string_view text )
{
    struct pending_rule
    {
        source_line line;
        std::size_t body_offset;
    };

    std::vector< std::string > names;
    std::vector< pending_rule > bodies;
    std::unordered_map< std::string, std::size_t > targets;

    std::size_t number = 0;
    std::size_t start = 0;
    while ( start <= text.size() )
    {
        auto end = text.find( '\n', start );
        if ( end == std::string_view::npos )
            end = text.size();
        auto line = text.substr( start, end - start );
        if ( !line.empty() && line.back() == '\r' )
            line.remove_suffix( 1 );
        ++number;
        start = end + 1;

        std::size_t pos = 0;
        while ( pos < line.size() && std::isspace( static_cast< unsigned char >( line[ pos ] ) ) )
            ++pos;
        if ( pos == line.size() || line[ pos ] == '#' )
            continue;
        // Only the leading "targets, factors" line counts as a header.
        if ( names.empty() && is_header( line ) )
            continue;

        if ( !ident_start( line[ pos ] ) )
            throw ParseError( ErrorKind::syntax, "expected a target identifier", number, pos + 1 );
        const auto name_start = pos;
        while ( pos < line.size() && ident_char( line[ pos ] ) )
            ++pos;
        std::string name( line.substr( name_start, pos - name_start ) );
        while ( pos < line.size() && std::isspace( static_cast< unsigned char >( line[ pos ] ) ) )
            ++pos;
        if ( pos == line.size() || line[ pos ] != ',' )
            throw ParseError( ErrorKind::syntax, "expected ',' after target '" + name + "'", number, pos + 1 );
        if ( !targets.emplace( name, names.size() ).second )
            throw ParseError( ErrorKind::duplicate_target, "duplicate target '" + name + "'", number, name_start + 1 );
        names.push_back( std::move( name ) );
        bodies.push_back( { { number, line }, pos + 1 } );
    }

    if ( names.empty() )
        throw Error( ErrorKind::empty_model, "model contains no rules" );

    std::vector< Expr > rules;
    rules.reserve( bodies.size() );
    for ( const auto& b : bodies )
        rules.push_back( expr_parser( b.line.text, b.body_offset, b.line.number, targets ).parse() );
    return BooleanNetwork( std::move( names ), std::move( rules ) );
}

BooleanNetwork load_bnet( const std::filesystem::path& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw Error( ErrorKind::io, "cannot open model file '" + path.string() + "'" );
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_bnet( buffer.str() );
}

std::string print_bnet( const BooleanNetwork& net )
{
    std::string out = "targets, factors\n";
    for ( std::size_t j = 0; j < net.size(); ++j )
    {
        const auto& f = net.function( j );
        out += net.name( j );
        out += ", ";
        if ( f.is_constant() )
        {
            out += f.is_true() ? '1' : '0';
            out += '\n';
            continue;
        }
        std::vector< std::string > products;
        for ( const auto& cube : f.cubes() )
        {
            std::string p;
            for ( const auto& [ v, positive ] : cube )
            {
                if ( !p.empty() )
                    p += " & ";
                if ( !positive )
                    p += '!';
                p += net.name( v );
            }
            products.push_back( std::move( p ) );
        }
        std::sort( products.begin(), products.end() );
        for ( std::size_t i = 0; i < products.size(); ++i )
        {
            if ( i > 0 )
                out += " | ";
            out += products[ i ];
        }
        out += '\n';
    }
    return out;
}

} // namespace mpu
