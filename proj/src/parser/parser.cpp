#include "bnet/parser.hpp"
#include "bnet/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_set>

namespace bnet
{

namespace
{

bool is_name_start( char c )
{
    return std::isalpha( static_cast<unsigned char>( c ) ) || c == '_';
}

bool is_name_char( char c )
{
    return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_';
}

bool iequals( std::string_view a, std::string_view b )
{
    return a.size() == b.size() && std::equal( a.begin(), a.end(), b.begin(), []( char x, char y ) {
               return std::tolower( static_cast<unsigned char>( x ) ) == std::tolower( static_cast<unsigned char>( y ) );
           } );
}

class ExprParser
{
public:
    explicit ExprParser( std::span<const Token> tokens ) : tokens_{ tokens } {}

    Expr parse()
    {
        check_balance();
        if ( tokens_.empty() )
            throw ParseError( 1, 1, "expected an expression" );
        Expr e = parse_or();
        if ( pos_ < tokens_.size() )
            fail_at( tokens_[ pos_ ], "unexpected trailing token" );
        return e;
    }

private:
    std::span<const Token> tokens_;
    std::size_t pos_ = 0;

    [[noreturn]] static void fail_at( const Token& tok, const std::string& message )
    {
        throw ParseError( tok.line, tok.column, message, tok.text );
    }

    [[noreturn]] void fail_at_end( const std::string& message ) const
    {
        const Token& last = tokens_.back();
        throw ParseError( last.line, last.column + last.text.size(), message );
    }

    void check_balance() const
    {
        std::vector<const Token*> open;
        for ( const auto& tok : tokens_ )
        {
            if ( tok.kind == TokenKind::lparen )
                open.push_back( &tok );
            else if ( tok.kind == TokenKind::rparen )
            {
                if ( open.empty() )
                    fail_at( tok, "unbalanced parenthesis: no matching '('" );
                open.pop_back();
            }
        }
        if ( !open.empty() )
            fail_at( *open.back(), "unbalanced parenthesis: '(' is never closed" );
    }

    [[nodiscard]] bool at( TokenKind kind ) const { return pos_ < tokens_.size() && tokens_[ pos_ ].kind == kind; }

    static Expr positioned( Expr e, const Token& tok )
    {
        e.line = tok.line;
        e.column = tok.column;
        return e;
    }

    Expr parse_or()
    {
        const Token& first = tokens_[ std::min( pos_, tokens_.size() - 1 ) ];
        std::vector<Expr> parts;
        parts.push_back( parse_and() );
        while ( at( TokenKind::disjunction ) )
        {
            ++pos_;
            parts.push_back( parse_and() );
        }
        if ( parts.size() == 1 )
            return std::move( parts.front() );
        return positioned( Expr::any_of( std::move( parts ) ), first );
    }

    Expr parse_and()
    {
        const Token& first = tokens_[ std::min( pos_, tokens_.size() - 1 ) ];
        std::vector<Expr> parts;
        parts.push_back( parse_unary() );
        while ( at( TokenKind::conjunction ) )
        {
            ++pos_;
            parts.push_back( parse_unary() );
        }
        if ( parts.size() == 1 )
            return std::move( parts.front() );
        return positioned( Expr::all_of( std::move( parts ) ), first );
    }

    Expr parse_unary()
    {
        if ( pos_ >= tokens_.size() )
            fail_at_end( "expected an operand after the operator" );

        const Token& tok = tokens_[ pos_++ ];
        switch ( tok.kind )
        {
        case TokenKind::negation:
            return positioned( Expr::negate( parse_unary() ), tok );
        case TokenKind::lparen:
        {
            Expr inner = parse_or();
            if ( !at( TokenKind::rparen ) )
            {
                if ( pos_ < tokens_.size() )
                    fail_at( tokens_[ pos_ ], "expected ')'" );
                fail_at_end( "expected ')'" );
            }
            ++pos_;
            return inner;
        }
        case TokenKind::identifier:
            return positioned( Expr::variable( tok.text ), tok );
        case TokenKind::zero:
            return positioned( Expr::constant( false ), tok );
        case TokenKind::one:
            return positioned( Expr::constant( true ), tok );
        default:
            fail_at( tok, "expected an operand" );
        }
    }
};

void collect_variables( const Expr& e, std::vector<std::string>& out )
{
    if ( e.kind == Expr::Kind::variable )
        out.push_back( e.name );
    for ( const auto& child : e.children )
        collect_variables( child, out );
}

Dnf to_dnf_impl( const Expr& e, bool positive, const GeneTable& genes, std::size_t cap )
{
    switch ( e.kind )
    {
    case Expr::Kind::variable:
    {
        const auto it = genes.find( e.name );
        if ( it == genes.end() )
            throw SemanticError( "line " + std::to_string( e.line ) + ", column " + std::to_string( e.column )
                                 + ": undeclared variable '" + e.name + "'" );
        const Literal lit{ it->second, positive ? Polarity::positive : Polarity::negative };
        return Dnf{ { Term{ { lit } } } };
    }
    case Expr::Kind::constant:
        return Dnf::constant( e.value == positive );
    case Expr::Kind::negation:
        return to_dnf_impl( e.children.at( 0 ), !positive, genes, cap );
    case Expr::Kind::conjunction:
    case Expr::Kind::disjunction:
    {
        // Under a negation, & and | swap roles (De Morgan).
        const bool as_product = ( e.kind == Expr::Kind::conjunction ) == positive;
        Dnf acc = to_dnf_impl( e.children.at( 0 ), positive, genes, cap );
        for ( std::size_t i = 1; i < e.children.size(); ++i )
        {
            const Dnf next = to_dnf_impl( e.children[ i ], positive, genes, cap );
            acc = as_product ? dnf_and( acc, next, cap ) : dnf_or( acc, next, cap );
        }
        return acc;
    }
    }
    throw InvariantError( "unknown expression kind" );
}

} // namespace

std::vector<Token> tokenize( std::string_view text )
{
    std::vector<Token> tokens;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t i = 0;

    auto emit = [ & ]( TokenKind kind, std::size_t length ) {
        tokens.push_back( { kind, std::string{ text.substr( i, length ) }, line, column } );
        i += length;
        column += length;
    };

    while ( i < text.size() )
    {
        const char c = text[ i ];
        if ( c == '\n' )
        {
            ++line;
            column = 1;
            ++i;
            continue;
        }
        if ( c == ' ' || c == '\t' || c == '\r' )
        {
            ++i;
            ++column;
            continue;
        }
        if ( c == '#' )
        {
            while ( i < text.size() && text[ i ] != '\n' )
                ++i;
            continue;
        }

        switch ( c )
        {
        case '&':
            emit( TokenKind::conjunction, 1 );
            continue;
        case '|':
            emit( TokenKind::disjunction, 1 );
            continue;
        case '!':
            emit( TokenKind::negation, 1 );
            continue;
        case '(':
            emit( TokenKind::lparen, 1 );
            continue;
        case ')':
            emit( TokenKind::rparen, 1 );
            continue;
        case ',':
            emit( TokenKind::comma, 1 );
            continue;
        default:
            break;
        }

        if ( is_name_char( c ) )
        {
            std::size_t end = i;
            while ( end < text.size() && is_name_char( text[ end ] ) )
                ++end;
            const auto word = text.substr( i, end - i );
            if ( is_name_start( c ) )
                emit( TokenKind::identifier, word.size() );
            else if ( word == "0" )
                emit( TokenKind::zero, 1 );
            else if ( word == "1" )
                emit( TokenKind::one, 1 );
            else
                throw ParseError( line, column, "invalid constant; only 0 and 1 are allowed", std::string{ word } );
            continue;
        }

        throw ParseError( line, column, "illegal character", std::string( 1, c ) );
    }
    return tokens;
}

Expr Expr::negate( Expr child )
{
    Expr e;
    e.kind = Kind::negation;
    e.children.push_back( std::move( child ) );
    return e;
}

Expr Expr::all_of( std::vector<Expr> children )
{
    Expr e;
    e.kind = Kind::conjunction;
    e.children = std::move( children );
    return e;
}

Expr Expr::any_of( std::vector<Expr> children )
{
    Expr e;
    e.kind = Kind::disjunction;
    e.children = std::move( children );
    return e;
}

bool same_shape( const Expr& lhs, const Expr& rhs )
{
    if ( lhs.kind != rhs.kind || lhs.children.size() != rhs.children.size() )
        return false;
    if ( lhs.kind == Expr::Kind::variable && lhs.name != rhs.name )
        return false;
    if ( lhs.kind == Expr::Kind::constant && lhs.value != rhs.value )
        return false;
    for ( std::size_t i = 0; i < lhs.children.size(); ++i )
        if ( !same_shape( lhs.children[ i ], rhs.children[ i ] ) )
            return false;
    return true;
}

Expr parse_expression( std::span<const Token> tokens )
{
    return ExprParser{ tokens }.parse();
}

Expr parse_expression( std::string_view text )
{
    const auto tokens = tokenize( text );
    return parse_expression( std::span<const Token>{ tokens } );
}

Dnf to_dnf( const Expr& expr, const GeneTable& genes, std::size_t term_cap )
{
    return to_dnf_impl( expr, true, genes, term_cap );
}

bool evaluate( const Expr& expr, const GeneTable& genes, const Configuration& x )
{
    switch ( expr.kind )
    {
    case Expr::Kind::variable:
    {
        const auto it = genes.find( expr.name );
        if ( it == genes.end() )
            throw SemanticError( "undeclared variable '" + expr.name + "'" );
        if ( it->second.index >= x.width() )
            throw StructuralError( "variable '" + expr.name + "' is outside the configuration" );
        return x.get( it->second.index );
    }
    case Expr::Kind::constant:
        return expr.value;
    case Expr::Kind::negation:
        return !evaluate( expr.children.at( 0 ), genes, x );
    case Expr::Kind::conjunction:
        return std::all_of( expr.children.begin(), expr.children.end(),
                            [ & ]( const Expr& c ) { return evaluate( c, genes, x ); } );
    case Expr::Kind::disjunction:
        return std::any_of( expr.children.begin(), expr.children.end(),
                            [ & ]( const Expr& c ) { return evaluate( c, genes, x ); } );
    }
    throw InvariantError( "unknown expression kind" );
}

NetworkFile parse_network_file( std::string_view text )
{
    const auto tokens = tokenize( text );

    // Group tokens by source line.
    std::vector<std::span<const Token>> lines;
    for ( std::size_t begin = 0; begin < tokens.size(); )
    {
        std::size_t end = begin;
        while ( end < tokens.size() && tokens[ end ].line == tokens[ begin ].line )
            ++end;
        lines.emplace_back( tokens.data() + begin, end - begin );
        begin = end;
    }

    NetworkFile file;
    std::unordered_set<std::string> targets;

    for ( std::size_t li = 0; li < lines.size(); ++li )
    {
        const auto line = lines[ li ];
        if ( li == 0 && line.size() == 3 && line[ 0 ].kind == TokenKind::identifier
             && iequals( line[ 0 ].text, "targets" ) && line[ 1 ].kind == TokenKind::comma
             && line[ 2 ].kind == TokenKind::identifier && iequals( line[ 2 ].text, "factors" ) )
        {
            file.has_header = true;
            continue;
        }

        const Token& name = line[ 0 ];
        if ( name.kind != TokenKind::identifier )
            throw ParseError( name.line, name.column, "expected a target gene name", name.text );
        if ( line.size() < 2 || line[ 1 ].kind != TokenKind::comma )
        {
            const auto& at = line.size() < 2 ? name : line[ 1 ];
            throw ParseError( at.line, line.size() < 2 ? at.column + at.text.size() : at.column,
                              "expected ',' after the target name", line.size() < 2 ? std::string{} : at.text );
        }
        if ( line.size() == 2 )
            throw ParseError( line[ 1 ].line, line[ 1 ].column + 1, "missing expression after ','" );
        if ( !targets.insert( name.text ).second )
            throw ParseError( name.line, name.column, "duplicate target '" + name.text + "'", name.text );

        file.entries.push_back( { name.text, parse_expression( line.subspan( 2 ) ), name.line, name.column } );
    }

    if ( file.entries.empty() )
        throw ParseError( 1, 1, "network file contains no entries" );
    return file;
}

BooleanNetwork build_network( const NetworkFile& file, const NetworkOptions& options )
{
    GeneTable table;
    std::vector<Gene> genes;
    for ( const auto& entry : file.entries )
    {
        if ( !table.emplace( entry.target, GeneId{ static_cast<std::uint32_t>( genes.size() ) } ).second )
            throw ParseError( entry.line, entry.column, "duplicate target '" + entry.target + "'", entry.target );
        genes.push_back( { entry.target, false } );
    }
    const auto target_count = static_cast<std::uint32_t>( genes.size() );

    // Provisional ids for non-target variables in textual order.
    std::vector<std::string> provisional;
    for ( const auto& entry : file.entries )
    {
        std::vector<std::string> vars;
        collect_variables( entry.expr, vars );
        for ( auto& v : vars )
        {
            if ( table.contains( v ) )
                continue;
            table.emplace( v, GeneId{ static_cast<std::uint32_t>( target_count + provisional.size() ) } );
            provisional.push_back( std::move( v ) );
        }
    }

    std::vector<Dnf> functions;
    functions.reserve( file.entries.size() );
    for ( const auto& entry : file.entries )
        functions.push_back( to_dnf( entry.expr, table, options.term_cap ) );

    // Inputs that survive simplification, renumbered by first occurrence.
    std::map<std::uint32_t, std::uint32_t> renumber;
    for ( const auto& fn : functions )
        for ( const auto& term : fn.terms )
            for ( const auto& lit : term.literals )
                if ( lit.gene.index >= target_count && !renumber.contains( lit.gene.index ) )
                {
                    const auto next = static_cast<std::uint32_t>( target_count + renumber.size() );
                    renumber.emplace( lit.gene.index, next );
                }

    std::vector<std::string> input_names( renumber.size() );
    for ( const auto& [ old_id, new_id ] : renumber )
        input_names[ new_id - target_count ] = provisional[ old_id - target_count ];

    for ( auto& fn : functions )
    {
        for ( auto& term : fn.terms )
        {
            for ( auto& lit : term.literals )
                if ( lit.gene.index >= target_count )
                    lit.gene.index = renumber.at( lit.gene.index );
            normalize_term( term );
        }
    }

    for ( std::uint32_t k = 0; k < input_names.size(); ++k )
    {
        genes.push_back( { input_names[ k ], true } );
        functions.push_back( Dnf::identity( target_count + k ) );
    }

    if ( genes.size() > max_width )
        throw CapacityError( "network has " + std::to_string( genes.size() ) + " genes; at most "
                             + std::to_string( max_width ) + " are supported" );

    return BooleanNetwork{ std::move( genes ), std::move( functions ) };
}

BooleanNetwork parse_network( std::string_view text, const NetworkOptions& options )
{
    return build_network( parse_network_file( text ), options );
}

std::string format_network( const BooleanNetwork& net )
{
    const auto names = net.names();
    std::string out = "targets, factors\n";
    for ( std::uint32_t i = 0; i < net.size(); ++i )
    {
        if ( net.genes()[ i ].input )
            continue;
        out += names[ i ] + ", " + format_dnf( net.function( GeneId{ i } ), names ) + "\n";
    }
    return out;
}

} // namespace bnet
