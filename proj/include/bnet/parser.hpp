#pragma once

#include "bnet/dnf.hpp"
#include "bnet/network.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bnet
{

enum class TokenKind
{
    identifier,
    zero,
    one,
    conjunction, // &
    disjunction, // |
    negation,    // !
    lparen,
    rparen,
    comma
};

struct Token
{
    TokenKind kind;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

// Skips whitespace and '#' comments. Throws ParseError on any other character
// outside the token set.
[[nodiscard]] std::vector<Token> tokenize( std::string_view text );

struct Expr
{
    enum class Kind
    {
        variable,
        constant,
        negation,
        conjunction,
        disjunction
    };

    Kind kind = Kind::constant;
    std::string name; // variable
    bool value = false; // constant
    // negation: one child; conjunction/disjunction: at least two.
    std::vector<Expr> children;
    std::size_t line = 1;
    std::size_t column = 1;

    [[nodiscard]] static Expr variable( std::string name )
    {
        Expr e;
        e.kind = Kind::variable;
        e.name = std::move( name );
        return e;
    }
    [[nodiscard]] static Expr constant( bool value )
    {
        Expr e;
        e.value = value;
        return e;
    }
    [[nodiscard]] static Expr negate( Expr child );
    [[nodiscard]] static Expr all_of( std::vector<Expr> children );
    [[nodiscard]] static Expr any_of( std::vector<Expr> children );
};

// Structural equality, ignoring source positions.
[[nodiscard]] bool same_shape( const Expr& lhs, const Expr& rhs );

// Precedence ! > & > |, left-associative chains flattened into n-ary nodes.
// The whole token span must be consumed.
[[nodiscard]] Expr parse_expression( std::span<const Token> tokens );
[[nodiscard]] Expr parse_expression( std::string_view text );

using GeneTable = std::unordered_map<std::string, GeneId>;

// Pushes negations to the literals and distributes & over |. Throws
// SemanticError for names missing from `genes`, CapacityError past term_cap.
[[nodiscard]] Dnf to_dnf( const Expr& expr, const GeneTable& genes, std::size_t term_cap = default_term_cap );

// Direct evaluation of the tree, reading each variable's bit through `genes`.
[[nodiscard]] bool evaluate( const Expr& expr, const GeneTable& genes, const Configuration& x );

struct NetworkEntry
{
    std::string target;
    Expr expr;
    std::size_t line = 1;
    std::size_t column = 1;
};

struct NetworkFile
{
    bool has_header = false;
    std::vector<NetworkEntry> entries;
};

// Syntax only: header detection, one "name, expr" entry per line, unique targets.
[[nodiscard]] NetworkFile parse_network_file( std::string_view text );

struct NetworkOptions
{
    std::size_t term_cap = default_term_cap;
};

// Genes are the targets in order of appearance, followed by every variable
// that occurs in some function's DNF without being a target. Those input
// genes get the identity function and are numbered by first occurrence.
[[nodiscard]] BooleanNetwork build_network( const NetworkFile& file, const NetworkOptions& options = {} );

[[nodiscard]] BooleanNetwork parse_network( std::string_view text, const NetworkOptions& options = {} );

// Inverse of parse_network for parsed networks: header plus one line per
// non-input gene.
[[nodiscard]] std::string format_network( const BooleanNetwork& net );

} // namespace bnet
