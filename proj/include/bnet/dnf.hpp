#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bnet
{

// Position of a gene in its network's declaration order.
struct GeneId
{
    std::uint32_t index = 0;

    friend auto operator<=>( const GeneId&, const GeneId& ) = default;
};

enum class Polarity : std::uint8_t
{
    positive,
    negative
};

struct Literal
{
    GeneId gene;
    Polarity polarity = Polarity::positive;

    [[nodiscard]] static Literal pos( std::uint32_t gene ) { return { GeneId{ gene }, Polarity::positive }; }
    [[nodiscard]] static Literal neg( std::uint32_t gene ) { return { GeneId{ gene }, Polarity::negative }; }

    [[nodiscard]] Literal negated() const
    {
        return { gene, polarity == Polarity::positive ? Polarity::negative : Polarity::positive };
    }

    friend auto operator<=>( const Literal&, const Literal& ) = default;
};

// Conjunction of literals. The empty term is the constant true.
struct Term
{
    std::vector<Literal> literals;

    friend bool operator==( const Term&, const Term& ) = default;
};

// Disjunction of terms. The empty DNF is the constant false.
struct Dnf
{
    std::vector<Term> terms;

    [[nodiscard]] static Dnf constant( bool value ) { return value ? Dnf{ { Term{} } } : Dnf{}; }
    [[nodiscard]] static Dnf identity( std::uint32_t gene ) { return Dnf{ { Term{ { Literal::pos( gene ) } } } }; }

    friend bool operator==( const Dnf&, const Dnf& ) = default;
};

inline constexpr std::size_t default_term_cap = 4096;

// True if the term contains some gene with both polarities.
[[nodiscard]] bool is_contradictory( const Term& term );

// Sorts literals by (gene, polarity) and drops repeats. Returns false when the
// term is contradictory; the term is left sorted either way.
bool normalize_term( Term& term );

// Drops contradictory and duplicate terms, keeping first-occurrence order.
// Literals inside each term are normalized.
[[nodiscard]] Dnf simplify( Dnf dnf );

[[nodiscard]] Dnf dnf_or( const Dnf& lhs, const Dnf& rhs, std::size_t term_cap = default_term_cap );

// Distributes the conjunction over both disjunctions. Throws CapacityError
// when the simplified product would exceed term_cap terms.
[[nodiscard]] Dnf dnf_and( const Dnf& lhs, const Dnf& rhs, std::size_t term_cap = default_term_cap );

// De Morgan followed by distribution. The result is simplified but not minimized.
[[nodiscard]] Dnf negate_dnf( const Dnf& dnf, std::size_t term_cap = default_term_cap );

// Renders "a & !b | c" using the given gene names; "0" / "1" for constants.
[[nodiscard]] std::string format_dnf( const Dnf& dnf, std::span<const std::string> names );

} // namespace bnet
