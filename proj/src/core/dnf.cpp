#include "bnet/dnf.hpp"
#include "bnet/errors.hpp"

#include <algorithm>
#include <set>

namespace bnet
{

namespace
{

// First-occurrence-ordered collection of normalized terms.
class TermCollector
{
public:
    explicit TermCollector( std::size_t cap ) : cap_{ cap } {}

    void add( Term term )
    {
        if ( !normalize_term( term ) )
            return;
        if ( !seen_.insert( term.literals ).second )
            return;
        if ( out_.terms.size() == cap_ )
            throw CapacityError( "DNF exceeds the cap of " + std::to_string( cap_ ) + " terms" );
        out_.terms.push_back( std::move( term ) );
    }

    Dnf take() { return std::move( out_ ); }

private:
    std::size_t cap_;
    std::set<std::vector<Literal>> seen_;
    Dnf out_;
};

} // namespace

bool is_contradictory( const Term& term )
{
    for ( const auto& a : term.literals )
        for ( const auto& b : term.literals )
            if ( a.gene == b.gene && a.polarity != b.polarity )
                return true;
    return false;
}

bool normalize_term( Term& term )
{
    auto& lits = term.literals;
    std::sort( lits.begin(), lits.end() );
    lits.erase( std::unique( lits.begin(), lits.end() ), lits.end() );
    // Sorted by (gene, polarity): a contradiction shows up as adjacent entries.
    for ( std::size_t i = 1; i < lits.size(); ++i )
        if ( lits[ i ].gene == lits[ i - 1 ].gene )
            return false;
    return true;
}

Dnf simplify( Dnf dnf )
{
    TermCollector out{ std::max( dnf.terms.size(), std::size_t{ 1 } ) };
    for ( auto& term : dnf.terms )
        out.add( std::move( term ) );
    return out.take();
}

Dnf dnf_or( const Dnf& lhs, const Dnf& rhs, std::size_t term_cap )
{
    TermCollector out{ term_cap };
    for ( const auto& term : lhs.terms )
        out.add( term );
    for ( const auto& term : rhs.terms )
        out.add( term );
    return out.take();
}

Dnf dnf_and( const Dnf& lhs, const Dnf& rhs, std::size_t term_cap )
{
    TermCollector out{ term_cap };
    for ( const auto& a : lhs.terms )
    {
        for ( const auto& b : rhs.terms )
        {
            Term merged = a;
            merged.literals.insert( merged.literals.end(), b.literals.begin(), b.literals.end() );
            out.add( std::move( merged ) );
        }
    }
    return out.take();
}

Dnf negate_dnf( const Dnf& dnf, std::size_t term_cap )
{
    Dnf result = Dnf::constant( true );
    for ( const auto& term : simplify( dnf ).terms )
    {
        // !(l1 & ... & lk) = !l1 | ... | !lk; the empty term negates to false.
        Dnf negated;
        for ( const auto& lit : term.literals )
            negated.terms.push_back( Term{ { lit.negated() } } );
        result = dnf_and( result, negated, term_cap );
        if ( result.terms.empty() )
            break;
    }
    return result;
}

std::string format_dnf( const Dnf& dnf, std::span<const std::string> names )
{
    if ( dnf.terms.empty() )
        return "0";

    std::string out;
    for ( std::size_t t = 0; t < dnf.terms.size(); ++t )
    {
        if ( t > 0 )
            out += " | ";
        const auto& lits = dnf.terms[ t ].literals;
        if ( lits.empty() )
        {
            out += "1";
            continue;
        }
        for ( std::size_t l = 0; l < lits.size(); ++l )
        {
            if ( l > 0 )
                out += " & ";
            if ( lits[ l ].gene.index >= names.size() )
                throw StructuralError( "literal references gene index " + std::to_string( lits[ l ].gene.index )
                                       + " but only " + std::to_string( names.size() ) + " names are known" );
            if ( lits[ l ].polarity == Polarity::negative )
                out += '!';
            out += names[ lits[ l ].gene.index ];
        }
    }
    return out;
}

} // namespace bnet
