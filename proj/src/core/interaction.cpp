#include "bnet/interaction.hpp"
#include "bnet/errors.hpp"

#include <algorithm>
#include <set>

namespace bnet
{

namespace
{

std::vector<std::uint32_t> support_of( const Dnf& dnf )
{
    std::vector<std::uint32_t> genes;
    for ( const auto& term : dnf.terms )
        for ( const auto& lit : term.literals )
            genes.push_back( lit.gene.index );
    std::sort( genes.begin(), genes.end() );
    genes.erase( std::unique( genes.begin(), genes.end() ), genes.end() );
    return genes;
}

// Scatters the low bits of `compact` onto the positions listed in `support`.
std::uint64_t scatter( std::uint64_t compact, const std::vector<std::uint32_t>& support )
{
    std::uint64_t bits = 0;
    for ( std::size_t k = 0; k < support.size(); ++k )
        if ( ( compact >> k ) & 1u )
            bits |= std::uint64_t{ 1 } << support[ k ];
    return bits;
}

} // namespace

InteractionGraph derive_interaction_graph( const BooleanNetwork& net, const InteractionOptions& options )
{
    net.require_well_formed();

    std::set<SignedArc> arcs;
    bool approximate = false;

    for ( std::uint32_t j = 0; j < net.size(); ++j )
    {
        const auto& fn = net.function( GeneId{ j } );
        const auto support = support_of( fn );

        if ( support.size() > options.probe_limit )
        {
            if ( !options.allow_syntactic_fallback )
                throw CapacityError( "function of '" + net.gene( GeneId{ j } ).name + "' has "
                                     + std::to_string( support.size() ) + " regulators; probing is limited to "
                                     + std::to_string( options.probe_limit ) );
            approximate = true;
            for ( const auto& term : fn.terms )
            {
                if ( is_contradictory( term ) )
                    continue;
                for ( const auto& lit : term.literals )
                    arcs.insert( { lit.gene, lit.polarity == Polarity::positive ? Sign::positive : Sign::negative,
                                   GeneId{ j } } );
            }
            continue;
        }

        // f_j only depends on its support, so probing the support subspace is
        // the same as probing all 2^n configurations.
        const std::uint64_t combos = std::uint64_t{ 1 } << support.size();
        for ( std::size_t k = 0; k < support.size(); ++k )
        {
            const std::uint64_t probe = std::uint64_t{ 1 } << k;
            bool rises = false;
            bool falls = false;
            for ( std::uint64_t c = 0; c < combos && !( rises && falls ); ++c )
            {
                if ( c & probe )
                    continue;
                const bool low = net.next_value( j, scatter( c, support ) );
                const bool high = net.next_value( j, scatter( c | probe, support ) );
                rises = rises || ( !low && high );
                falls = falls || ( low && !high );
            }
            const GeneId source{ support[ k ] };
            if ( rises )
                arcs.insert( { source, Sign::positive, GeneId{ j } } );
            if ( falls )
                arcs.insert( { source, Sign::negative, GeneId{ j } } );
        }
    }

    return { { arcs.begin(), arcs.end() }, approximate };
}

} // namespace bnet
