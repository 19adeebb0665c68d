#include "bnet/attractor.hpp"
#include "bnet/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace bnet
{

std::string_view to_string( AttractorKind kind )
{
    switch ( kind )
    {
    case AttractorKind::fixed_point:
        return "fixed_point";
    case AttractorKind::stable_cycle:
        return "stable_cycle";
    case AttractorKind::complex:
        return "complex";
    }
    return "unknown";
}

std::optional<AttractorKind> parse_attractor_kind( std::string_view text )
{
    for ( auto kind : { AttractorKind::fixed_point, AttractorKind::stable_cycle, AttractorKind::complex } )
        if ( to_string( kind ) == text )
            return kind;
    return std::nullopt;
}

std::vector<Configuration> canonical_rotation( std::vector<Configuration> cycle )
{
    const auto smallest = std::min_element( cycle.begin(), cycle.end() );
    std::rotate( cycle.begin(), smallest, cycle.end() );
    return cycle;
}

Attractor Attractor::fixed_point( Configuration state )
{
    return Attractor{ AttractorKind::fixed_point, { state } };
}

Attractor Attractor::cycle( std::vector<Configuration> states )
{
    if ( states.size() < 2 )
        throw DomainError( "a cycle needs at least two states" );
    return Attractor{ AttractorKind::stable_cycle, canonical_rotation( std::move( states ) ) };
}

Attractor Attractor::complex( std::vector<Configuration> states )
{
    std::sort( states.begin(), states.end() );
    return Attractor{ AttractorKind::complex, std::move( states ) };
}

std::size_t Attractor::period() const
{
    return kind_ == AttractorKind::complex ? 0 : states_.size();
}

bool Attractor::contains( const Configuration& x ) const
{
    return std::find( states_.begin(), states_.end(), x ) != states_.end();
}

bool operator<( const Attractor& lhs, const Attractor& rhs )
{
    if ( lhs.kind_ != rhs.kind_ )
        return lhs.kind_ < rhs.kind_;
    return std::lexicographical_compare( lhs.states_.begin(), lhs.states_.end(), rhs.states_.begin(),
                                         rhs.states_.end() );
}

void require_cycle( const BooleanNetwork& net, const std::vector<Configuration>& cycle, UpdateMode mode )
{
    if ( cycle.size() < 2 )
        throw DomainError( "a cycle needs at least two states, got " + std::to_string( cycle.size() ) );

    std::unordered_set<Configuration, ConfigurationHash> seen;
    for ( const auto& x : cycle )
    {
        if ( x.width() != net.size() )
            throw DomainError( "cycle state " + x.to_string() + " does not match the network width" );
        if ( !seen.insert( x ).second )
            throw DomainError( "cycle state " + x.to_string() + " occurs twice" );
    }

    for ( std::size_t k = 0; k < cycle.size(); ++k )
    {
        const auto& next = cycle[ ( k + 1 ) % cycle.size() ];
        const auto succ = successors( net, cycle[ k ], mode );
        if ( std::find( succ.begin(), succ.end(), next ) == succ.end() )
            throw DomainError( next.to_string() + " is not a " + std::string{ to_string( mode ) }
                               + " successor of " + cycle[ k ].to_string() );
    }
}

bool is_stable_cycle( const BooleanNetwork& net, const std::vector<Configuration>& cycle, UpdateMode mode )
{
    require_cycle( net, cycle, mode );
    // require_cycle already placed the next state in every successor set.
    return std::all_of( cycle.begin(), cycle.end(),
                        [ & ]( const Configuration& x ) { return successors( net, x, mode ).size() == 1; } );
}

} // namespace bnet
