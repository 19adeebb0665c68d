#include "bnet/validate.hpp"

#include <algorithm>
#include <map>

namespace bnet
{

std::string_view to_string( Severity severity )
{
    switch ( severity )
    {
    case Severity::info:
        return "info";
    case Severity::warning:
        return "warning";
    case Severity::error:
        return "error";
    }
    return "unknown";
}

bool ValidationReport::has_errors() const
{
    return count( Severity::error ) > 0;
}

std::size_t ValidationReport::count( Severity severity ) const
{
    return static_cast<std::size_t>( std::count_if( findings.begin(), findings.end(),
                                                    [ & ]( const Finding& f ) { return f.severity == severity; } ) );
}

ValidationReport validate_network( const BooleanNetwork& net )
{
    ValidationReport report;
    auto add = [ & ]( Severity severity, std::optional<GeneId> gene, std::string message ) {
        report.findings.push_back( { severity, gene, std::move( message ) } );
    };

    const auto& genes = net.genes();
    const auto& functions = net.functions();

    if ( genes.size() > max_width )
        add( Severity::error, std::nullopt,
             "network has " + std::to_string( genes.size() ) + " genes; at most " + std::to_string( max_width )
                     + " are supported" );

    std::map<std::string, std::uint32_t> first_seen;
    for ( std::uint32_t i = 0; i < genes.size(); ++i )
    {
        const auto [ it, inserted ] = first_seen.emplace( genes[ i ].name, i );
        if ( !inserted )
            add( Severity::error, GeneId{ i }, "duplicate gene name '" + genes[ i ].name + "'" );
        if ( genes[ i ].input )
            add( Severity::info, GeneId{ i },
                 "gene '" + genes[ i ].name + "' has no function in the source and keeps its value" );
    }

    for ( std::size_t j = functions.size(); j < genes.size(); ++j )
        add( Severity::error, GeneId{ static_cast<std::uint32_t>( j ) },
             "gene '" + genes[ j ].name + "' has no function" );
    if ( functions.size() > genes.size() )
        add( Severity::error, std::nullopt,
             std::to_string( functions.size() - genes.size() ) + " function(s) have no gene" );

    for ( std::size_t j = 0; j < functions.size(); ++j )
    {
        const std::optional<GeneId> owner = j < genes.size()
                                                    ? std::optional<GeneId>{ GeneId{ static_cast<std::uint32_t>( j ) } }
                                                    : std::nullopt;
        const std::string label = owner ? "'" + genes[ j ].name + "'" : "#" + std::to_string( j );
        const auto& terms = functions[ j ].terms;
        for ( std::size_t t = 0; t < terms.size(); ++t )
        {
            bool out_of_range = false;
            for ( const auto& lit : terms[ t ].literals )
            {
                if ( lit.gene.index >= genes.size() )
                {
                    out_of_range = true;
                    add( Severity::error, owner,
                         "function of " + label + " references undeclared gene index "
                                 + std::to_string( lit.gene.index ) );
                }
            }
            if ( !out_of_range && is_contradictory( terms[ t ] ) )
                add( Severity::warning, owner,
                     "term " + std::to_string( t + 1 ) + " of " + label + " is unsatisfiable" );
        }
    }

    return report;
}

} // namespace bnet
