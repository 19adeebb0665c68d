#include "bnet/report.hpp"
#include "bnet/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

namespace bnet
{

namespace
{

std::vector<std::string> render_states( const std::vector<Configuration>& states )
{
    std::vector<std::string> out;
    out.reserve( states.size() );
    for ( const auto& x : states )
        out.push_back( x.to_string() );
    return out;
}

double round_to_millis( double seconds )
{
    return std::round( seconds * 1000.0 ) / 1000.0;
}

std::string join( const std::vector<std::string>& parts, const std::string& sep )
{
    std::string out;
    for ( std::size_t i = 0; i < parts.size(); ++i )
        out += ( i > 0 ? sep : "" ) + parts[ i ];
    return out;
}

} // namespace

std::string_view to_string( EngineKind engine )
{
    return engine == EngineKind::bounded ? "bounded" : "explicit";
}

std::optional<EngineKind> parse_engine_kind( std::string_view text )
{
    if ( text == "bounded" )
        return EngineKind::bounded;
    if ( text == "explicit" )
        return EngineKind::explicit_graph;
    return std::nullopt;
}

void to_json( nlohmann::json& j, const ReportedAttractor& a )
{
    j = nlohmann::json{ { "kind", a.kind }, { "period", a.period }, { "states", a.states } };
}

void from_json( const nlohmann::json& j, ReportedAttractor& a )
{
    j.at( "kind" ).get_to( a.kind );
    j.at( "period" ).get_to( a.period );
    j.at( "states" ).get_to( a.states );
}

void to_json( nlohmann::json& j, const RunReport& r )
{
    j = nlohmann::json{ { "network", r.network },
                        { "genes", r.genes },
                        { "mode", r.mode },
                        { "engine", r.engine },
                        { "attractors", r.attractors },
                        { "unstable_cycles", r.unstable_cycles },
                        { "complex_attractors", r.complex_attractors },
                        { "warnings", r.warnings },
                        { "seconds", r.seconds },
                        { "final_length", nullptr } };
    if ( r.final_length )
        j[ "final_length" ] = *r.final_length;
}

void from_json( const nlohmann::json& j, RunReport& r )
{
    j.at( "network" ).get_to( r.network );
    j.at( "genes" ).get_to( r.genes );
    j.at( "mode" ).get_to( r.mode );
    j.at( "engine" ).get_to( r.engine );
    j.at( "attractors" ).get_to( r.attractors );
    j.at( "unstable_cycles" ).get_to( r.unstable_cycles );
    r.complex_attractors = j.value( "complex_attractors", std::vector<ReportedAttractor>{} );
    r.warnings = j.value( "warnings", std::vector<std::string>{} );
    j.at( "seconds" ).get_to( r.seconds );
    if ( j.at( "final_length" ).is_null() )
        r.final_length.reset();
    else
        r.final_length = j.at( "final_length" ).get<std::size_t>();
}

ReportedAttractor report_attractor( const Attractor& attractor )
{
    return { std::string{ to_string( attractor.kind() ) }, attractor.period(), render_states( attractor.states() ) };
}

std::string render_text( const RunReport& report, bool show_unstable )
{
    std::ostringstream out;
    out << "network:    " << report.network << "\n";
    out << "genes:      " << report.genes << "\n";
    out << "mode:       " << report.mode << "\n";
    out << "engine:     " << report.engine << "\n";
    out << "attractors: " << report.attractors.size() << "\n";
    for ( const auto& a : report.attractors )
        out << "  " << std::left << std::setw( 13 ) << a.kind << " period " << std::setw( 4 ) << a.period
            << join( a.states, " -> " ) << "\n";
    if ( !report.complex_attractors.empty() )
    {
        out << "complex attractors: " << report.complex_attractors.size() << "\n";
        for ( const auto& a : report.complex_attractors )
            out << "  " << a.states.size() << " states: " << join( a.states, " " ) << "\n";
    }
    if ( show_unstable && report.final_length )
    {
        out << "unstable cycles: " << report.unstable_cycles.size() << "\n";
        for ( const auto& c : report.unstable_cycles )
            out << "  " << join( c, " -> " ) << "\n";
    }
    if ( report.final_length )
        out << "final path length: " << *report.final_length << "\n";
    out << "time (s):   " << std::fixed << std::setprecision( 3 ) << report.seconds << "\n";
    for ( const auto& w : report.warnings )
        out << "warning: " << w << "\n";
    return out.str();
}

RunReport run_engine( const BooleanNetwork& net, const RunOptions& options )
{
    RunReport report;
    report.network = options.network_name;
    report.genes = net.size();
    report.mode = std::string{ to_string( options.config.mode ) };
    report.engine = std::string{ to_string( options.engine ) };

    const auto started = std::chrono::steady_clock::now();
    if ( options.engine == EngineKind::bounded )
    {
        const auto found = find_all_attractors( net, options.config );
        for ( const auto& a : found.attractors )
            report.attractors.push_back( report_attractor( a ) );
        if ( options.report_unstable )
            for ( const auto& c : found.unstable_cycles_seen )
                report.unstable_cycles.push_back( render_states( c ) );
        report.warnings = found.warnings;
        report.final_length = found.final_length;
    }
    else
    {
        const auto graph = build_transition_graph( net, options.config.mode, options.config.workers );
        for ( const auto& a : classify_attractors( graph ) )
        {
            if ( a.kind() == AttractorKind::complex )
                report.complex_attractors.push_back( report_attractor( a ) );
            else
                report.attractors.push_back( report_attractor( a ) );
        }
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    report.seconds = round_to_millis( elapsed.count() );
    return report;
}

Comparison compare_engines( const BooleanNetwork& net, const RunOptions& options )
{
    Comparison out;
    RunOptions opts = options;
    opts.engine = EngineKind::explicit_graph;
    out.explicit_graph = run_engine( net, opts );
    opts.engine = EngineKind::bounded;
    out.bounded = run_engine( net, opts );

    auto keys = []( const std::vector<ReportedAttractor>& list ) {
        std::set<std::pair<std::string, std::vector<std::string>>> found;
        for ( const auto& a : list )
            found.emplace( a.kind, a.states );
        return found;
    };
    const auto bounded_keys = keys( out.bounded.attractors );
    const auto explicit_keys = keys( out.explicit_graph.attractors );
    for ( const auto& a : out.bounded.attractors )
        if ( !explicit_keys.contains( { a.kind, a.states } ) )
            out.only_bounded.push_back( a );
    for ( const auto& a : out.explicit_graph.attractors )
        if ( !bounded_keys.contains( { a.kind, a.states } ) )
            out.only_explicit.push_back( a );
    return out;
}

} // namespace bnet
