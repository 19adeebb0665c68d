#include "bnet/cli.hpp"
#include "bnet/errors.hpp"
#include "bnet/oracle.hpp"
#include "bnet/parser.hpp"
#include "bnet/report.hpp"
#include "bnet/validate.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace bnet
{

namespace
{

constexpr std::uint32_t max_dot_width = 12;

struct Options
{
    std::string input;
    std::string mode = "sync";
    std::string engine = "bounded";
    std::size_t initial_length = 1;
    std::size_t length_cap = std::size_t{ 1 } << 20;
    std::string output = "text";
    std::string dot;
    unsigned workers = 1;
    bool report_unstable = false;
};

// Failure that maps straight onto an exit code.
struct Exit
{
    int code;
};

struct LoadedNetwork
{
    std::string name;
    BooleanNetwork net;
};

LoadedNetwork load( const std::string& path, std::ostream& err )
{
    std::ifstream in{ path };
    if ( !in )
    {
        err << "error: cannot read '" << path << "'\n";
        throw Exit{ exit_code::input_error };
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    LoadedNetwork loaded{ std::filesystem::path{ path }.stem().string(), {} };
    try
    {
        loaded.net = parse_network( buffer.str() );
    }
    catch ( const ParseError& e )
    {
        err << path << ":" << e.line() << ":" << e.column() << ": error: " << e.message()
            << ( e.token().empty() ? "" : " near '" + e.token() + "'" ) << "\n";
        throw Exit{ exit_code::input_error };
    }
    catch ( const SemanticError& e )
    {
        err << path << ": error: " << e.what() << "\n";
        throw Exit{ exit_code::input_error };
    }

    const auto report = validate_network( loaded.net );
    for ( const auto& f : report.findings )
        if ( f.severity != Severity::info )
            err << path << ": " << to_string( f.severity ) << ": " << f.message << "\n";
    if ( report.has_errors() )
        throw Exit{ exit_code::input_error };
    return loaded;
}

UpdateMode mode_of( const Options& o )
{
    return parse_update_mode( o.mode ).value();
}

RunOptions run_options( const Options& o, const std::string& name )
{
    RunOptions run;
    run.network_name = name;
    run.engine = parse_engine_kind( o.engine ).value();
    run.config.mode = mode_of( o );
    run.config.initial_length = o.initial_length;
    run.config.length_cap = o.length_cap;
    run.config.workers = o.workers;
    run.report_unstable = o.report_unstable;
    return run;
}

void write_dot( const LoadedNetwork& loaded, UpdateMode mode, unsigned workers, const std::string& path,
                std::ostream& out, std::ostream& err )
{
    if ( loaded.net.size() > max_dot_width )
    {
        err << "error: DOT export is limited to " << max_dot_width << " genes; network has " << loaded.net.size()
            << "\n";
        throw Exit{ exit_code::capacity_error };
    }
    const auto graph = build_transition_graph( loaded.net, mode, workers );
    const auto dot = export_dot( graph, classify_attractors( graph ), loaded.name );
    if ( path.empty() || path == "-" )
    {
        out << dot;
        return;
    }
    std::ofstream file{ path };
    if ( !file || !( file << dot ) )
    {
        err << "error: cannot write '" << path << "'\n";
        throw Exit{ exit_code::input_error };
    }
}

int cmd_find( const Options& o, std::ostream& out, std::ostream& err )
{
    const auto loaded = load( o.input, err );
    const auto report = run_engine( loaded.net, run_options( o, loaded.name ) );
    if ( o.output == "json" )
        out << nlohmann::json( report ).dump( 2 ) << "\n";
    else
        out << render_text( report, o.report_unstable );
    for ( const auto& w : report.warnings )
        err << "warning: " << w << "\n";
    if ( !o.dot.empty() )
        write_dot( loaded, mode_of( o ), o.workers, o.dot, out, err );
    return exit_code::ok;
}

int cmd_compare( const Options& o, std::ostream& out, std::ostream& err )
{
    const auto loaded = load( o.input, err );
    const auto cmp = compare_engines( loaded.net, run_options( o, loaded.name ) );

    if ( o.output == "json" )
    {
        nlohmann::json j{ { "network", loaded.name },
                          { "mode", o.mode },
                          { "agree", cmp.agree() },
                          { "bounded", cmp.bounded },
                          { "explicit", cmp.explicit_graph },
                          { "only_bounded", cmp.only_bounded },
                          { "only_explicit", cmp.only_explicit } };
        out << j.dump( 2 ) << "\n";
    }
    else
    {
        out << "network:  " << loaded.name << "\n";
        out << "mode:     " << o.mode << "\n";
        out << "bounded:  " << cmp.bounded.attractors.size() << " attractor(s) in " << cmp.bounded.seconds
            << " s\n";
        out << "explicit: " << cmp.explicit_graph.attractors.size() << " attractor(s) in "
            << cmp.explicit_graph.seconds << " s\n";
        for ( const auto& a : cmp.only_bounded )
            out << "  only bounded:  " << a.kind << " " << a.states.front() << "\n";
        for ( const auto& a : cmp.only_explicit )
            out << "  only explicit: " << a.kind << " " << a.states.front() << "\n";
        out << ( cmp.agree() ? "agree" : "DISAGREE" ) << "\n";
    }
    return cmp.agree() ? exit_code::ok : exit_code::disagreement;
}

int cmd_export_dot( const Options& o, std::ostream& out, std::ostream& err )
{
    const auto loaded = load( o.input, err );
    write_dot( loaded, mode_of( o ), o.workers, o.dot, out, err );
    return exit_code::ok;
}

int cmd_validate( const Options& o, std::ostream& out, std::ostream& err )
{
    std::ifstream in{ o.input };
    if ( !in )
    {
        err << "error: cannot read '" << o.input << "'\n";
        return exit_code::input_error;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    BooleanNetwork net;
    try
    {
        net = parse_network( buffer.str() );
    }
    catch ( const ParseError& e )
    {
        err << o.input << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << "\n";
        return exit_code::input_error;
    }
    catch ( const SemanticError& e )
    {
        err << o.input << ": error: " << e.what() << "\n";
        return exit_code::input_error;
    }

    const auto report = validate_network( net );
    out << net.size() << " genes";
    std::size_t inputs = 0;
    for ( const auto& g : net.genes() )
        inputs += g.input ? 1 : 0;
    out << " (" << inputs << " input)\n";
    for ( const auto& f : report.findings )
        out << to_string( f.severity ) << ": " << f.message << "\n";
    out << report.count( Severity::error ) << " error(s), " << report.count( Severity::warning ) << " warning(s)\n";
    return report.has_errors() ? exit_code::input_error : exit_code::ok;
}

} // namespace

int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Attractor analysis of Boolean networks", "bnet" };
    app.require_subcommand( 1 );

    Options o;
    const std::vector<std::string> modes{ "sync", "async" };

    auto add_common = [ & ]( CLI::App* cmd ) {
        cmd->add_option( "--input", o.input, "Network file (targets, factors)" )->required();
        cmd->add_option( "--mode", o.mode, "Update mode" )->check( CLI::IsMember( modes ) );
        cmd->add_option( "--workers", o.workers, "Worker threads" )->check( CLI::Range( 1u, 256u ) );
    };
    auto add_engine = [ & ]( CLI::App* cmd ) {
        cmd->add_option( "--initial-length", o.initial_length, "Initial path length" )
                ->check( CLI::PositiveNumber );
        cmd->add_option( "--length-cap", o.length_cap, "Largest path length before giving up" )
                ->check( CLI::PositiveNumber );
        cmd->add_option( "--output", o.output, "Report format" )->check( CLI::IsMember( { "text", "json" } ) );
        cmd->add_flag( "--report-unstable", o.report_unstable, "Include unstable cycles seen by the bounded engine" );
    };

    auto* find = app.add_subcommand( "find", "Enumerate attractors" );
    add_common( find );
    add_engine( find );
    find->add_option( "--engine", o.engine, "Search engine" )->check( CLI::IsMember( { "bounded", "explicit" } ) );
    find->add_option( "--dot", o.dot, "Also write the transition graph as DOT" );

    auto* compare = app.add_subcommand( "compare", "Run both engines and match their attractors" );
    add_common( compare );
    add_engine( compare );

    auto* dot = app.add_subcommand( "export-dot", "Write the transition graph as DOT" );
    add_common( dot );
    dot->add_option( "--dot", o.dot, "Output path (stdout if omitted)" );

    auto* validate = app.add_subcommand( "validate", "Parse and check a network file" );
    validate->add_option( "--input", o.input, "Network file" )->required();

    std::vector<const char*> argv;
    for ( const auto& a : args )
        argv.push_back( a.c_str() );

    try
    {
        app.parse( static_cast<int>( argv.size() ), argv.data() );
    }
    catch ( const CLI::CallForHelp& )
    {
        out << app.help();
        return exit_code::ok;
    }
    catch ( const CLI::CallForAllHelp& )
    {
        out << app.help( "", CLI::AppFormatMode::All );
        return exit_code::ok;
    }
    catch ( const CLI::ParseError& e )
    {
        err << "error: " << e.what() << "\n";
        return exit_code::input_error;
    }

    try
    {
        if ( find->parsed() )
            return cmd_find( o, out, err );
        if ( compare->parsed() )
            return cmd_compare( o, out, err );
        if ( dot->parsed() )
            return cmd_export_dot( o, out, err );
        return cmd_validate( o, out, err );
    }
    catch ( const Exit& e )
    {
        return e.code;
    }
    catch ( const ResourceError& e )
    {
        err << "error: " << e.what() << "\n";
        for ( const auto& a : e.partial().attractors )
            err << "  found before stopping: " << to_string( a.kind() ) << " " << a.states().front().to_string()
                << "\n";
        return exit_code::capacity_error;
    }
    catch ( const CapacityError& e )
    {
        err << "error: " << e.what() << "\n";
        return exit_code::capacity_error;
    }
    catch ( const Error& e )
    {
        err << "error: " << e.what() << "\n";
        return exit_code::input_error;
    }
}

} // namespace bnet
