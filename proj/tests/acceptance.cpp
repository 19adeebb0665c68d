// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include "support.hpp"

#include "bnet/cli.hpp"
#include "bnet/engine.hpp"
#include "bnet/oracle.hpp"
#include "bnet/parser.hpp"
#include "bnet/report.hpp"

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace bnet;

namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since( Clock::time_point start )
{
    return std::chrono::duration<double>( Clock::now() - start ).count();
}

int failures = 0;

void report( bool ok, const std::string& name, const std::string& detail )
{
    std::cout << ( ok ? "PASS " : "FAIL " ) << name << ": " << detail << std::endl;
    failures += ok ? 0 : 1;
}

std::set<test::Key> keys_of( const std::vector<Attractor>& attractors )
{
    std::set<test::Key> out;
    for ( const auto& a : attractors )
    {
        if ( a.kind() == AttractorKind::complex )
            continue;
        std::vector<std::string> states;
        for ( const auto& x : a.states() )
            states.push_back( x.to_string() );
        out.emplace( std::string{ to_string( a.kind() ) }, states );
    }
    return out;
}

EngineConfig config( UpdateMode mode )
{
    EngineConfig c;
    c.mode = mode;
    return c;
}

// Frozen ground truth for E1, written out by hand.
const std::set<test::Key> e1_sync_expected{ { "fixed_point", { "00" } }, { "stable_cycle", { "01", "10" } } };
const std::set<test::Key> e1_async_expected{ { "fixed_point", { "00" } } };

void e1_synchronous()
{
    const auto start = Clock::now();
    const auto net = test::e1();
    const auto bounded = keys_of( find_all_attractors( net, config( UpdateMode::synchronous ) ).attractors );
    const auto oracle = keys_of( classify_attractors( build_transition_graph( net, UpdateMode::synchronous ) ) );
    const double elapsed = seconds_since( start );
    report( bounded == e1_sync_expected && oracle == e1_sync_expected && elapsed < 1.0, "e1-synchronous",
            "bounded " + std::to_string( bounded.size() ) + " / explicit " + std::to_string( oracle.size() )
                    + " attractors {00, 01->10}, " + std::to_string( elapsed ) + " s" );
}

void e1_asynchronous()
{
    const auto start = Clock::now();
    const auto net = test::e1();
    const auto found = find_all_attractors( net, config( UpdateMode::asynchronous ) );
    const auto bounded = keys_of( found.attractors );
    const auto oracle = keys_of( classify_attractors( build_transition_graph( net, UpdateMode::asynchronous ) ) );
    const double elapsed = seconds_since( start );

    // The unstable cycle must be a cycle of the oracle's graph that is not terminal.
    bool cycle_ok = found.unstable_cycles_seen.size() == 1 && found.unstable_cycles_seen[ 0 ].size() == 2;
    std::string cycle_text;
    if ( cycle_ok )
    {
        const auto graph = build_transition_graph( net, UpdateMode::asynchronous );
        const auto& cycle = found.unstable_cycles_seen[ 0 ];
        bool leaves = false;
        for ( std::size_t k = 0; k < cycle.size(); ++k )
        {
            const auto here = static_cast<StateIndex>( cycle[ k ].bits() );
            const auto next = static_cast<StateIndex>( cycle[ ( k + 1 ) % cycle.size() ].bits() );
            const auto succ = graph.successors( here );
            cycle_ok = cycle_ok && std::find( succ.begin(), succ.end(), next ) != succ.end();
            leaves = leaves || succ.size() > 1;
            cycle_text += ( k ? "," : "" ) + cycle[ k ].to_string();
        }
        cycle_ok = cycle_ok && leaves;
    }
    report( bounded == e1_async_expected && oracle == e1_async_expected && cycle_ok && elapsed < 1.0,
            "e1-asynchronous",
            "both engines {00}; unstable cycles " + std::to_string( found.unstable_cycles_seen.size() ) + " {"
                    + cycle_text + "}, " + std::to_string( elapsed ) + " s" );
}

struct RandomSweep
{
    std::size_t networks = 0;
    std::size_t runs = 0;
    std::size_t disagreements = 0;
    std::size_t sync_cycles = 0;
    std::size_t unstable_sync_cycles = 0;
    std::size_t bound_violations = 0;
    std::size_t not_exhausted = 0;
    std::size_t paths_audited = 0;
    std::size_t excluded_hits = 0;
    double seconds = 0.0;
};

// After the run, the engine's blocked set is the attractor states plus the
// pruned non-attractor states. Halting means no path avoids it.
bool exhausted( const BooleanNetwork& net, UpdateMode mode, const AttractorSet& found,
                const std::set<test::Key>& oracle )
{
    ExclusionSet blocked;
    for ( const auto& a : found.attractors )
        blocked.add( a );
    // Pruning must never touch a real attractor.
    for ( const auto& x : found.pruned_states )
        for ( const auto& [ kind, states ] : oracle )
            if ( std::find( states.begin(), states.end(), x.to_string() ) != states.end() )
                return false;
    if ( !found.pruned_states.empty() )
        blocked.add( Attractor::complex( found.pruned_states ) );
    bool any = false;
    enumerate_paths( net, mode, found.final_length, blocked, [ & ]( const PathAssignment& ) {
        any = true;
        return false;
    } );
    return !any;
}

RandomSweep random_sweep()
{
    RandomSweep sweep;
    const auto start = Clock::now();
    for ( std::uint64_t seed = 5000; seed < 5250; ++seed )
    {
        const auto net = test::random_network( seed );
        ++sweep.networks;
        for ( const auto mode : { UpdateMode::synchronous, UpdateMode::asynchronous } )
        {
            ++sweep.runs;
            EngineObserver observer;
            observer.on_path = [ & ]( const PathAssignment& path, const ExclusionSet& excl ) {
                ++sweep.paths_audited;
                for ( const auto& x : path.configs )
                    sweep.excluded_hits += excl.contains( x ) ? 1 : 0;
            };
            observer.on_cycle = [ & ]( const std::vector<Configuration>& cycle, bool stable ) {
                if ( mode != UpdateMode::synchronous )
                    return;
                ++sweep.sync_cycles;
                if ( !stable || !check_stability( net, cycle, mode ) )
                    ++sweep.unstable_sync_cycles;
            };

            const auto found = find_all_attractors( net, config( mode ), observer );
            const auto graph = build_transition_graph( net, mode );
            const auto oracle = keys_of( classify_attractors( graph ) );
            const auto brute = test::brute_attractors( net, mode == UpdateMode::asynchronous ).attractors;
            if ( keys_of( found.attractors ) != oracle || oracle != brute )
                ++sweep.disagreements;

            const auto profile = depth_profile( graph );
            if ( found.final_length > 2 * ( profile.max_transient + profile.max_period ) )
                ++sweep.bound_violations;
            if ( !exhausted( net, mode, found, oracle ) )
                ++sweep.not_exhausted;
        }
    }
    sweep.seconds = seconds_since( start );
    return sweep;
}

void negation_correctness()
{
    std::mt19937_64 rng{ 424242 };
    test::RandomShape shape;
    shape.max_terms = 6;
    std::size_t failures_seen = 0;
    const std::size_t rounds = 600;
    for ( std::size_t round = 0; round < rounds; ++round )
    {
        const std::uint32_t n = 1 + static_cast<std::uint32_t>( round % 10 );
        const Dnf d = test::random_dnf( rng, n, shape );
        const Dnf neg = negate_dnf( d );
        for ( std::uint64_t x = 0; x < ( std::uint64_t{ 1 } << n ); ++x )
            if ( test::brute_eval( neg, x ) == test::brute_eval( d, x ) )
            {
                ++failures_seen;
                break;
            }
    }
    report( failures_seen == 0, "dnf-negation",
            std::to_string( rounds ) + " random DNFs over n <= 10, " + std::to_string( failures_seen ) + " failures" );
}

std::string scratch_dir()
{
    const auto dir = std::filesystem::temp_directory_path() / "bnet_acceptance";
    std::filesystem::create_directories( dir );
    return dir.string();
}

void medium_networks()
{
    // The bundled 10-11 gene files plus a few more written on the spot.
    std::vector<std::string> files;
    for ( const auto& entry : std::filesystem::directory_iterator{ BNET_DATA_DIR } )
        if ( entry.path().extension() == ".bnet" )
            files.push_back( entry.path().string() );
    std::sort( files.begin(), files.end() );
    for ( std::uint64_t seed = 1; seed <= 4; ++seed )
    {
        test::RandomShape shape;
        shape.min_genes = shape.max_genes = seed % 2 ? 10 : 11;
        const auto path = scratch_dir() + "/generated" + std::to_string( seed ) + ".bnet";
        std::ofstream{ path } << format_network( test::random_network( 77000 + seed, shape ) );
        files.push_back( path );
    }

    std::size_t checked = 0;
    std::size_t mismatches = 0;
    double slowest = 0.0;
    for ( const auto& path : files )
    {
        std::ifstream in{ path };
        std::stringstream text;
        text << in.rdbuf();
        const auto net = parse_network( text.str() );
        if ( net.size() < 10 || net.size() > 11 )
            continue;
        ++checked;
        for ( const auto mode : { "sync", "async" } )
        {
            std::ostringstream out;
            std::ostringstream err;
            const auto start = Clock::now();
            const int code = run_cli( { "bnet", "find", "--input", path, "--mode", mode, "--output", "json" }, out, err );
            const double elapsed = seconds_since( start );
            slowest = std::max( slowest, elapsed );
            if ( code != exit_code::ok || elapsed >= 10.0 )
            {
                ++mismatches;
                continue;
            }
            const auto j = nlohmann::json::parse( out.str() );
            const auto oracle = classify_attractors(
                    build_transition_graph( net, *parse_update_mode( mode ) ) );
            if ( j.at( "attractors" ).size() != keys_of( oracle ).size() )
                ++mismatches;
        }
    }
    std::ostringstream detail;
    detail << checked << " files of 10-11 genes, both modes, " << mismatches << " count mismatches or slow runs, "
           << "slowest " << slowest << " s";
    report( checked >= 4 && mismatches == 0, "medium-networks", detail.str() );
}

} // namespace

int main()
{
    e1_synchronous();
    e1_asynchronous();

    const auto sweep = random_sweep();
    report( sweep.disagreements == 0 && sweep.networks >= 200 && sweep.seconds < 600.0, "oracle-equivalence",
            std::to_string( sweep.networks ) + " random networks x 2 modes, " + std::to_string( sweep.disagreements )
                    + " disagreements, " + std::to_string( sweep.seconds ) + " s" );

    negation_correctness();

    report( sweep.unstable_sync_cycles == 0, "synchronous-cycles-stable",
            std::to_string( sweep.sync_cycles ) + " synchronous cycles, " + std::to_string( sweep.unstable_sync_cycles )
                    + " failed check_stability" );

    report( sweep.bound_violations == 0 && sweep.not_exhausted == 0, "termination-bound",
            std::to_string( sweep.runs ) + " runs, " + std::to_string( sweep.bound_violations )
                    + " over 2(T+P), " + std::to_string( sweep.not_exhausted ) + " halted with a path still available" );

    medium_networks();

    report( sweep.excluded_hits == 0 && sweep.paths_audited > 0, "exclusion-audit",
            std::to_string( sweep.paths_audited ) + " paths audited, " + std::to_string( sweep.excluded_hits )
                    + " excluded states seen" );

    return failures == 0 ? 0 : 1;
}
