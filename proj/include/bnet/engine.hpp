#pragma once

#include "bnet/attractor.hpp"
#include "bnet/errors.hpp"
#include "bnet/network.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace bnet
{

// Which gene moved between two consecutive configurations of a path.
struct ScheduleStep
{
    enum class Kind
    {
        all,    // synchronous update
        gene,   // asynchronous update of `gene`
        stutter // fixed point: nothing can change
    };

    Kind kind = Kind::all;
    GeneId gene;

    [[nodiscard]] static ScheduleStep everything() { return { Kind::all, {} }; }
    [[nodiscard]] static ScheduleStep update( GeneId gene ) { return { Kind::gene, gene }; }
    [[nodiscard]] static ScheduleStep stutter() { return { Kind::stutter, {} }; }

    friend bool operator==( const ScheduleStep&, const ScheduleStep& ) = default;
};

// A bounded orbit: configs.size() == schedule.size() + 1.
struct PathAssignment
{
    std::vector<Configuration> configs;
    std::vector<ScheduleStep> schedule;

    [[nodiscard]] std::size_t length() const { return schedule.size(); }

    friend bool operator==( const PathAssignment&, const PathAssignment& ) = default;
};

// States of the attractors found so far. Grows monotonically.
class ExclusionSet
{
public:
    [[nodiscard]] bool contains( const Configuration& x ) const { return states_.contains( x ); }
    [[nodiscard]] std::size_t size() const { return states_.size(); }
    [[nodiscard]] bool empty() const { return states_.empty(); }
    [[nodiscard]] const std::unordered_set<Configuration, ConfigurationHash>& states() const { return states_; }

    // Throws InvariantError if any state is already excluded.
    void add( const Attractor& attractor );

private:
    std::unordered_set<Configuration, ConfigurationHash> states_;
};

[[nodiscard]] ExclusionSet exclude_attractor( ExclusionSet excl, const Attractor& attractor );

struct EngineConfig
{
    UpdateMode mode = UpdateMode::synchronous;
    std::size_t initial_length = 1;
    std::size_t length_cap = std::size_t{ 1 } << 20;
    unsigned workers = 1;
};

struct AttractorSet
{
    // Sorted by (kind, key).
    std::vector<Attractor> attractors;
    // Asynchronous cycles that failed the stability check, canonically rotated
    // and in discovery order.
    std::vector<std::vector<Configuration>> unstable_cycles_seen;
    // Non-attractor states the search was closed to: unstable cycles and the
    // transient prefixes of closed paths. Sorted.
    std::vector<Configuration> pruned_states;
    std::vector<std::string> warnings;
    std::size_t final_length = 0;
    std::size_t paths_examined = 0;
};

// Thrown when the path length would pass EngineConfig::length_cap.
class ResourceError : public Error
{
public:
    ResourceError( std::string message, AttractorSet partial, std::size_t cap )
            : Error( std::move( message ) ), partial_{ std::move( partial ) }, cap_{ cap }
    {
    }

    [[nodiscard]] const AttractorSet& partial() const { return partial_; }
    [[nodiscard]] std::size_t cap() const { return cap_; }

private:
    AttractorSet partial_;
    std::size_t cap_;
};

// Hooks for instrumented runs. Called from the coordinating thread only.
struct EngineObserver
{
    // Every path the engine examines, with the exclusions in force when it was produced.
    std::function<void( const PathAssignment&, const ExclusionSet& )> on_path;
    // Every cycle extracted from a path, with its stability verdict.
    std::function<void( const std::vector<Configuration>&, bool )> on_cycle;
};

using PathVisitor = std::function<bool( const PathAssignment& )>;

// Streams every path of `length` steps that avoids `excl`, in order of
// initial configuration (lexicographic) and then updated gene (ascending).
// A path ends early, after fewer steps, at the first step that revisits one
// of its own configurations; a fixed point revisits itself by stuttering.
// The visitor returns false to stop the stream.
void enumerate_paths( const BooleanNetwork& net, UpdateMode mode, std::size_t length, const ExclusionSet& excl,
                      const PathVisitor& visit );

[[nodiscard]] std::vector<PathAssignment> enumerate_paths( const BooleanNetwork& net, UpdateMode mode,
                                                           std::size_t length, const ExclusionSet& excl );

// Largest i < t with configs[i] == configs[t], where t is the path length.
// i == t-1 is a fixed point; smaller i a candidate cycle configs[i..t-1].
[[nodiscard]] std::optional<std::size_t> detect_repeat( const PathAssignment& path );

// The cycle closed by the repeat at `i`, in path order. If the closed walk
// passes through some state twice, the innermost simple cycle is returned.
[[nodiscard]] std::vector<Configuration> extract_cycle( const PathAssignment& path, std::size_t i );

// A single state must be a fixed point. Longer cycles must be cycles of the
// dynamics (DomainError otherwise); synchronous ones are always stable.
[[nodiscard]] bool check_stability( const BooleanNetwork& net, const std::vector<Configuration>& cycle,
                                    UpdateMode mode );

// Bounded path search with length doubling. Finds every fixed point and every
// stable cycle; asynchronous complex attractors are out of reach and produce
// a warning when nothing else exists.
[[nodiscard]] AttractorSet find_all_attractors( const BooleanNetwork& net, const EngineConfig& config,
                                                const EngineObserver& observer = {} );

} // namespace bnet
