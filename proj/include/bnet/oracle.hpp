#pragma once

#include "bnet/attractor.hpp"
#include "bnet/network.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bnet
{

inline constexpr std::uint32_t max_sync_graph_width = 24;
inline constexpr std::uint32_t max_async_graph_width = 20;

using StateIndex = std::uint32_t;

// Explicit transition graph over all 2^n configurations, indexed by
// Configuration::bits(). Self-loops are never stored, so out-degree 0 marks
// a fixed point.
class TransitionGraph
{
public:
    TransitionGraph( UpdateMode mode, std::uint32_t width, std::vector<std::uint32_t> offsets,
                     std::vector<StateIndex> targets );

    [[nodiscard]] UpdateMode mode() const { return mode_; }
    [[nodiscard]] std::uint32_t width() const { return width_; }
    [[nodiscard]] std::size_t state_count() const { return offsets_.size() - 1; }
    [[nodiscard]] std::size_t edge_count() const { return targets_.size(); }

    [[nodiscard]] std::span<const StateIndex> successors( StateIndex state ) const
    {
        return { targets_.data() + offsets_[ state ], targets_.data() + offsets_[ state + 1 ] };
    }
    [[nodiscard]] std::size_t out_degree( StateIndex state ) const
    {
        return offsets_[ state + 1 ] - offsets_[ state ];
    }

    [[nodiscard]] Configuration configuration( StateIndex state ) const { return Configuration{ state, width_ }; }

private:
    UpdateMode mode_;
    std::uint32_t width_;
    std::vector<std::uint32_t> offsets_;
    std::vector<StateIndex> targets_;
};

// Throws CapacityError past max_sync_graph_width / max_async_graph_width.
// The state space is split across `workers` threads; the result does not
// depend on the worker count.
[[nodiscard]] TransitionGraph build_transition_graph( const BooleanNetwork& net, UpdateMode mode,
                                                      unsigned workers = 1 );

struct SccDecomposition
{
    // Component id per state. Ids are in reverse topological order: every
    // edge between components goes from a higher id to a lower one.
    std::vector<std::uint32_t> component;
    std::uint32_t count = 0;
};

[[nodiscard]] SccDecomposition strongly_connected_components( const TransitionGraph& graph );

// SCCs with no edge leaving them, each sorted by state index; the list is
// ordered by smallest member.
[[nodiscard]] std::vector<std::vector<StateIndex>> terminal_sccs( const TransitionGraph& graph );

// Every terminal SCC as a fixed point, stable cycle or complex attractor,
// sorted by (kind, key).
[[nodiscard]] std::vector<Attractor> classify_attractors( const TransitionGraph& graph );

struct DepthProfile
{
    // Largest total size of non-attractor SCCs along any chain of the
    // condensation. In synchronous mode this is the longest transient.
    std::size_t max_transient = 0;
    // Longest fixed-point / stable-cycle period (0 if there is none).
    std::size_t max_period = 0;
};

// Attractor here means fixed point or stable cycle; complex terminal SCCs
// count as transient.
[[nodiscard]] DepthProfile depth_profile( const TransitionGraph& graph );

// Graphviz rendering with binary state labels and filled attractor states.
[[nodiscard]] std::string export_dot( const TransitionGraph& graph, const std::vector<Attractor>& attractors,
                                      const std::string& title );

} // namespace bnet
