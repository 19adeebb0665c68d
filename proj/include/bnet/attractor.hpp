#pragma once

#include "bnet/network.hpp"

#include <string_view>
#include <vector>

namespace bnet
{

enum class AttractorKind
{
    fixed_point,
    stable_cycle,
    // Terminal SCC that is neither a fixed point nor a simple cycle. Only the
    // explicit oracle produces these.
    complex
};

[[nodiscard]] std::string_view to_string( AttractorKind kind );
[[nodiscard]] std::optional<AttractorKind> parse_attractor_kind( std::string_view text );

// States are kept in canonical order: cycles are rotated to start at their
// lexicographically smallest state and keep the dynamics' order from there;
// complex attractors are sorted. The state list is the canonical key.
class Attractor
{
public:
    [[nodiscard]] static Attractor fixed_point( Configuration state );
    // `states` in dynamics order, starting anywhere on the cycle.
    [[nodiscard]] static Attractor cycle( std::vector<Configuration> states );
    [[nodiscard]] static Attractor complex( std::vector<Configuration> states );

    [[nodiscard]] AttractorKind kind() const { return kind_; }
    [[nodiscard]] const std::vector<Configuration>& states() const { return states_; }
    [[nodiscard]] const std::vector<Configuration>& key() const { return states_; }

    // 1 for fixed points, cycle length for cycles, 0 for complex attractors.
    [[nodiscard]] std::size_t period() const;

    [[nodiscard]] bool contains( const Configuration& x ) const;

    friend bool operator==( const Attractor&, const Attractor& ) = default;
    // (kind, key)
    friend bool operator<( const Attractor& lhs, const Attractor& rhs );

private:
    Attractor( AttractorKind kind, std::vector<Configuration> states )
            : kind_{ kind }, states_{ std::move( states ) }
    {
    }

    AttractorKind kind_ = AttractorKind::fixed_point;
    std::vector<Configuration> states_;
};

// Rotates a cycle to start at its smallest state.
[[nodiscard]] std::vector<Configuration> canonical_rotation( std::vector<Configuration> cycle );

// Throws DomainError unless `cycle` is a cycle of the dynamics: at least two
// distinct states of the network's width, each followed by one of its
// successors (the last wrapping to the first).
void require_cycle( const BooleanNetwork& net, const std::vector<Configuration>& cycle, UpdateMode mode );

// True iff every state's complete successor set is exactly {next state}.
[[nodiscard]] bool is_stable_cycle( const BooleanNetwork& net, const std::vector<Configuration>& cycle,
                                    UpdateMode mode );

} // namespace bnet
