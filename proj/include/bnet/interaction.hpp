#pragma once

#include "bnet/network.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace bnet
{

enum class Sign : std::uint8_t
{
    positive,
    negative
};

struct SignedArc
{
    GeneId source;
    Sign sign = Sign::positive;
    GeneId target;

    friend auto operator<=>( const SignedArc&, const SignedArc& ) = default;
};

struct InteractionGraph
{
    // Sorted by (source, sign, target), no duplicates.
    std::vector<SignedArc> arcs;
    // Set when some function had too many regulators to probe and its arcs
    // were read off the literals instead.
    bool approximate = false;
};

struct InteractionOptions
{
    // Maximum number of distinct regulators probed exhaustively per function.
    std::size_t probe_limit = 24;
    // When false, exceeding probe_limit throws CapacityError instead of
    // falling back to the syntactic scan.
    bool allow_syntactic_fallback = true;
};

// Arc (i,+,j) iff flipping x_i from 0 to 1 raises f_j for some x; (i,-,j) iff
// it lowers f_j for some x. Both may hold.
[[nodiscard]] InteractionGraph derive_interaction_graph( const BooleanNetwork& net,
                                                         const InteractionOptions& options = {} );

} // namespace bnet
