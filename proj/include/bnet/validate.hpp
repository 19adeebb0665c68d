#pragma once

#include "bnet/network.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bnet
{

enum class Severity
{
    info,
    warning,
    error
};

[[nodiscard]] std::string_view to_string( Severity severity );

struct Finding
{
    Severity severity = Severity::info;
    std::optional<GeneId> gene;
    std::string message;
};

struct ValidationReport
{
    std::vector<Finding> findings;

    [[nodiscard]] bool has_errors() const;
    [[nodiscard]] std::size_t count( Severity severity ) const;
};

// Reports duplicate gene names, out-of-range literals, contradictory terms,
// a function count that does not match the gene count, and implicit input
// genes.
[[nodiscard]] ValidationReport validate_network( const BooleanNetwork& net );

} // namespace bnet
