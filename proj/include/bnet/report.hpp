#pragma once

#include "bnet/attractor.hpp"
#include "bnet/engine.hpp"
#include "bnet/network.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bnet
{

enum class EngineKind
{
    bounded,
    explicit_graph
};

[[nodiscard]] std::string_view to_string( EngineKind engine );
[[nodiscard]] std::optional<EngineKind> parse_engine_kind( std::string_view text );

struct ReportedAttractor
{
    std::string kind;
    std::size_t period = 0;
    // Gene 0 first, one character per gene.
    std::vector<std::string> states;

    friend bool operator==( const ReportedAttractor&, const ReportedAttractor& ) = default;
};

struct RunReport
{
    std::string network;
    std::size_t genes = 0;
    std::string mode;
    std::string engine;
    // Fixed points and stable cycles, sorted by (kind, key).
    std::vector<ReportedAttractor> attractors;
    std::vector<std::vector<std::string>> unstable_cycles;
    // Explicit engine only.
    std::vector<ReportedAttractor> complex_attractors;
    std::vector<std::string> warnings;
    // Wall clock, rounded to milliseconds.
    double seconds = 0.0;
    // Bounded engine only.
    std::optional<std::size_t> final_length;

    friend bool operator==( const RunReport&, const RunReport& ) = default;
};

void to_json( nlohmann::json& j, const ReportedAttractor& a );
void from_json( const nlohmann::json& j, ReportedAttractor& a );
void to_json( nlohmann::json& j, const RunReport& r );
void from_json( const nlohmann::json& j, RunReport& r );

[[nodiscard]] ReportedAttractor report_attractor( const Attractor& attractor );

[[nodiscard]] std::string render_text( const RunReport& report, bool show_unstable );

struct RunOptions
{
    std::string network_name;
    EngineKind engine = EngineKind::bounded;
    EngineConfig config;
    bool report_unstable = false;
};

// Runs one engine and packages the result. Engine exceptions propagate.
[[nodiscard]] RunReport run_engine( const BooleanNetwork& net, const RunOptions& options );

struct Comparison
{
    RunReport bounded;
    RunReport explicit_graph;
    std::vector<ReportedAttractor> only_bounded;
    std::vector<ReportedAttractor> only_explicit;

    [[nodiscard]] bool agree() const { return only_bounded.empty() && only_explicit.empty(); }
};

// Matches the two engines' fixed points and stable cycles by canonical key.
[[nodiscard]] Comparison compare_engines( const BooleanNetwork& net, const RunOptions& options );

} // namespace bnet
