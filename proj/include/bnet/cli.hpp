#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnet
{

namespace exit_code
{
inline constexpr int ok = 0;
// Unreadable input, parse or validation errors, bad arguments.
inline constexpr int input_error = 1;
// Size guardrails, term caps, path length cap.
inline constexpr int capacity_error = 2;
// `compare` ran fine but the two engines disagree.
inline constexpr int disagreement = 3;
} // namespace exit_code

// Entry point behind the `bnet` executable. args[0] is the program name.
int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace bnet
