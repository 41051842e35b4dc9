#pragma once

#include <map>
#include <ostream>
#include <string>

#include "rootclust/geometry.hpp"

namespace rootclust {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitSolver = 2 };

/// Parses "name:k=v,k=v" into a family name and integer parameters.
/// Throws std::invalid_argument on malformed input.
std::pair<std::string, std::map<std::string, long>> parse_family_spec(const std::string& spec);

/// Parses "cx,cy,w" with exact decimal or rational components.
Box parse_roi(const std::string& text);

/// Command-line entry point; the report goes to `out` (or --out-path),
/// diagnostics to `err`. Returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rootclust
