#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gem/colored_graph.hpp"
#include "gem/complex.hpp"
#include "gem/invariants.hpp"
#include "json.hpp"

namespace gem {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // invalid graph, failed check, not a bubble
  kExitParse = 2,    // unreadable input or bad command line
  kExitBudget = 3,
};

/// Runs the command line `gem <args...>` (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::ordered_json invariant_report_json(const InvariantReport& r);
nlohmann::ordered_json cert_json(const CertStatus& s);
/// Everything `gem info` prints for a connected graph.
nlohmann::ordered_json info_json(const ColoredGraph& g);

}  // namespace gem
