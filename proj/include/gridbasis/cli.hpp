#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridbasis {

/// Runs one CLI invocation (args exclude the program name) and writes results
/// to `out`, diagnostics to `err`.
///
/// Exit codes: 0 success (basic / solvable / holds / minimal); 2 malformed
/// input or usage; 3 mathematical negative (non-basic, infeasible system,
/// failed conjecture, not minimal); 4 search request refused as infeasible.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gridbasis
