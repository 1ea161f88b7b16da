#pragma once

#include <ostream>

namespace appell {

enum class SelftestLevel { quick, full };

/// Runs the invariant suites, one "PASS name" / "FAIL name" line each.
/// Returns true when every check passes.
bool run_selftest(SelftestLevel level, std::ostream &log);

} // namespace appell
