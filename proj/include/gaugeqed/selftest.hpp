#pragma once

#include <ostream>

namespace gaugeqed {

/// Runs the cross-module invariant suite with fixed seeds, printing one
/// pass/fail line per property. Returns true iff every property holds.
bool run_selftest(std::ostream& out);

}  // namespace gaugeqed
