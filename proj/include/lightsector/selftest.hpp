#pragma once

#include <cstdint>
#include <iosfwd>

namespace lightsector {

/// Runs the library's invariant suite on seeded random instances and the
/// built-in scenarios, printing one PASS/FAIL line per property.
/// Returns true iff every property holds.
bool run_selftest(std::ostream& out, std::uint64_t seed = 20261016);

}  // namespace lightsector
