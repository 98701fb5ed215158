#pragma once

#include <cstdint>
#include <ostream>

namespace qclone {

/// Randomised property checks over the library, one PASS/FAIL line each.
/// Returns true when every property holds.
bool run_selftest(std::uint64_t seed, std::ostream& os);

}  // namespace qclone
