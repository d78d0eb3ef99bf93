#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chsh {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Runs every library invariant (linear algebra identities, POVM form
// equivalences, closed-form vs matrix-path agreement, the brute-force
// bound theorems, region consistency) with deterministic pseudo-random
// sweeps derived from `seed`.
std::vector<CheckResult> run_verification(std::uint64_t seed = 20'240'817);

}  // namespace chsh
