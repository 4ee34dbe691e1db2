#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace resolve {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Reference-example golden checks followed by randomized property checks on
/// `random_count` seeded ideals.
std::vector<CheckResult> run_selftest(std::uint64_t seed, std::size_t random_count);

}  // namespace resolve
