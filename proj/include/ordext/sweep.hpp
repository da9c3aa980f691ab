#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace ordext {

struct SweepFailure {
    std::string invariant;
    std::string problem;  // serialized reproducer
};

struct SweepLevelStats {
    int n = 0;
    std::size_t partial_orders = 0;
    std::size_t partitions = 0;
    std::size_t cases = 0;
    std::size_t failures = 0;
};

struct SweepReport {
    std::vector<SweepLevelStats> levels;
    std::map<std::string, std::size_t> failures_by_invariant;
    std::vector<SweepFailure> reproducers;  // first few failures
    std::size_t total_cases = 0;
    std::size_t total_failures = 0;
    bool ok() const { return total_failures == 0; }
};

struct SuiteReport {
    std::size_t orders = 0;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<SweepFailure> reproducers;
    bool ok() const { return failures == 0; }
};

inline constexpr int kTheoremSweepCap = 4;
inline constexpr int kSuiteCap = 5;

/// Exhaustive (partial order, partition) sweep checking every theorem-level
/// contract against the brute-force oracle. Throws CapacityError above the
/// sweep cap.
SweepReport run_theorem_sweep(int max_n);

/// Every partial order, every incomparable forced pair: the extension is a
/// perfect order containing both.
SuiteReport run_szpilrajn_suite(int max_n);

/// Every partial order equals the intersection of its perfect extensions.
SuiteReport run_perfect_intersection_suite(int max_n);

}  // namespace ordext
