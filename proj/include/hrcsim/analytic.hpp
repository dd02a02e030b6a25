#pragma once

#include <cstdint>

namespace hrcsim {

// Mean interval between checks a robot receives when n workers' periodic
// check schedules (period ci, independent phases) superpose.
double expected_gci(int n_workers, double ci_s);

struct GapStats {
    double mean_s = 0;
    double stddev_s = 0;
    long long samples = 0;
};

// Monte-Carlo oracle for the superposition law: draws uniform phases,
// merges the n periodic event grids and measures consecutive gaps.
GapStats gci_gap_stats(int n_workers, double ci_s, long long samples, std::uint64_t seed);

}  // namespace hrcsim
