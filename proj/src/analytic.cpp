#include "hrcsim/analytic.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "hrcsim/engine.hpp"
#include "hrcsim/stats.hpp"

namespace hrcsim {

double expected_gci(int n_workers, double ci_s) {
    if (n_workers < 1) throw std::invalid_argument("n_workers must be >= 1");
    if (!(ci_s > 0)) throw std::invalid_argument("ci_s must be > 0");
    // n superposed periodic streams have total rate n/ci, so the mean gap is ci/n.
    return ci_s / n_workers;
}

GapStats gci_gap_stats(int n_workers, double ci_s, long long samples, std::uint64_t seed) {
    if (n_workers < 1) throw std::invalid_argument("n_workers must be >= 1");
    if (!(ci_s > 0)) throw std::invalid_argument("ci_s must be > 0");
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");

    std::mt19937_64 rng(derive_seed(seed, {0x676369ULL}));
    std::uniform_real_distribution<double> u(0.0, ci_s);

    RunningStat stat;
    const int periods = 64;  // horizon per phase draw
    std::vector<double> events;
    events.reserve(static_cast<std::size_t>(n_workers) * periods);
    while (stat.count() < static_cast<std::size_t>(samples)) {
        events.clear();
        for (int w = 0; w < n_workers; ++w) {
            const double phase = u(rng);
            for (int k = 0; k < periods; ++k) events.push_back(phase + k * ci_s);
        }
        std::sort(events.begin(), events.end());
        // Trim one period at each end so the window sees the stationary stream.
        const double lo = ci_s, hi = (periods - 1) * ci_s;
        double prev = -1;
        for (double t : events) {
            if (t < lo || t > hi) continue;
            if (prev >= 0) stat.add(t - prev);
            prev = t;
        }
    }

    GapStats out;
    out.mean_s = stat.mean();
    out.stddev_s = stat.stddev();
    out.samples = static_cast<long long>(stat.count());
    return out;
}

}  // namespace hrcsim
