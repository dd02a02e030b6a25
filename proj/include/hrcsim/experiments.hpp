#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "hrcsim/config.hpp"
#include "hrcsim/metrics.hpp"

namespace hrcsim {

struct SweepRow {
    MetricsRowKey key;
    RunMetrics metrics;
    bool ok = true;       // false: deadlocked, capped or faulted; row kept to stay rectangular
    std::string note;
};

struct SweepTable {
    std::vector<SweepRow> rows;
};

// Stable per-cell seed from grid VALUES, so extending a grid never reseeds
// existing cells.
std::uint64_t cell_seed(std::uint64_t master, ScenarioKind scenario, CollabMode mode, double ci_s,
                        int sl, int replication);

// Runs modes x ci x sl x replications of the base scenario; `jobs` bounds
// concurrency. Row order is the enumeration order regardless of completion.
SweepTable run_sweep(const SimConfig& base, int jobs);

void write_metrics_csv(const SweepTable& table, std::ostream& out);
SweepTable parse_metrics_csv(std::istream& in);

struct Surface {
    std::string scenario;
    std::string mode;
    std::vector<double> ci;
    std::vector<int> sl;
    std::vector<double> mean_makespan;  // row-major: sl rows x ci cols; NaN when absent
    std::string csv;
    std::string svg;
};

// One surface per (scenario, mode) pair present in the table.
std::vector<Surface> ci_sl_surfaces(const SweepTable& table);

struct ImprovementReport {
    bool applicable = false;  // both modes present
    std::string csv;          // ci_s,sl,cp_passive,cp_proactive,improvement
    std::vector<double> improvements;  // one per grid cell
    double median_improvement = 0;
    double min_improvement = 0;
    double max_improvement = 0;
    double fraction_over_20pct = 0;
};

ImprovementReport mode_improvement(const SweepTable& table);

struct ScaleCell {
    std::string mode;
    double ci_s = 0;
    int sl = 0;
    double cp_single = 0;
    double cp_multi = 0;
    int teams = 0;
    double per_team_ratio = 0;  // (cp_multi/teams) / cp_single
};

struct ScaleReport {
    std::string csv;  // mode,ci_s,sl,teams,cp_single,cp_multi,per_team_ratio
    std::vector<ScaleCell> cells;
};

// Pairs a 1-team table against a k-team table on (mode, ci, sl).
ScaleReport scale_effect(const SweepTable& single_team, const SweepTable& multi_team);

// Derives the 1-team control for a MRMW config: first wall/storage, srsw scenario.
SimConfig single_team_baseline(const SimConfig& mrmw);

// Mean measured per-robot GCI from full runs: n teams, mutual help, random
// phases, zero-cost checks, buffers sized so no supply ever triggers.
double simulated_gci(int n_workers, double ci_s, int replications, std::uint64_t seed);

}  // namespace hrcsim
