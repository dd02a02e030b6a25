#pragma once

#include "hrcsim/config.hpp"
#include "hrcsim/metrics.hpp"

namespace hrcsim {

struct RunResult {
    StateTimeline timeline;
    RunMetrics metrics;
    bool completed = false;
    bool deadlocked = false;
    bool time_capped = false;
    std::string diagnostic;
};

// Executes one deterministic run of the configured scenario.
RunResult run_simulation(const SimConfig& cfg);

}  // namespace hrcsim
