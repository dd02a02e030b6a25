#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hrcsim {

enum class AgentKind { Robot, Emr, Bs };
const char* to_string(AgentKind k);

// Union of robot and worker state labels; one color/label table serves both.
enum class StateLabel {
    Laying, Moving, Starved, Blocked, Done,          // robot
    Working, Walking, Checking, Fetching, Supplying, // workers
    Resting, Idle
};
const char* to_string(StateLabel s);
bool is_interruption(StateLabel s);  // Starved or Blocked

struct AgentInfo {
    std::string id;    // e.g. "robot_0", "emr_1", "bs_0"
    AgentKind kind = AgentKind::Robot;
    int team = 0;
};

struct StateInterval {
    StateLabel state = StateLabel::Idle;
    double start_s = 0;
    double end_s = 0;
};

struct CheckMark {
    double t_s = 0;
    int robot_agent = -1;   // agent index in StateTimeline::agents
    int worker_agent = -1;
    bool converted = false;  // false: redundant check
};

// Run-level tallies the intervals alone cannot carry.
struct RunMeta {
    std::uint64_t config_hash = 0;
    std::uint64_t master_seed = 0;
    bool completed = false;
    bool deadlocked = false;
    bool time_capped = false;
    bool storage_exhausted = false;
    std::string diagnostic;
    long long total_demand = 0;
    long long bricks_laid = 0;
    long long bricks_cleaned = 0;
    long long initial_stock = 0;   // finite storages only
    long long final_stock = 0;
    long long initial_buffer = 0;
    long long final_buffer = 0;
    long long delivered = 0;       // bricks unloaded into robot buffers
    long long loaded = 0;          // bricks taken from finite storages
    long long in_transit = 0;      // carried by workers at the end of the run
};

struct StateTimeline {
    std::vector<AgentInfo> agents;
    std::vector<std::vector<StateInterval>> intervals;  // parallel to agents
    std::vector<CheckMark> checks;                      // in time order
    RunMeta meta;
    double makespan_s = 0;
};

// Collects transitions during a run and freezes them into a StateTimeline.
class TimelineRecorder {
  public:
    int add_agent(AgentInfo info, StateLabel initial);
    // Closes the agent's open interval at t and opens `state`.
    // Throws std::logic_error on out-of-order times. Zero-width intervals are dropped.
    void record_transition(int agent, StateLabel state, double t);
    void record_check(double t, int robot_agent, int worker_agent, bool converted);
    StateLabel current_state(int agent) const;
    StateTimeline finish(double makespan, RunMeta meta);

  private:
    struct Open {
        StateLabel state;
        double since;
    };
    std::vector<AgentInfo> agents_;
    std::vector<std::vector<StateInterval>> intervals_;
    std::vector<Open> open_;
    std::vector<CheckMark> checks_;
};

struct RunMetrics {
    double makespan_s = 0;
    long long bricks_laid = 0;
    double cp_per_h = 0;             // bricks_laid / makespan * 3600
    double robot_utilization = 0;    // mean over robots of Laying share of active span
    double starved_s = 0;            // summed over robots
    double blocked_s = 0;
    long long interruption_count = 0;  // maximal Starved|Blocked intervals over all robots
    long long check_count = 0;
    long long redundant_check_count = 0;
    std::map<std::string, double> gci_per_robot;  // mean gap between check arrivals
    double gci_mean_s = 0;           // NaN when no robot received two checks
    std::optional<double> improvement_vs_baseline;
};

// Pure function of the timeline; recomputation reproduces results exactly.
RunMetrics compute_metrics(const StateTimeline& tl);

// One row per interval: agent_id,agent_kind,state,start_s,end_s
void write_gantt_csv(const StateTimeline& tl, std::ostream& out);

extern const char* const kMetricsCsvHeader;

struct MetricsRowKey {
    std::string scenario;
    std::string mode;
    double ci_s = 0;
    int sl = 0;
    int teams = 1;
    int replication = 0;
    std::uint64_t seed = 0;
};

void write_metrics_row(const MetricsRowKey& key, const RunMetrics& m, std::ostream& out);

std::string format_double(double v);

}  // namespace hrcsim
