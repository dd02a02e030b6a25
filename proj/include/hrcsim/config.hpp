#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hrcsim/agents.hpp"
#include "hrcsim/collaboration.hpp"

namespace hrcsim {

enum class ScenarioKind { Srsw, Mrsw, Mrmw };
enum class PhaseMode { Even, Random };

const char* to_string(ScenarioKind k);
const char* to_string(PhaseMode m);

struct WallSpec {
    double origin_m = 0;
    int courses = 4;
    int bricks_per_course = 50;
    double brick_pitch_m = 0.25;
};

struct StorageSpec {
    double position_m = -15.0;
    long long stock = 0;
    bool unlimited = true;
};

struct SiteSpec {
    std::vector<WallSpec> walls;
    std::vector<StorageSpec> storages;
    double wall_spacing_m = 30.0;  // used when one wall spec is replicated per robot/team
};

struct RobotParams {
    double lay_time_s = 18.0;
    double move_speed_mps = 1.0;
    double safety_radius_m = 0.2;  // below brick pitch: adjacent-brick work is allowed
    double reach_m = 0.3;
    int buffer_capacity = 60;
    int initial_buffer = -1;  // -1: start full
    int backlog_limit = 10;
};

struct EmrParams {
    double walk_speed_mps = 1.2;
    double clean_time_s = 25.0;
    FatigueParams fatigue;
};

struct BsParams {
    double walk_speed_mps = 1.2;
    double load_time_s = 2.0;  // per brick, both loading and unloading
    int carry_capacity = 12;
    FatigueParams fatigue;
    ForgettingParams forgetting;
};

struct CollaborationParams {
    CollabMode mode = CollabMode::Passive;
    double ci_s = 600.0;
    int sl = 10;
    bool mutual_help = false;
    double reaction_delay_s = 0.0;
    PhaseMode phase = PhaseMode::Even;
    bool zero_cost_check = false;   // checks observe remotely: no walk, no check time
    double check_duration_s = 5.0;
    bool proactive_heartbeat = false;  // keep CI checks alive in proactive mode
};

struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::Srsw;
    int teams = 1;
    int robots = 1;
};

struct RunParams {
    std::uint64_t master_seed = 1;
    double time_cap_s = 864000.0;  // 10 days
    std::vector<std::uint64_t> team_seeds;  // optional: one per team, overrides derivation
};

struct SweepSpec {
    std::vector<double> ci_s;
    std::vector<int> sl;
    std::vector<CollabMode> modes;
    int replications = 20;
};

struct SimConfig {
    SiteSpec site;
    RobotParams robot;
    EmrParams emr;
    BsParams bs;
    CollaborationParams collaboration;
    ScenarioSpec scenario;
    RunParams run;
    std::optional<SweepSpec> sweep;

    int n_robots() const { return scenario.kind == ScenarioKind::Mrsw ? scenario.robots : scenario.teams; }
    int n_bs_workers() const { return scenario.kind == ScenarioKind::Mrmw ? scenario.teams : 1; }
};

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

  private:
    std::vector<std::string> violations_;
};

SimConfig default_config();

// Parses JSON text (full-line # comments allowed), validates and normalizes.
// Collects every violation before throwing ConfigError.
SimConfig parse_config(const std::string& json_text);
SimConfig parse_config_file(const std::string& path);

// Canonical JSON of a normalized config; parse(serialize(c)) == c.
std::string serialize_config(const SimConfig& cfg);

// Default config as commented JSON for --print-defaults.
std::string annotated_defaults();

std::uint64_t config_hash(const SimConfig& cfg);

}  // namespace hrcsim
