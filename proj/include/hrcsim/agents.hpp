#pragma once

#include <span>
#include <string>

#include "hrcsim/environment.hpp"

namespace hrcsim {

enum class RobotState { Laying, Moving, Starved, Blocked, Done };
enum class WorkerState { Working, Walking, Checking, Fetching, Supplying, Resting, Idle };

const char* to_string(RobotState s);
const char* to_string(WorkerState s);

// Exponential accumulation / recovery fatigue.
// F in [0,1]; working drives F toward 1, resting decays it toward 0.
struct FatigueParams {
    bool enabled = false;
    double lambda_per_s = 0;  // accumulation rate
    double mu_per_s = 0;      // recovery rate
    double alpha = 0;         // performance loss at F=1 is alpha (before the floor)
    double m_min = 0.1;       // multiplier floor
};

struct FatigueState {
    double level = 0;  // F
};

// Closed forms:
//   working: F' = 1 - (1-F) e^{-lambda t}
//   resting: F' = F e^{-mu t}
FatigueState fatigue_evolve(FatigueState s, const FatigueParams& p, double duration_s, bool working);

// max(m_min, 1 - alpha F); exactly 1 when fatigue is disabled.
double performance_multiplier(FatigueState s, const FatigueParams& p);

double effective_duration(double nominal_s, FatigueState s, const FatigueParams& p);

struct ForgettingParams {
    bool enabled = false;
    double p_skip = 0;             // probability a scheduled check epoch is skipped
    double extra_delay_mean_s = 0; // exponential mean lateness when not skipped
};

// What the robot should do next, evaluated at a decision point.
struct LayDecision {
    enum class Kind { Lay, Move, Starve, Block } kind;
    double target_m = 0;    // brick position for Lay/Move
    std::string why;        // set for Block
};

struct RobotView {
    int buffer_level = 0;
    int backlog_limit = 0;
    double safety_radius_m = 0;
    double reach_m = 0;
    double position_m = 0;
};

// Guard order is load-bearing: Block (backlog or safety) wins over Starve,
// Starve wins over Lay. hazard_positions are workers currently at the wall face.
LayDecision robot_try_lay(const RobotView& r, const Wall& w, std::span<const double> hazard_positions);

}  // namespace hrcsim
