#include "hrcsim/agents.hpp"

#include <algorithm>
#include <cmath>

namespace hrcsim {

const char* to_string(RobotState s) {
    switch (s) {
        case RobotState::Laying: return "Laying";
        case RobotState::Moving: return "Moving";
        case RobotState::Starved: return "Starved";
        case RobotState::Blocked: return "Blocked";
        case RobotState::Done: return "Done";
    }
    return "?";
}

const char* to_string(WorkerState s) {
    switch (s) {
        case WorkerState::Working: return "Working";
        case WorkerState::Walking: return "Walking";
        case WorkerState::Checking: return "Checking";
        case WorkerState::Fetching: return "Fetching";
        case WorkerState::Supplying: return "Supplying";
        case WorkerState::Resting: return "Resting";
        case WorkerState::Idle: return "Idle";
    }
    return "?";
}

FatigueState fatigue_evolve(FatigueState s, const FatigueParams& p, double duration_s, bool working) {
    if (!p.enabled || duration_s <= 0) return s;
    if (working) {
        s.level = 1.0 - (1.0 - s.level) * std::exp(-p.lambda_per_s * duration_s);
    } else {
        s.level = s.level * std::exp(-p.mu_per_s * duration_s);
    }
    s.level = std::clamp(s.level, 0.0, 1.0);
    return s;
}

double performance_multiplier(FatigueState s, const FatigueParams& p) {
    if (!p.enabled) return 1.0;
    return std::max(p.m_min, 1.0 - p.alpha * s.level);
}

double effective_duration(double nominal_s, FatigueState s, const FatigueParams& p) {
    return nominal_s / performance_multiplier(s, p);
}

LayDecision robot_try_lay(const RobotView& r, const Wall& w, std::span<const double> hazard_positions) {
    if (w.backlog() >= r.backlog_limit)
        return {LayDecision::Kind::Block, 0,
                "backlog " + std::to_string(w.backlog()) + " at limit " + std::to_string(r.backlog_limit)};
    const double target = brick_position(w, w.lay_cursor);
    for (double h : hazard_positions) {
        if (std::abs(h - target) < r.safety_radius_m)  // strict: at exactly the radius laying proceeds
            return {LayDecision::Kind::Block, target, "worker inside safety radius of next brick"};
    }
    if (r.buffer_level == 0) return {LayDecision::Kind::Starve, target, ""};
    if (std::abs(r.position_m - target) > r.reach_m) return {LayDecision::Kind::Move, target, ""};
    return {LayDecision::Kind::Lay, target, ""};
}

}  // namespace hrcsim
