#include "hrcsim/collaboration.hpp"

#include <stdexcept>

namespace hrcsim {

const char* to_string(CollabMode m) {
    return m == CollabMode::Passive ? "passive" : "proactive";
}

int select_robot(std::span<const RobotSnapshot> robots, int own_robot_id, bool mutual_help) {
    const RobotSnapshot* own = nullptr;
    for (const auto& r : robots)
        if (r.id == own_robot_id) own = &r;

    if (!mutual_help) return (own && !own->done) ? own_robot_id : -1;

    const RobotSnapshot* best = nullptr;
    bool any_live = false;
    for (const auto& r : robots) {
        if (r.done) continue;
        any_live = true;
        if (r.supply_inflight) continue;
        if (!best || r.buffer_level < best->buffer_level ||
            (r.buffer_level == best->buffer_level && r.id < best->id))
            best = &r;
    }
    if (best) return best->id;
    if (!any_live) return -1;
    // Every live robot already has help coming; fall back to checking our own.
    return (own && !own->done) ? own_robot_id : -1;
}

std::vector<int> plan_supply_trips(int planned_bricks, int carry_capacity) {
    if (carry_capacity <= 0) throw std::invalid_argument("carry_capacity must be > 0");
    std::vector<int> trips;
    for (int left = planned_bricks; left > 0; left -= carry_capacity)
        trips.push_back(left < carry_capacity ? left : carry_capacity);
    return trips;
}

}  // namespace hrcsim
