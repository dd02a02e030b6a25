#pragma once

#include <span>
#include <vector>

namespace hrcsim {

enum class CollabMode { Passive, Proactive };

const char* to_string(CollabMode m);

// Supply is warranted when the buffer has fallen to the supply limit.
inline bool decide_supply(int buffer_level, int supply_limit) {
    return buffer_level <= supply_limit;
}

struct RobotSnapshot {
    int id = 0;
    int buffer_level = 0;
    bool done = false;
    bool supply_inflight = false;
};

// Picks the robot a worker should serve next.
//   mutual help off: always the worker's own robot (-1 if it is done).
//   mutual help on: lowest buffer among robots that are neither done nor already
//   being resupplied; ties break on lowest id; falls back to the worker's own
//   robot when every live robot has a supply in flight; -1 when all are done.
int select_robot(std::span<const RobotSnapshot> robots, int own_robot_id, bool mutual_help);

// Splits a planned delivery into trip loads, e.g. 50 bricks at carry 12
// -> {12, 12, 12, 12, 2}. Empty when planned <= 0.
std::vector<int> plan_supply_trips(int planned_bricks, int carry_capacity);

}  // namespace hrcsim
