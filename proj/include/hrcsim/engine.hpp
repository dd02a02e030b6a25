#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hrcsim {

using SimTime = double;  // seconds since run start

enum class EventKind { TimerExpired, SignalReceived, TaskComplete };

const char* to_string(EventKind k);

// Opaque ticket for a scheduled event. Value 0 is never issued.
struct EventHandle {
    std::uint64_t id = 0;
    explicit operator bool() const { return id != 0; }
};

struct Event {
    SimTime fire_time = 0;
    std::uint64_t sequence_no = 0;  // insertion order, breaks fire_time ties FIFO
    int target_agent = -1;
    EventKind kind = EventKind::TimerExpired;
};

// Priority event queue ordered by (fire_time, sequence_no).
// Cancellation is lazy: cancelled entries are skipped on pop.
class Scheduler {
  public:
    using Action = std::function<void()>;

    SimTime now() const { return now_; }

    // Throws std::logic_error if fire_time < now(): causality would break.
    EventHandle schedule(SimTime fire_time, int target_agent, EventKind kind, Action action);

    // True if the event was still pending; false if it already fired or was cancelled.
    bool cancel(EventHandle h);

    bool empty();

    // Fire time of the next pending event. Pre: !empty().
    SimTime peek_time();

    // Pops and runs the next event. Returns false if the queue was empty.
    bool step();

    std::uint64_t events_fired() const { return fired_; }

  private:
    struct QueueKey {
        SimTime t;
        std::uint64_t seq;
        std::uint64_t id;
        bool operator>(const QueueKey& o) const {
            if (t != o.t) return t > o.t;
            return seq > o.seq;
        }
    };
    struct Pending {
        Event ev;
        Action action;
    };

    void drop_cancelled();

    SimTime now_ = 0;
    std::uint64_t next_seq_ = 1;
    std::uint64_t fired_ = 0;
    std::priority_queue<QueueKey, std::vector<QueueKey>, std::greater<QueueKey>> queue_;
    std::unordered_map<std::uint64_t, Pending> pending_;
};

// splitmix64: the standard 64-bit seed scrambler.
std::uint64_t splitmix64(std::uint64_t& state);

// Derives a child seed from a master seed and a component path.
// Same path always yields the same child; distinct paths decorrelate.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);
std::uint64_t derive_seed(std::uint64_t master, const std::vector<std::uint64_t>& path);

}  // namespace hrcsim
