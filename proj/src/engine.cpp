#include "hrcsim/engine.hpp"

namespace hrcsim {

const char* to_string(EventKind k) {
    switch (k) {
        case EventKind::TimerExpired: return "TimerExpired";
        case EventKind::SignalReceived: return "SignalReceived";
        case EventKind::TaskComplete: return "TaskComplete";
    }
    return "?";
}

EventHandle Scheduler::schedule(SimTime fire_time, int target_agent, EventKind kind, Action action) {
    if (fire_time < now_)
        throw std::logic_error("schedule: fire_time " + std::to_string(fire_time) +
                               " is before now " + std::to_string(now_));
    const std::uint64_t seq = next_seq_++;
    const std::uint64_t id = seq;
    queue_.push(QueueKey{fire_time, seq, id});
    pending_.emplace(id, Pending{Event{fire_time, seq, target_agent, kind}, std::move(action)});
    return EventHandle{id};
}

bool Scheduler::cancel(EventHandle h) {
    // Heap entry stays behind; drop_cancelled() skips it later.
    return pending_.erase(h.id) > 0;
}

void Scheduler::drop_cancelled() {
    while (!queue_.empty() && !pending_.count(queue_.top().id)) queue_.pop();
}

bool Scheduler::empty() {
    drop_cancelled();
    return queue_.empty();
}

SimTime Scheduler::peek_time() {
    drop_cancelled();
    if (queue_.empty()) throw std::logic_error("peek_time on empty scheduler");
    return queue_.top().t;
}

bool Scheduler::step() {
    drop_cancelled();
    if (queue_.empty()) return false;
    const QueueKey key = queue_.top();
    queue_.pop();
    auto node = pending_.extract(key.id);
    now_ = key.t;
    ++fired_;
    Action action = std::move(node.mapped().action);
    action();  // may schedule or cancel freely
    return true;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
    std::uint64_t state = master;
    std::uint64_t out = splitmix64(state);
    for (std::uint64_t component : path) {
        state ^= component * 0xD6E8FEB86659FD93ULL;
        out = splitmix64(state);
    }
    return out;
}

std::uint64_t derive_seed(std::uint64_t master, const std::vector<std::uint64_t>& path) {
    std::uint64_t state = master;
    std::uint64_t out = splitmix64(state);
    for (std::uint64_t component : path) {
        state ^= component * 0xD6E8FEB86659FD93ULL;
        out = splitmix64(state);
    }
    return out;
}

}  // namespace hrcsim
