#include "hrcsim/simulation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <random>
#include <sstream>

#include "hrcsim/collaboration.hpp"
#include "hrcsim/engine.hpp"

namespace hrcsim {

namespace {

struct RobotAgent {
    int idx = 0;
    int agent = 0;  // recorder index
    int team = 0;
    int wall = 0;
    double dock = 0;  // fixed service point where checks and deliveries happen
    double pos = 0;
    int buffer = 0;
    bool busy = false;
    bool supply_pending = false;  // a supply targeting this robot is signalled, queued or underway
    bool done = false;
};

struct Task {
    enum Kind { Patrol, Supply } kind = Patrol;
    int robot = -1;             // Supply target
    std::vector<int> to_visit;  // Patrol: robots not yet checked this round
};

struct BsAgent {
    int idx = 0;
    int agent = 0;
    int team = 0;
    double pos = 0;
    double home = 0;
    int storage = 0;
    int own_robot = 0;
    std::vector<int> service;
    std::deque<Task> tasks;
    bool busy = false;
    bool retired = false;
    double phase = 0;
    long long next_epoch = 0;
    long long carrying = 0;
    FatigueState fat;
    double fat_since = 0;
    std::mt19937_64 rng;
};

struct EmrAgent {
    int idx = 0;
    int agent = 0;
    int team = 0;
    int wall = 0;
    double pos = 0;
    bool busy = false;
    bool at_face = false;
    double face_pos = 0;
    FatigueState fat;
    double fat_since = 0;
};

bool worker_state_is_effort(StateLabel s) {
    return s == StateLabel::Working || s == StateLabel::Walking || s == StateLabel::Checking ||
           s == StateLabel::Fetching || s == StateLabel::Supplying;
}

class Sim {
  public:
    explicit Sim(const SimConfig& cfg) : cfg_(cfg) {}

    RunResult run();

  private:
    // --- setup ---
    void build_site();
    void build_agents();
    std::uint64_t team_seed(int team) const;

    // --- robot ---
    void robot_decide(int ri);
    void set_robot(int ri, StateLabel s) { rec_.record_transition(robots_[ri].agent, s, now()); }
    std::vector<double> hazards(int ri) const;

    // --- EMR ---
    void emr_wake(int ei);
    void set_emr(int ei, StateLabel s);

    // --- BS ---
    void schedule_epoch(int wi);
    void enqueue_patrol(int wi);
    void bs_wake(int wi);
    void bs_finish_task(int wi);
    void patrol_step(int wi);
    void do_check(int wi, int ri, double arrival_t);
    void start_supply(int wi, int ri);
    void supply_trip(int wi, int ri, int remaining);
    void set_bs(int wi, StateLabel s);
    void touch_fatigue_bs(int wi);
    double eff_bs(int wi, double nominal);
    void signal_supply(int ri);
    void retire_bs(int wi);

    // --- run control ---
    void check_completion();
    bool checks_enabled() const {
        return cfg_.collaboration.mode == CollabMode::Passive || cfg_.collaboration.proactive_heartbeat;
    }
    double now() const { return sched_.now(); }
    std::string deadlock_diagnostic() const;

    const SimConfig& cfg_;
    Scheduler sched_;
    TimelineRecorder rec_;
    std::vector<Wall> walls_;
    std::vector<Storage> storages_;
    std::vector<RobotAgent> robots_;
    std::vector<EmrAgent> emrs_;
    std::vector<BsAgent> bss_;
    RunMeta meta_;
    bool finished_ = false;
    double end_time_ = 0;
};

void Sim::build_site() {
    for (const auto& w : cfg_.site.walls) {
        Wall wall;
        wall.origin_m = w.origin_m;
        wall.courses = w.courses;
        wall.bricks_per_course = w.bricks_per_course;
        wall.brick_pitch_m = w.brick_pitch_m;
        walls_.push_back(wall);
        meta_.total_demand += wall.total_bricks();
    }
    for (const auto& s : cfg_.site.storages) {
        Storage st;
        st.position_m = s.position_m;
        st.stock = s.stock;
        st.unlimited = s.unlimited;
        storages_.push_back(st);
        if (!st.unlimited) meta_.initial_stock += st.stock;
    }
}

std::uint64_t Sim::team_seed(int team) const {
    if (!cfg_.run.team_seeds.empty()) return cfg_.run.team_seeds[team];
    return derive_seed(cfg_.run.master_seed, {0x7465616dULL, static_cast<std::uint64_t>(team)});
}

void Sim::build_agents() {
    const int n_robots = cfg_.n_robots();
    const int n_bs = cfg_.n_bs_workers();
    const bool per_team_storage = static_cast<int>(storages_.size()) > 1;

    for (int i = 0; i < n_robots; ++i) {
        RobotAgent r;
        r.idx = i;
        r.team = cfg_.scenario.kind == ScenarioKind::Mrmw ? i : 0;
        r.wall = i;
        r.dock = walls_[i].origin_m;
        r.pos = walls_[i].total_bricks() > 0 ? brick_position(walls_[i], 0) : walls_[i].origin_m;
        r.buffer = cfg_.robot.initial_buffer;
        meta_.initial_buffer += r.buffer;
        r.agent = rec_.add_agent({"robot_" + std::to_string(i), AgentKind::Robot, r.team},
                                 StateLabel::Starved);
        robots_.push_back(r);
    }
    for (int i = 0; i < n_robots; ++i) {
        EmrAgent e;
        e.idx = i;
        e.team = robots_[i].team;
        e.wall = i;
        e.pos = walls_[i].origin_m;
        e.agent = rec_.add_agent({"emr_" + std::to_string(i), AgentKind::Emr, e.team}, StateLabel::Idle);
        emrs_.push_back(e);
    }
    for (int i = 0; i < n_bs; ++i) {
        BsAgent b;
        b.idx = i;
        b.team = cfg_.scenario.kind == ScenarioKind::Mrmw ? i : 0;
        b.storage = per_team_storage ? i : 0;
        b.home = storages_[b.storage].position_m;
        b.pos = b.home;
        b.own_robot = cfg_.scenario.kind == ScenarioKind::Mrmw ? i : 0;
        if (cfg_.scenario.kind == ScenarioKind::Mrmw && !cfg_.collaboration.mutual_help) {
            b.service = {i};
        } else {
            for (int r = 0; r < n_robots; ++r) b.service.push_back(r);
        }
        b.rng.seed(derive_seed(team_seed(b.team), {0x6273ULL}));
        if (cfg_.collaboration.phase == PhaseMode::Even) {
            b.phase = i * cfg_.collaboration.ci_s / n_bs;
        } else {
            std::uniform_real_distribution<double> u(0.0, cfg_.collaboration.ci_s);
            b.phase = u(b.rng);
        }
        b.agent = rec_.add_agent({"bs_" + std::to_string(i), AgentKind::Bs, b.team}, StateLabel::Idle);
        bss_.push_back(b);
    }
}

std::vector<double> Sim::hazards(int ri) const {
    std::vector<double> h;
    const EmrAgent& e = emrs_[robots_[ri].wall];  // wall index == emr index
    if (e.at_face) h.push_back(e.face_pos);
    return h;
}

void Sim::robot_decide(int ri) {
    RobotAgent& r = robots_[ri];
    if (r.busy || r.done || finished_) return;
    Wall& wall = walls_[r.wall];
    if (wall.laid()) {
        r.done = true;
        set_robot(ri, StateLabel::Done);
        check_completion();
        return;
    }
    RobotView view{r.buffer, cfg_.robot.backlog_limit, cfg_.robot.safety_radius_m,
                   cfg_.robot.reach_m, r.pos};
    const auto h = hazards(ri);
    const LayDecision d = robot_try_lay(view, wall, h);
    switch (d.kind) {
        case LayDecision::Kind::Block:
            set_robot(ri, StateLabel::Blocked);
            return;  // re-evaluated on the next input state change
        case LayDecision::Kind::Starve:
            set_robot(ri, StateLabel::Starved);
            return;
        case LayDecision::Kind::Move: {
            set_robot(ri, StateLabel::Moving);
            r.busy = true;
            const double dur = travel_time(r.pos, d.target_m, cfg_.robot.move_speed_mps);
            sched_.schedule(now() + dur, r.agent, EventKind::TaskComplete, [this, ri, t = d.target_m] {
                robots_[ri].busy = false;
                robots_[ri].pos = t;
                robot_decide(ri);
            });
            return;
        }
        case LayDecision::Kind::Lay: {
            set_robot(ri, StateLabel::Laying);
            r.busy = true;
            sched_.schedule(now() + cfg_.robot.lay_time_s, r.agent, EventKind::TaskComplete,
                            [this, ri, t = d.target_m] {
                                RobotAgent& r = robots_[ri];
                                r.busy = false;
                                r.pos = t;
                                --r.buffer;
                                ++walls_[r.wall].lay_cursor;
                                ++meta_.bricks_laid;
                                // At or below SL and nothing pending: signal. Plain
                                // equality would miss the re-arm when deliveries
                                // never lift the buffer back above SL (SL near
                                // capacity), starving the robot for good.
                                if (cfg_.collaboration.mode == CollabMode::Proactive &&
                                    r.buffer <= cfg_.collaboration.sl && !r.done)
                                    signal_supply(ri);
                                emr_wake(r.wall);
                                robot_decide(ri);
                            });
            return;
        }
    }
}

void Sim::set_emr(int ei, StateLabel s) {
    EmrAgent& e = emrs_[ei];
    const StateLabel cur = rec_.current_state(e.agent);
    if (cur != s) {
        e.fat = fatigue_evolve(e.fat, cfg_.emr.fatigue, now() - e.fat_since, worker_state_is_effort(cur));
        e.fat_since = now();
        rec_.record_transition(e.agent, s, now());
    }
}

void Sim::emr_wake(int ei) {
    EmrAgent& e = emrs_[ei];
    if (e.busy || finished_) return;
    Wall& wall = walls_[e.wall];
    if (wall.clean_cursor >= wall.lay_cursor) {
        if (e.at_face) {
            e.at_face = false;
            robot_decide(e.wall);
        }
        set_emr(ei, StateLabel::Idle);
        return;
    }
    const double target = brick_position(wall, wall.clean_cursor);
    // Walk to the brick is folded into the cleaning activity.
    const double nominal = travel_time(e.pos, target, cfg_.emr.walk_speed_mps) + cfg_.emr.clean_time_s;
    set_emr(ei, StateLabel::Working);
    const double dur = effective_duration(nominal, e.fat, cfg_.emr.fatigue);
    e.busy = true;
    e.at_face = true;
    e.face_pos = target;
    robot_decide(e.wall);  // worker entered the safety zone
    sched_.schedule(now() + dur, e.agent, EventKind::TaskComplete, [this, ei, target] {
        EmrAgent& e = emrs_[ei];
        e.busy = false;
        e.pos = target;
        ++walls_[e.wall].clean_cursor;
        ++meta_.bricks_cleaned;
        emr_wake(ei);          // moves the hazard to the next brick or clears it
        robot_decide(e.wall);  // backlog shrank / hazard moved
        check_completion();
    });
}

void Sim::touch_fatigue_bs(int wi) {
    BsAgent& b = bss_[wi];
    const StateLabel cur = rec_.current_state(b.agent);
    b.fat = fatigue_evolve(b.fat, cfg_.bs.fatigue, now() - b.fat_since, worker_state_is_effort(cur));
    b.fat_since = now();
}

void Sim::set_bs(int wi, StateLabel s) {
    if (rec_.current_state(bss_[wi].agent) == s) return;
    touch_fatigue_bs(wi);
    rec_.record_transition(bss_[wi].agent, s, now());
}

double Sim::eff_bs(int wi, double nominal) {
    // Multiplier is sampled at activity start; fatigue itself evolves on transitions.
    return effective_duration(nominal, bss_[wi].fat, cfg_.bs.fatigue);
}

void Sim::schedule_epoch(int wi) {
    if (!checks_enabled()) return;
    BsAgent& b = bss_[wi];
    const double t = b.phase + static_cast<double>(b.next_epoch) * cfg_.collaboration.ci_s;
    ++b.next_epoch;
    sched_.schedule(t, b.agent, EventKind::TimerExpired, [this, wi] {
        BsAgent& b = bss_[wi];
        if (b.retired) return;
        schedule_epoch(wi);  // absolute grid: phase + k*CI regardless of workload
        double delay = 0;
        if (cfg_.bs.forgetting.enabled) {
            std::bernoulli_distribution skip(cfg_.bs.forgetting.p_skip);
            if (skip(b.rng)) return;
            if (cfg_.bs.forgetting.extra_delay_mean_s > 0) {
                std::exponential_distribution<double> late(1.0 / cfg_.bs.forgetting.extra_delay_mean_s);
                delay = late(b.rng);
            }
        }
        if (delay > 0) {
            sched_.schedule(now() + delay, b.agent, EventKind::TimerExpired,
                            [this, wi] { enqueue_patrol(wi); });
        } else {
            enqueue_patrol(wi);
        }
    });
}

void Sim::enqueue_patrol(int wi) {
    BsAgent& b = bss_[wi];
    if (b.retired) return;
    Task t;
    t.kind = Task::Patrol;
    t.to_visit = b.service;
    b.tasks.push_back(std::move(t));
    bs_wake(wi);
}

void Sim::retire_bs(int wi) {
    BsAgent& b = bss_[wi];
    b.retired = true;
    b.tasks.clear();
}

void Sim::bs_wake(int wi) {
    BsAgent& b = bss_[wi];
    if (b.busy || finished_) return;
    if (b.retired || b.tasks.empty()) {
        if (b.pos != b.home) {
            set_bs(wi, StateLabel::Walking);
            b.busy = true;
            const double dur = eff_bs(wi, travel_time(b.pos, b.home, cfg_.bs.walk_speed_mps));
            sched_.schedule(now() + dur, b.agent, EventKind::TaskComplete, [this, wi] {
                bss_[wi].busy = false;
                bss_[wi].pos = bss_[wi].home;
                bs_wake(wi);
            });
        } else {
            set_bs(wi, StateLabel::Idle);
        }
        return;
    }
    Task& t = b.tasks.front();
    if (t.kind == Task::Patrol) {
        patrol_step(wi);
    } else {
        const int ri = t.robot;
        RobotAgent& r = robots_[ri];
        if (r.done) {
            r.supply_pending = false;
            bs_finish_task(wi);
            return;
        }
        const int planned = cfg_.robot.buffer_capacity - r.buffer;
        if (planned <= 0) {
            r.supply_pending = false;
            bs_finish_task(wi);
            return;
        }
        start_supply(wi, ri);
    }
}

void Sim::bs_finish_task(int wi) {
    BsAgent& b = bss_[wi];
    if (!b.tasks.empty()) b.tasks.pop_front();
    bs_wake(wi);
}

// Visits the unchecked robot with the lowest buffer next; done robots drop out.
void Sim::patrol_step(int wi) {
    BsAgent& b = bss_[wi];
    Task& t = b.tasks.front();
    int next = -1;
    for (int ri : t.to_visit) {
        const RobotAgent& r = robots_[ri];
        if (r.done) continue;
        if (next == -1 || r.buffer < robots_[next].buffer ||
            (r.buffer == robots_[next].buffer && ri < next))
            next = ri;
    }
    if (next == -1) {
        bool all_done = true;
        for (int ri : b.service)
            if (!robots_[ri].done) all_done = false;
        if (all_done) retire_bs(wi);
        bs_finish_task(wi);
        return;
    }
    t.to_visit.erase(std::find(t.to_visit.begin(), t.to_visit.end(), next));

    if (cfg_.collaboration.zero_cost_check) {
        do_check(wi, next, now());
        return;
    }
    const double dock = robots_[next].dock;
    if (b.pos != dock) {
        set_bs(wi, StateLabel::Walking);
        b.busy = true;
        const double dur = eff_bs(wi, travel_time(b.pos, dock, cfg_.bs.walk_speed_mps));
        sched_.schedule(now() + dur, b.agent, EventKind::TaskComplete, [this, wi, next, dock] {
            BsAgent& b = bss_[wi];
            b.busy = false;
            b.pos = dock;
            const double arrival = now();
            if (cfg_.collaboration.check_duration_s > 0) {
                set_bs(wi, StateLabel::Checking);
                b.busy = true;
                sched_.schedule(now() + eff_bs(wi, cfg_.collaboration.check_duration_s), b.agent,
                                EventKind::TaskComplete, [this, wi, next, arrival] {
                                    bss_[wi].busy = false;
                                    do_check(wi, next, arrival);
                                });
            } else {
                do_check(wi, next, arrival);
            }
        });
    } else {
        const double arrival = now();
        if (cfg_.collaboration.check_duration_s > 0) {
            set_bs(wi, StateLabel::Checking);
            b.busy = true;
            sched_.schedule(now() + eff_bs(wi, cfg_.collaboration.check_duration_s), b.agent,
                            EventKind::TaskComplete, [this, wi, next, arrival] {
                                bss_[wi].busy = false;
                                do_check(wi, next, arrival);
                            });
        } else {
            do_check(wi, next, arrival);
        }
    }
}

void Sim::do_check(int wi, int ri, double arrival_t) {
    BsAgent& b = bss_[wi];
    RobotAgent& r = robots_[ri];
    const bool stock_left = storages_[b.storage].unlimited || storages_[b.storage].stock > 0;
    const bool convert = !r.done && !r.supply_pending && stock_left &&
                         decide_supply(r.buffer, cfg_.collaboration.sl);
    rec_.record_check(arrival_t, r.agent, b.agent, convert);
    if (convert) {
        // The fetch is a work order, not an interrupt: it queues behind
        // whatever the worker has already committed to, same as the
        // proactive path. The worker finishes the round first.
        r.supply_pending = true;
        Task t;
        t.kind = Task::Supply;
        t.robot = ri;
        b.tasks.push_back(t);
    }
    patrol_step(wi);
}

void Sim::start_supply(int wi, int ri) {
    const int planned = cfg_.robot.buffer_capacity - robots_[ri].buffer;
    supply_trip(wi, ri, planned);
}

// One fetch-deliver round trip; recurses until the planned quantity is ferried.
void Sim::supply_trip(int wi, int ri, int remaining) {
    BsAgent& b = bss_[wi];
    RobotAgent& r = robots_[ri];
    if (remaining <= 0 || r.done) {
        r.supply_pending = false;
        if (!b.tasks.empty() && b.tasks.front().kind == Task::Supply) {
            bs_finish_task(wi);
        } else if (!b.tasks.empty() && b.tasks.front().kind == Task::Patrol) {
            patrol_step(wi);
        } else {
            bs_wake(wi);
        }
        return;
    }
    const int q_plan = std::min(remaining, cfg_.bs.carry_capacity);
    Storage& st = storages_[b.storage];
    set_bs(wi, StateLabel::Fetching);
    b.busy = true;
    const double walk = eff_bs(wi, travel_time(b.pos, st.position_m, cfg_.bs.walk_speed_mps));
    sched_.schedule(now() + walk, b.agent, EventKind::TaskComplete, [this, wi, ri, remaining, q_plan] {
        BsAgent& b = bss_[wi];
        RobotAgent& r = robots_[ri];
        Storage& st = storages_[b.storage];
        b.pos = st.position_m;
        const long long q = st.unlimited ? q_plan : std::min<long long>(q_plan, st.stock);
        if (q == 0) {
            // Out of bricks: abandon the plan; this worker has nothing left to ferry.
            meta_.storage_exhausted = true;
            b.busy = false;
            r.supply_pending = false;
            retire_bs(wi);
            bs_wake(wi);
            return;
        }
        const double load = eff_bs(wi, cfg_.bs.load_time_s * static_cast<double>(q));
        sched_.schedule(now() + load, b.agent, EventKind::TaskComplete, [this, wi, ri, remaining, q] {
            BsAgent& b = bss_[wi];
            Storage& st = storages_[b.storage];
            st.take(q);
            meta_.loaded += q;
            b.carrying = q;
            set_bs(wi, StateLabel::Supplying);
            const double walk_back =
                eff_bs(wi, travel_time(b.pos, robots_[ri].dock, cfg_.bs.walk_speed_mps));
            sched_.schedule(now() + walk_back, b.agent, EventKind::TaskComplete,
                            [this, wi, ri, remaining, q] {
                BsAgent& b = bss_[wi];
                b.pos = robots_[ri].dock;
                const double unload = eff_bs(wi, cfg_.bs.load_time_s * static_cast<double>(q));
                sched_.schedule(now() + unload, b.agent, EventKind::TaskComplete,
                                [this, wi, ri, remaining, q] {
                    BsAgent& b = bss_[wi];
                    RobotAgent& r = robots_[ri];
                    r.buffer += static_cast<int>(q);
                    assert(r.buffer <= cfg_.robot.buffer_capacity);
                    meta_.delivered += q;
                    b.carrying = 0;
                    b.busy = false;
                    robot_decide(ri);  // wake a starved robot
                    supply_trip(wi, ri, remaining - static_cast<int>(q));
                });
            });
        });
    });
}

void Sim::signal_supply(int ri) {
    RobotAgent& r = robots_[ri];
    if (r.supply_pending || r.done) return;
    int best = -1;
    for (const BsAgent& b : bss_) {
        if (b.retired) continue;
        if (std::find(b.service.begin(), b.service.end(), ri) == b.service.end()) continue;
        if (best == -1) {
            best = b.idx;
            continue;
        }
        const auto load = [this](const BsAgent& w) {
            return static_cast<long long>(w.tasks.size()) + (w.busy ? 1 : 0);
        };
        if (load(b) < load(bss_[best])) best = b.idx;
    }
    if (best == -1) return;  // nobody can serve; the robot will starve
    r.supply_pending = true;
    const double delay = cfg_.collaboration.reaction_delay_s;
    sched_.schedule(now() + delay, bss_[best].agent, EventKind::SignalReceived, [this, best, ri] {
        Task t;
        t.kind = Task::Supply;
        t.robot = ri;
        bss_[best].tasks.push_back(t);
        bs_wake(best);
    });
}

void Sim::check_completion() {
    if (finished_) return;
    for (const Wall& w : walls_)
        if (!w.laid() || !w.cleaned()) return;
    finished_ = true;
    end_time_ = now();
}

std::string Sim::deadlock_diagnostic() const {
    std::ostringstream ss;
    ss << "deadlock at t=" << format_double(now()) << ": no pending events but work remains;";
    for (const RobotAgent& r : robots_) {
        if (r.done) continue;
        const Wall& w = walls_[r.wall];
        ss << " robot_" << r.idx << " " << to_string(rec_.current_state(r.agent)) << " (buffer "
           << r.buffer << ", wall " << w.lay_cursor << "/" << w.total_bricks() << " laid, "
           << w.clean_cursor << " cleaned);";
    }
    for (const BsAgent& b : bss_)
        if (b.retired) ss << " bs_" << b.idx << " retired (storage exhausted or robots done);";
    return ss.str();
}

RunResult Sim::run() {
    build_site();
    build_agents();
    meta_.config_hash = config_hash(cfg_);
    meta_.master_seed = cfg_.run.master_seed;

    for (int i = 0; i < static_cast<int>(bss_.size()); ++i) schedule_epoch(i);
    for (int i = 0; i < static_cast<int>(emrs_.size()); ++i) emr_wake(i);
    for (int i = 0; i < static_cast<int>(robots_.size()); ++i) {
        if (cfg_.collaboration.mode == CollabMode::Proactive &&
            robots_[i].buffer <= cfg_.collaboration.sl)
            signal_supply(i);  // edge trigger is armed below SL from the start
        robot_decide(i);
    }

    bool capped = false, deadlocked = false;
    while (!finished_) {
        if (sched_.empty()) {
            deadlocked = true;
            break;
        }
        if (sched_.peek_time() > cfg_.run.time_cap_s) {
            capped = true;
            break;
        }
        sched_.step();
    }

    const double makespan = finished_ ? end_time_ : (capped ? cfg_.run.time_cap_s : now());
    meta_.completed = finished_;
    meta_.deadlocked = deadlocked;
    meta_.time_capped = capped;
    if (deadlocked) meta_.diagnostic = deadlock_diagnostic();
    if (capped)
        meta_.diagnostic = "time cap " + format_double(cfg_.run.time_cap_s) + " s reached with " +
                           std::to_string(meta_.total_demand - meta_.bricks_laid) + " bricks unlaid";
    for (const Storage& s : storages_)
        if (!s.unlimited) meta_.final_stock += s.stock;
    for (const RobotAgent& r : robots_) meta_.final_buffer += r.buffer;
    for (const BsAgent& b : bss_) meta_.in_transit += b.carrying;

    RunResult out;
    out.completed = finished_;
    out.deadlocked = deadlocked;
    out.time_capped = capped;
    out.diagnostic = meta_.diagnostic;
    out.timeline = rec_.finish(makespan, meta_);
    out.metrics = compute_metrics(out.timeline);
    return out;
}

}  // namespace

RunResult run_simulation(const SimConfig& cfg) {
    Sim sim(cfg);
    return sim.run();
}

}  // namespace hrcsim
