#include "hrcsim/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace hrcsim {

const char* to_string(AgentKind k) {
    switch (k) {
        case AgentKind::Robot: return "robot";
        case AgentKind::Emr: return "emr";
        case AgentKind::Bs: return "bs";
    }
    return "?";
}

const char* to_string(StateLabel s) {
    switch (s) {
        case StateLabel::Laying: return "Laying";
        case StateLabel::Moving: return "Moving";
        case StateLabel::Starved: return "Starved";
        case StateLabel::Blocked: return "Blocked";
        case StateLabel::Done: return "Done";
        case StateLabel::Working: return "Working";
        case StateLabel::Walking: return "Walking";
        case StateLabel::Checking: return "Checking";
        case StateLabel::Fetching: return "Fetching";
        case StateLabel::Supplying: return "Supplying";
        case StateLabel::Resting: return "Resting";
        case StateLabel::Idle: return "Idle";
    }
    return "?";
}

bool is_interruption(StateLabel s) { return s == StateLabel::Starved || s == StateLabel::Blocked; }

int TimelineRecorder::add_agent(AgentInfo info, StateLabel initial) {
    agents_.push_back(std::move(info));
    intervals_.emplace_back();
    open_.push_back(Open{initial, 0.0});
    return static_cast<int>(agents_.size()) - 1;
}

void TimelineRecorder::record_transition(int agent, StateLabel state, double t) {
    Open& o = open_.at(agent);
    if (t < o.since)
        throw std::logic_error("out-of-order transition for " + agents_[agent].id + ": t=" +
                               std::to_string(t) + " before " + std::to_string(o.since));
    if (state == o.state) return;  // no-op transition, keep the open interval
    if (t > o.since) intervals_[agent].push_back(StateInterval{o.state, o.since, t});
    // t == o.since: zero-width interval coalesced away
    o.state = state;
    o.since = t;
}

void TimelineRecorder::record_check(double t, int robot_agent, int worker_agent, bool converted) {
    checks_.push_back(CheckMark{t, robot_agent, worker_agent, converted});
}

StateLabel TimelineRecorder::current_state(int agent) const { return open_.at(agent).state; }

StateTimeline TimelineRecorder::finish(double makespan, RunMeta meta) {
    StateTimeline tl;
    tl.agents = std::move(agents_);
    tl.intervals = std::move(intervals_);
    for (std::size_t a = 0; a < tl.agents.size(); ++a) {
        const Open& o = open_[a];
        if (makespan > o.since) tl.intervals[a].push_back(StateInterval{o.state, o.since, makespan});
    }
    tl.checks = std::move(checks_);
    tl.meta = std::move(meta);
    tl.makespan_s = makespan;
    return tl;
}

RunMetrics compute_metrics(const StateTimeline& tl) {
    RunMetrics m;
    m.makespan_s = tl.makespan_s;
    m.bricks_laid = tl.meta.bricks_laid;
    m.cp_per_h = tl.makespan_s > 0 ? static_cast<double>(m.bricks_laid) / tl.makespan_s * 3600.0 : 0.0;

    double util_sum = 0;
    int robots = 0;
    for (std::size_t a = 0; a < tl.agents.size(); ++a) {
        if (tl.agents[a].kind != AgentKind::Robot) continue;
        ++robots;
        double laying = 0, active_span = tl.makespan_s;
        bool in_interruption = false;
        for (const auto& iv : tl.intervals[a]) {
            if (iv.state == StateLabel::Laying) laying += iv.end_s - iv.start_s;
            if (iv.state == StateLabel::Starved) m.starved_s += iv.end_s - iv.start_s;
            if (iv.state == StateLabel::Blocked) m.blocked_s += iv.end_s - iv.start_s;
            if (iv.state == StateLabel::Done) {
                active_span = iv.start_s;
                break;
            }
            if (is_interruption(iv.state)) {
                if (!in_interruption) ++m.interruption_count;
                in_interruption = true;
            } else {
                in_interruption = false;
            }
        }
        if (active_span > 0) util_sum += laying / active_span;
    }
    m.robot_utilization = robots > 0 ? util_sum / robots : 0.0;

    std::map<int, std::pair<double, long long>> gap_acc;  // robot agent -> (gap sum, gap count)
    std::map<int, double> last_check;
    for (const auto& c : tl.checks) {
        ++m.check_count;
        if (!c.converted) ++m.redundant_check_count;
        auto it = last_check.find(c.robot_agent);
        if (it != last_check.end()) {
            auto& acc = gap_acc[c.robot_agent];
            acc.first += c.t_s - it->second;
            acc.second += 1;
        }
        last_check[c.robot_agent] = c.t_s;
    }
    double gci_sum = 0;
    int gci_n = 0;
    for (const auto& [agent, acc] : gap_acc) {
        const double mean_gap = acc.first / static_cast<double>(acc.second);
        m.gci_per_robot[tl.agents[agent].id] = mean_gap;
        gci_sum += mean_gap;
        ++gci_n;
    }
    m.gci_mean_s = gci_n > 0 ? gci_sum / gci_n : std::numeric_limits<double>::quiet_NaN();
    return m;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void write_gantt_csv(const StateTimeline& tl, std::ostream& out) {
    out << "agent_id,agent_kind,state,start_s,end_s\n";
    for (std::size_t a = 0; a < tl.agents.size(); ++a)
        for (const auto& iv : tl.intervals[a])
            out << tl.agents[a].id << ',' << to_string(tl.agents[a].kind) << ','
                << to_string(iv.state) << ',' << format_double(iv.start_s) << ','
                << format_double(iv.end_s) << '\n';
}

const char* const kMetricsCsvHeader =
    "scenario,mode,ci_s,sl,teams,replication,seed,makespan_s,bricks,cp_per_h,util,"
    "starved_s,blocked_s,interruptions,checks,redundant_checks,gci_mean_s";

void write_metrics_row(const MetricsRowKey& key, const RunMetrics& m, std::ostream& out) {
    out << key.scenario << ',' << key.mode << ',' << format_double(key.ci_s) << ',' << key.sl
        << ',' << key.teams << ',' << key.replication << ',' << key.seed << ','
        << format_double(m.makespan_s) << ',' << m.bricks_laid << ',' << format_double(m.cp_per_h)
        << ',' << format_double(m.robot_utilization) << ',' << format_double(m.starved_s) << ','
        << format_double(m.blocked_s) << ',' << m.interruption_count << ',' << m.check_count
        << ',' << m.redundant_check_count << ',' << format_double(m.gci_mean_s) << '\n';
}

}  // namespace hrcsim
