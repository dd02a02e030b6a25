#include "hrcsim/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hrcsim/engine.hpp"
#include "hrcsim/simulation.hpp"
#include "hrcsim/stats.hpp"
#include "hrcsim/svg.hpp"

namespace hrcsim {

std::uint64_t cell_seed(std::uint64_t master, ScenarioKind scenario, CollabMode mode, double ci_s,
                        int sl, int replication) {
    return derive_seed(master, {static_cast<std::uint64_t>(scenario) + 1,
                                static_cast<std::uint64_t>(mode) + 1,
                                std::bit_cast<std::uint64_t>(ci_s),
                                static_cast<std::uint64_t>(sl),
                                static_cast<std::uint64_t>(replication)});
}

SweepTable run_sweep(const SimConfig& base, int jobs) {
    if (!base.sweep) throw ConfigError({"sweep section required for run_sweep"});
    const SweepSpec& sw = *base.sweep;

    struct Cell {
        CollabMode mode;
        double ci;
        int sl;
        int rep;
    };
    std::vector<Cell> cells;
    for (CollabMode mode : sw.modes)
        for (double ci : sw.ci_s)
            for (int sl : sw.sl)
                for (int rep = 0; rep < sw.replications; ++rep)
                    cells.push_back({mode, ci, sl, rep});

    SweepTable table;
    table.rows.resize(cells.size());

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            const Cell& c = cells[i];
            SimConfig cfg = base;
            cfg.collaboration.mode = c.mode;
            cfg.collaboration.ci_s = c.ci;
            cfg.collaboration.sl = c.sl;
            cfg.run.master_seed =
                cell_seed(base.run.master_seed, base.scenario.kind, c.mode, c.ci, c.sl, c.rep);
            cfg.run.team_seeds.clear();
            cfg.sweep.reset();

            SweepRow& row = table.rows[i];
            row.key = MetricsRowKey{to_string(base.scenario.kind), to_string(c.mode), c.ci, c.sl,
                                    base.scenario.teams, c.rep, cfg.run.master_seed};
            try {
                RunResult res = run_simulation(cfg);
                row.metrics = res.metrics;
                row.ok = res.completed;
                if (!res.completed) row.note = res.diagnostic;
            } catch (const std::exception& e) {
                row.ok = false;
                row.note = e.what();
            }
        }
    };

    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return table;
}

void write_metrics_csv(const SweepTable& table, std::ostream& out) {
    out << kMetricsCsvHeader << '\n';
    for (const auto& row : table.rows) write_metrics_row(row.key, row.metrics, out);
}

SweepTable parse_metrics_csv(std::istream& in) {
    SweepTable table;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("metrics CSV is empty");
    if (line != kMetricsCsvHeader)
        throw std::runtime_error("metrics CSV header mismatch: got \"" + line + "\"");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) f.push_back(item);
        if (f.size() != 17) throw std::runtime_error("metrics CSV row has " +
                                                     std::to_string(f.size()) + " fields: " + line);
        SweepRow row;
        row.key.scenario = f[0];
        row.key.mode = f[1];
        row.key.ci_s = std::stod(f[2]);
        row.key.sl = std::stoi(f[3]);
        row.key.teams = std::stoi(f[4]);
        row.key.replication = std::stoi(f[5]);
        row.key.seed = std::stoull(f[6]);
        row.metrics.makespan_s = std::stod(f[7]);
        row.metrics.bricks_laid = std::stoll(f[8]);
        row.metrics.cp_per_h = std::stod(f[9]);
        row.metrics.robot_utilization = std::stod(f[10]);
        row.metrics.starved_s = std::stod(f[11]);
        row.metrics.blocked_s = std::stod(f[12]);
        row.metrics.interruption_count = std::stoll(f[13]);
        row.metrics.check_count = std::stoll(f[14]);
        row.metrics.redundant_check_count = std::stoll(f[15]);
        row.metrics.gci_mean_s = std::stod(f[16]);
        table.rows.push_back(std::move(row));
    }
    return table;
}

namespace {

struct CellAgg {
    RunningStat makespan;
    RunningStat cp;
};

using CellKey = std::pair<double, int>;  // (ci, sl)

std::map<std::string, std::map<std::string, std::map<CellKey, CellAgg>>> aggregate(
    const SweepTable& table) {
    std::map<std::string, std::map<std::string, std::map<CellKey, CellAgg>>> by;
    for (const auto& row : table.rows) {
        CellAgg& agg = by[row.key.scenario][row.key.mode][{row.key.ci_s, row.key.sl}];
        agg.makespan.add(row.metrics.makespan_s);
        agg.cp.add(row.metrics.cp_per_h);
    }
    return by;
}

}  // namespace

std::vector<Surface> ci_sl_surfaces(const SweepTable& table) {
    std::vector<Surface> out;
    for (auto& [scenario, modes] : aggregate(table)) {
        for (auto& [mode, cellmap] : modes) {
            Surface s;
            s.scenario = scenario;
            s.mode = mode;
            for (const auto& [key, agg] : cellmap) {
                if (std::find(s.ci.begin(), s.ci.end(), key.first) == s.ci.end())
                    s.ci.push_back(key.first);
                if (std::find(s.sl.begin(), s.sl.end(), key.second) == s.sl.end())
                    s.sl.push_back(key.second);
            }
            std::sort(s.ci.begin(), s.ci.end());
            std::sort(s.sl.begin(), s.sl.end());
            s.mean_makespan.assign(s.ci.size() * s.sl.size(),
                                   std::numeric_limits<double>::quiet_NaN());
            for (const auto& [key, agg] : cellmap) {
                const auto ci_it = std::find(s.ci.begin(), s.ci.end(), key.first);
                const auto sl_it = std::find(s.sl.begin(), s.sl.end(), key.second);
                const std::size_t r = sl_it - s.sl.begin();
                const std::size_t c = ci_it - s.ci.begin();
                s.mean_makespan[r * s.ci.size() + c] = agg.makespan.mean();
            }
            std::ostringstream csv;
            csv << "sl_then_ci";
            for (double ci : s.ci) csv << ',' << format_double(ci);
            csv << '\n';
            for (std::size_t r = 0; r < s.sl.size(); ++r) {
                csv << s.sl[r];
                for (std::size_t c = 0; c < s.ci.size(); ++c)
                    csv << ',' << format_double(s.mean_makespan[r * s.ci.size() + c]);
                csv << '\n';
            }
            s.csv = csv.str();
            s.svg = heatmap_svg(scenario + " / " + mode + ": mean makespan (s)", s.ci, s.sl,
                                s.mean_makespan, "makespan_s");
            out.push_back(std::move(s));
        }
    }
    return out;
}

ImprovementReport mode_improvement(const SweepTable& table) {
    ImprovementReport rep;
    auto by = aggregate(table);
    for (auto& [scenario, modes] : by) {
        auto pas = modes.find("passive");
        auto pro = modes.find("proactive");
        if (pas == modes.end() || pro == modes.end()) continue;
        rep.applicable = true;
        std::ostringstream csv;
        csv << "scenario,ci_s,sl,cp_passive,cp_proactive,improvement\n";
        for (const auto& [key, agg] : pas->second) {
            auto it = pro->second.find(key);
            if (it == pro->second.end()) continue;
            const double cp_pas = agg.cp.mean();
            const double cp_pro = it->second.cp.mean();
            const double imp = cp_pas > 0 ? cp_pro / cp_pas - 1.0
                                          : std::numeric_limits<double>::quiet_NaN();
            rep.improvements.push_back(imp);
            csv << scenario << ',' << format_double(key.first) << ',' << key.second << ','
                << format_double(cp_pas) << ',' << format_double(cp_pro) << ','
                << format_double(imp) << '\n';
        }
        rep.csv += csv.str();
    }
    if (!rep.improvements.empty()) {
        rep.median_improvement = median(rep.improvements);
        rep.min_improvement = *std::min_element(rep.improvements.begin(), rep.improvements.end());
        rep.max_improvement = *std::max_element(rep.improvements.begin(), rep.improvements.end());
        long long over = 0;
        for (double v : rep.improvements)
            if (v > 0.20) ++over;
        rep.fraction_over_20pct = static_cast<double>(over) / rep.improvements.size();
    }
    return rep;
}

ScaleReport scale_effect(const SweepTable& single_team, const SweepTable& multi_team) {
    ScaleReport rep;
    auto single = aggregate(single_team);
    auto multi = aggregate(multi_team);
    int teams = 1;
    for (const auto& row : multi_team.rows) teams = std::max(teams, row.key.teams);

    std::ostringstream csv;
    csv << "mode,ci_s,sl,teams,cp_single,cp_multi,per_team_ratio\n";
    for (auto& [scenario, modes] : multi) {
        for (auto& [mode, cellmap] : modes) {
            // Baseline table holds the 1-team control under its own scenario name.
            const std::map<CellKey, CellAgg>* base = nullptr;
            for (auto& [bs, bmodes] : single) {
                auto it = bmodes.find(mode);
                if (it != bmodes.end()) base = &it->second;
            }
            if (!base) continue;
            for (const auto& [key, agg] : cellmap) {
                auto it = base->find(key);
                if (it == base->end()) continue;
                ScaleCell cell;
                cell.mode = mode;
                cell.ci_s = key.first;
                cell.sl = key.second;
                cell.teams = teams;
                cell.cp_single = it->second.cp.mean();
                cell.cp_multi = agg.cp.mean();
                cell.per_team_ratio = cell.cp_single > 0
                                          ? (cell.cp_multi / teams) / cell.cp_single
                                          : std::numeric_limits<double>::quiet_NaN();
                rep.cells.push_back(cell);
                csv << cell.mode << ',' << format_double(cell.ci_s) << ',' << cell.sl << ','
                    << cell.teams << ',' << format_double(cell.cp_single) << ','
                    << format_double(cell.cp_multi) << ',' << format_double(cell.per_team_ratio)
                    << '\n';
            }
        }
    }
    rep.csv = csv.str();
    return rep;
}

double simulated_gci(int n_workers, double ci_s, int replications, std::uint64_t seed) {
    if (n_workers < 1) throw std::invalid_argument("n_workers must be >= 1");
    // Run long enough for ~40 check periods per replication.
    const double lay_s = 18.0;
    const int bricks = std::max(60, static_cast<int>(40.0 * ci_s / lay_s) + 1);

    SimConfig cfg;
    cfg.site.walls.push_back(WallSpec{0, 1, bricks, 0.25});
    cfg.site.storages.push_back(StorageSpec{-15.0, 0, true});
    cfg.robot.lay_time_s = lay_s;
    cfg.robot.reach_m = 1.0;
    cfg.robot.buffer_capacity = bricks;   // never starves, never triggers supply
    cfg.robot.initial_buffer = bricks;
    cfg.robot.backlog_limit = bricks + 1;
    cfg.robot.safety_radius_m = 0.0;
    cfg.emr.clean_time_s = 1.0;
    cfg.collaboration.mode = CollabMode::Passive;
    cfg.collaboration.ci_s = ci_s;
    cfg.collaboration.sl = 0;
    cfg.collaboration.mutual_help = true;
    cfg.collaboration.phase = PhaseMode::Random;
    cfg.collaboration.zero_cost_check = true;
    cfg.run.time_cap_s = bricks * lay_s * 4 + 8 * ci_s;
    if (n_workers == 1) {
        cfg.scenario = {ScenarioKind::Srsw, 1, 1};
    } else {
        cfg.scenario = {ScenarioKind::Mrmw, n_workers, n_workers};
        WallSpec w0 = cfg.site.walls[0];
        StorageSpec s0 = cfg.site.storages[0];
        for (int i = 1; i < n_workers; ++i) {
            WallSpec w = w0;
            w.origin_m = i * cfg.site.wall_spacing_m;
            cfg.site.walls.push_back(w);
            StorageSpec s = s0;
            s.position_m += i * cfg.site.wall_spacing_m;
            cfg.site.storages.push_back(s);
        }
    }

    RunningStat gci;
    for (int rep = 0; rep < replications; ++rep) {
        cfg.run.master_seed = derive_seed(seed, {0x73696dULL, static_cast<std::uint64_t>(rep)});
        const RunResult res = run_simulation(cfg);
        for (const auto& [robot, mean_gap] : res.metrics.gci_per_robot) gci.add(mean_gap);
    }
    if (gci.count() == 0) throw std::runtime_error("simulated_gci: no robot received two checks");
    return gci.mean();
}

SimConfig single_team_baseline(const SimConfig& mrmw) {
    SimConfig base = mrmw;
    base.scenario.kind = ScenarioKind::Srsw;
    base.scenario.teams = 1;
    base.scenario.robots = 1;
    base.site.walls.resize(1);
    base.site.storages.resize(1);
    base.collaboration.mutual_help = false;
    base.run.team_seeds.clear();
    return base;
}

}  // namespace hrcsim
