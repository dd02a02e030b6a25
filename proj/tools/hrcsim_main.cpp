#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "hrcsim/analytic.hpp"
#include "hrcsim/config.hpp"
#include "hrcsim/experiments.hpp"
#include "hrcsim/metrics.hpp"
#include "hrcsim/simulation.hpp"
#include "hrcsim/svg.hpp"

namespace fs = std::filesystem;
using namespace hrcsim;

namespace {

constexpr int kOk = 0;
constexpr int kValidationError = 1;
constexpr int kRuntimeError = 2;

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << content;
}

// Seed precedence: config < HRC_SIM_SEED < --seed flag.
void apply_seed(SimConfig& cfg, const std::optional<std::uint64_t>& flag_seed) {
    if (const char* env = std::getenv("HRC_SIM_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw ConfigError({"HRC_SIM_SEED must be an unsigned integer, got \"" +
                               std::string(env) + "\""});
        cfg.run.master_seed = v;
    }
    if (flag_seed) cfg.run.master_seed = *flag_seed;
}

int cmd_run(const std::string& config_path, const std::optional<std::uint64_t>& seed,
            const std::string& out_dir, bool gantt) {
    SimConfig cfg = parse_config_file(config_path);
    apply_seed(cfg, seed);
    const RunResult res = run_simulation(cfg);

    fs::create_directories(out_dir);
    {
        std::ofstream out(fs::path(out_dir) / "metrics.csv", std::ios::binary);
        if (!out) throw std::runtime_error("cannot write metrics.csv");
        out << kMetricsCsvHeader << '\n';
        MetricsRowKey key{to_string(cfg.scenario.kind), to_string(cfg.collaboration.mode),
                          cfg.collaboration.ci_s, cfg.collaboration.sl, cfg.scenario.teams,
                          0, cfg.run.master_seed};
        write_metrics_row(key, res.metrics, out);
    }
    if (gantt) {
        std::ofstream out(fs::path(out_dir) / "gantt.csv", std::ios::binary);
        if (!out) throw std::runtime_error("cannot write gantt.csv");
        write_gantt_csv(res.timeline, out);
        write_file(fs::path(out_dir) / "gantt.svg", gantt_svg(res.timeline));
    }

    std::cout << "makespan_s=" << format_double(res.metrics.makespan_s)
              << " cp_per_h=" << format_double(res.metrics.cp_per_h)
              << " bricks=" << res.metrics.bricks_laid << "\n";
    if (!res.completed) {
        std::cerr << res.diagnostic << "\n";
        return kRuntimeError;
    }
    return kOk;
}

int cmd_sweep(const std::string& config_path, const std::optional<std::uint64_t>& seed,
              const std::string& out_dir, int jobs) {
    SimConfig cfg = parse_config_file(config_path);
    apply_seed(cfg, seed);
    if (!cfg.sweep) throw ConfigError({"sweep section required for the sweep command"});
    if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());

    fs::create_directories(out_dir);
    const SweepTable table = run_sweep(cfg, jobs);
    {
        std::ofstream out(fs::path(out_dir) / "metrics.csv", std::ios::binary);
        if (!out) throw std::runtime_error("cannot write metrics.csv");
        write_metrics_csv(table, out);
    }
    for (const Surface& s : ci_sl_surfaces(table)) {
        write_file(fs::path(out_dir) / (s.scenario + "_" + s.mode + "_surface.svg"), s.svg);
        write_file(fs::path(out_dir) / (s.scenario + "_" + s.mode + "_surface.csv"), s.csv);
    }
    const ImprovementReport imp = mode_improvement(table);
    if (imp.applicable) {
        write_file(fs::path(out_dir) / "improvement.csv", imp.csv);
        std::cout << "improvement: median=" << format_double(imp.median_improvement)
                  << " min=" << format_double(imp.min_improvement)
                  << " max=" << format_double(imp.max_improvement)
                  << " fraction_over_20pct=" << format_double(imp.fraction_over_20pct) << "\n";
    }
    if (cfg.scenario.kind == ScenarioKind::Mrmw) {
        SimConfig base = single_team_baseline(cfg);
        const SweepTable single = run_sweep(base, jobs);
        std::ofstream out(fs::path(out_dir) / "baseline_metrics.csv", std::ios::binary);
        write_metrics_csv(single, out);
        write_file(fs::path(out_dir) / "scale_effect.csv", scale_effect(single, table).csv);
    }
    std::size_t failed = 0;
    std::string failures;
    for (const auto& row : table.rows) {
        if (row.ok) continue;
        ++failed;
        failures += row.key.scenario + "," + row.key.mode + ",ci=" + format_double(row.key.ci_s) +
                    ",sl=" + std::to_string(row.key.sl) + ",rep=" +
                    std::to_string(row.key.replication) + ": " + row.note + "\n";
    }
    if (failed > 0) write_file(fs::path(out_dir) / "failures.txt", failures);
    std::cout << "rows=" << table.rows.size() << " failed=" << failed << " out=" << out_dir << "\n";
    return kOk;
}

int cmd_gci(int workers, double ci, long long samples, std::uint64_t seed) {
    const double expected = expected_gci(workers, ci);
    const GapStats mc = gci_gap_stats(workers, ci, samples, seed);
    const int reps = 5;
    const double sim = simulated_gci(workers, ci, reps, seed);
    auto rel = [&](double v) { return (v - expected) / expected * 100.0; };
    std::cout << "workers=" << workers << " ci_s=" << format_double(ci) << "\n"
              << "expected_gci_s=" << format_double(expected) << "\n"
              << "mc_gci_s=" << format_double(mc.mean_s) << " rel_err_pct="
              << format_double(rel(mc.mean_s)) << " samples=" << mc.samples << "\n"
              << "sim_gci_s=" << format_double(sim) << " rel_err_pct="
              << format_double(rel(sim)) << " replications=" << reps << "\n";
    return kOk;
}

int cmd_report(const std::string& metrics_path, const std::string& out_dir) {
    std::ifstream in(metrics_path);
    if (!in) throw std::runtime_error("cannot open " + metrics_path);
    const SweepTable table = parse_metrics_csv(in);
    fs::create_directories(out_dir);
    for (const Surface& s : ci_sl_surfaces(table)) {
        write_file(fs::path(out_dir) / (s.scenario + "_" + s.mode + "_surface.svg"), s.svg);
        write_file(fs::path(out_dir) / (s.scenario + "_" + s.mode + "_surface.csv"), s.csv);
    }
    const ImprovementReport imp = mode_improvement(table);
    if (imp.applicable) {
        write_file(fs::path(out_dir) / "improvement.csv", imp.csv);
        std::cout << "improvement: median=" << format_double(imp.median_improvement)
                  << " fraction_over_20pct=" << format_double(imp.fraction_over_20pct) << "\n";
    }
    std::cout << "rows=" << table.rows.size() << " out=" << out_dir << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Agent-based simulator of human-robot collaborative bricklaying"};
    app.require_subcommand(0, 1);
    bool print_defaults = false;
    app.add_flag("--print-defaults", print_defaults,
                 "Print the embedded default config (annotated) and exit");

    std::string run_config, run_out = ".";
    std::optional<std::uint64_t> run_seed;
    bool run_gantt = false;
    CLI::App* run = app.add_subcommand("run", "Execute a single simulation run");
    run->add_option("--config", run_config, "Config JSON path")->required();
    run->add_option("--seed", run_seed, "Master seed (overrides config and HRC_SIM_SEED)");
    run->add_option("--out", run_out, "Output directory");
    run->add_flag("--gantt", run_gantt, "Also write gantt.csv and gantt.svg");

    std::string sweep_config, sweep_out = ".";
    std::optional<std::uint64_t> sweep_seed;
    int sweep_jobs = 0;
    CLI::App* sweep = app.add_subcommand("sweep", "Run the CI x SL x mode x replication grid");
    sweep->add_option("--config", sweep_config, "Config JSON path (with sweep section)")->required();
    sweep->add_option("--seed", sweep_seed, "Master seed (overrides config and HRC_SIM_SEED)");
    sweep->add_option("--out", sweep_out, "Output directory");
    sweep->add_option("--jobs", sweep_jobs, "Concurrent runs (default: hardware threads)");

    int gci_workers = 2;
    double gci_ci = 600;
    long long gci_samples = 10000;
    std::uint64_t gci_seed = 1;
    CLI::App* gci = app.add_subcommand("gci", "Check-interval superposition analysis");
    gci->add_option("--workers", gci_workers, "Number of workers")->required();
    gci->add_option("--ci", gci_ci, "Check interval (s)")->required();
    gci->add_option("--samples", gci_samples, "Monte-Carlo gap samples");
    gci->add_option("--seed", gci_seed, "Seed for oracle and simulation");

    std::string report_metrics, report_out = ".";
    CLI::App* report = app.add_subcommand("report", "Rebuild reports from a metrics CSV");
    report->add_option("--metrics", report_metrics, "metrics.csv path")->required();
    report->add_option("--out", report_out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kValidationError;
    }

    try {
        if (print_defaults) {
            std::cout << annotated_defaults();
            return kOk;
        }
        if (*run) return cmd_run(run_config, run_seed, run_out, run_gantt);
        if (*sweep) return cmd_sweep(sweep_config, sweep_seed, sweep_out, sweep_jobs);
        if (*gci) {
            if (gci_workers < 1) throw ConfigError({"--workers must be >= 1"});
            if (!(gci_ci > 0)) throw ConfigError({"--ci must be > 0"});
            if (gci_samples < 1) throw ConfigError({"--samples must be >= 1"});
            return cmd_gci(gci_workers, gci_ci, gci_samples, gci_seed);
        }
        if (*report) return cmd_report(report_metrics, report_out);
        std::cout << app.help();
        return kOk;
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kValidationError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRuntimeError;
    }
}
