#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hrcsim/analytic.hpp"
#include "hrcsim/config.hpp"
#include "hrcsim/metrics.hpp"
#include "hrcsim/simulation.hpp"

namespace py = pybind11;
using namespace hrcsim;

namespace {

py::dict metrics_dict(const RunMetrics& m) {
    py::dict d;
    d["makespan_s"] = m.makespan_s;
    d["bricks_laid"] = m.bricks_laid;
    d["cp_per_h"] = m.cp_per_h;
    d["robot_utilization"] = m.robot_utilization;
    d["starved_s"] = m.starved_s;
    d["blocked_s"] = m.blocked_s;
    d["interruption_count"] = m.interruption_count;
    d["check_count"] = m.check_count;
    d["redundant_check_count"] = m.redundant_check_count;
    d["gci_per_robot"] = m.gci_per_robot;
    d["gci_mean_s"] = m.gci_mean_s;
    return d;
}

py::dict run_from_json(const std::string& config_json,
                       std::optional<std::uint64_t> seed) {
    SimConfig cfg = parse_config(config_json);
    if (seed) cfg.run.master_seed = *seed;
    const RunResult res = run_simulation(cfg);
    py::dict d;
    d["completed"] = res.completed;
    d["deadlocked"] = res.deadlocked;
    d["time_capped"] = res.time_capped;
    d["diagnostic"] = res.diagnostic;
    d["metrics"] = metrics_dict(res.metrics);
    std::ostringstream gantt;
    write_gantt_csv(res.timeline, gantt);
    d["gantt_csv"] = gantt.str();
    std::ostringstream row;
    MetricsRowKey key{to_string(cfg.scenario.kind), to_string(cfg.collaboration.mode),
                      cfg.collaboration.ci_s, cfg.collaboration.sl, cfg.scenario.teams, 0,
                      cfg.run.master_seed};
    row << kMetricsCsvHeader << '\n';
    write_metrics_row(key, res.metrics, row);
    d["metrics_csv"] = row.str();
    return d;
}

}  // namespace

PYBIND11_MODULE(_hrcsim, m) {
    m.doc() = "Discrete-event simulator of human-robot collaborative bricklaying";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def("default_config", [] { return serialize_config(default_config()); },
          "Default configuration as a JSON string");
    m.def("validate_config",
          [](const std::string& text) { return serialize_config(parse_config(text)); },
          py::arg("config_json"),
          "Parse, validate and normalize a config; returns canonical JSON or raises ConfigError");
    m.def("run", &run_from_json, py::arg("config_json"), py::arg("seed") = py::none(),
          "Run one simulation from a config JSON string; returns a result dict");
    m.def("expected_gci", &expected_gci, py::arg("n_workers"), py::arg("ci_s"),
          "Mean check interval under n superposed periodic check schedules");
    m.def("mc_gci",
          [](int n, double ci, long long samples, std::uint64_t seed) {
              const GapStats g = gci_gap_stats(n, ci, samples, seed);
              py::dict d;
              d["mean_s"] = g.mean_s;
              d["stddev_s"] = g.stddev_s;
              d["samples"] = g.samples;
              return d;
          },
          py::arg("n_workers"), py::arg("ci_s"), py::arg("samples") = 10000, py::arg("seed") = 1,
          "Monte-Carlo estimate of the superposed check gap");
}
