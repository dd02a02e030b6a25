#include "hrcsim/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hrcsim {

using json = nlohmann::ordered_json;

const char* to_string(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::Srsw: return "srsw";
        case ScenarioKind::Mrsw: return "mrsw";
        case ScenarioKind::Mrmw: return "mrmw";
    }
    return "?";
}

const char* to_string(PhaseMode m) { return m == PhaseMode::Even ? "even" : "random"; }

ConfigError::ConfigError(std::vector<std::string> violations)
    : std::runtime_error([&] {
          std::string msg = "invalid config:";
          for (const auto& v : violations) msg += "\n  - " + v;
          return msg;
      }()),
      violations_(std::move(violations)) {}

SimConfig default_config() {
    SimConfig c;
    c.site.walls.push_back(WallSpec{});
    c.site.storages.push_back(StorageSpec{});
    c.emr.fatigue = FatigueParams{false, 1.0 / 600.0, 1.0 / 1200.0, 0.4, 0.3};
    c.bs.fatigue = c.emr.fatigue;
    SweepSpec sw;
    sw.ci_s = {300, 600, 900, 1200, 1800, 2400};
    sw.sl = {2, 10, 30, 59};
    sw.modes = {CollabMode::Passive, CollabMode::Proactive};
    c.sweep = sw;
    return c;
}

namespace {

class Reader {
  public:
    Reader(const json& root, std::vector<std::string>& problems) : problems_(problems) {
        stack_.push_back({&root, ""});
    }

    bool descend(const char* key) {
        const json* cur = stack_.back().node;
        mark(key);
        auto it = cur->find(key);
        if (it == cur->end() || !it->is_object()) {
            if (it != cur->end()) problems_.push_back(path(key) + " must be an object");
            return false;
        }
        stack_.push_back({&*it, path(key)});
        return true;
    }

    void ascend() {
        finish_level();
        stack_.pop_back();
    }

    bool has(const char* key) {
        mark(key);
        return stack_.back().node->contains(key);
    }

    template <typename T>
    void get(const char* key, T& out) {
        mark(key);
        const json* cur = stack_.back().node;
        auto it = cur->find(key);
        if (it == cur->end()) return;
        try {
            out = it->get<T>();
        } catch (const json::exception&) {
            problems_.push_back(path(key) + " has the wrong type");
        }
    }

    const json* raw(const char* key) {
        mark(key);
        const json* cur = stack_.back().node;
        auto it = cur->find(key);
        return it == cur->end() ? nullptr : &*it;
    }

    std::string path(const char* key) const {
        const std::string& base = stack_.back().prefix;
        return base.empty() ? key : base + "." + key;
    }

    void finish_level() {
        const Level& lv = stack_.back();
        for (auto it = lv.node->begin(); it != lv.node->end(); ++it) {
            bool known = false;
            for (const auto& k : lv.seen)
                if (k == it.key()) { known = true; break; }
            if (!known)
                problems_.push_back("unknown key: " + (lv.prefix.empty() ? it.key() : lv.prefix + "." + it.key()));
        }
    }

    void problem(std::string s) { problems_.push_back(std::move(s)); }

  private:
    struct Level {
        const json* node;
        std::string prefix;
        std::vector<std::string> seen;
    };

    void mark(const char* key) { stack_.back().seen.emplace_back(key); }

    std::vector<Level> stack_;
    std::vector<std::string>& problems_;
};

void read_fatigue(Reader& r, FatigueParams& f, std::vector<std::string>& problems, const std::string& prefix) {
    if (!r.descend("fatigue")) return;
    r.get("enabled", f.enabled);
    r.get("lambda_per_s", f.lambda_per_s);
    r.get("mu_per_s", f.mu_per_s);
    r.get("alpha", f.alpha);
    r.get("m_min", f.m_min);
    r.ascend();
    if (f.lambda_per_s < 0) problems.push_back(prefix + ".fatigue.lambda_per_s must be >= 0");
    if (f.mu_per_s < 0) problems.push_back(prefix + ".fatigue.mu_per_s must be >= 0");
    if (f.alpha < 0 || f.alpha > 1) problems.push_back(prefix + ".fatigue.alpha must be in [0, 1]");
    if (!(f.m_min > 0) || f.m_min > 1) problems.push_back(prefix + ".fatigue.m_min must be in (0, 1]");
}

json fatigue_json(const FatigueParams& f) {
    json j;
    j["enabled"] = f.enabled;
    j["lambda_per_s"] = f.lambda_per_s;
    j["mu_per_s"] = f.mu_per_s;
    j["alpha"] = f.alpha;
    j["m_min"] = f.m_min;
    return j;
}

std::string strip_comments(const std::string& text) {
    std::istringstream in(text);
    std::string out, line;
    while (std::getline(in, line)) {
        std::size_t i = line.find_first_not_of(" \t");
        if (i != std::string::npos && line[i] == '#') continue;
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace

SimConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(strip_comments(json_text));
    } catch (const json::exception& e) {
        throw ConfigError({std::string("malformed JSON: ") + e.what()});
    }
    if (!root.is_object()) throw ConfigError({"top level must be an object"});

    std::vector<std::string> problems;
    SimConfig c = default_config();
    c.site.walls.clear();
    c.site.storages.clear();
    c.sweep.reset();
    Reader r(root, problems);

    if (r.descend("site")) {
        if (const json* walls = r.raw("walls")) {
            if (!walls->is_array()) {
                problems.push_back("site.walls must be an array");
            } else {
                int i = 0;
                for (const auto& wj : *walls) {
                    WallSpec w;
                    const std::string p = "site.walls[" + std::to_string(i) + "]";
                    if (!wj.is_object()) {
                        problems.push_back(p + " must be an object");
                    } else {
                        for (auto it = wj.begin(); it != wj.end(); ++it) {
                            if (it.key() == "origin_m") w.origin_m = it->get<double>();
                            else if (it.key() == "courses") w.courses = it->get<int>();
                            else if (it.key() == "bricks_per_course") w.bricks_per_course = it->get<int>();
                            else if (it.key() == "brick_pitch_m") w.brick_pitch_m = it->get<double>();
                            else problems.push_back("unknown key: " + p + "." + it.key());
                        }
                        if (w.courses < 1) problems.push_back(p + ".courses must be >= 1");
                        if (w.bricks_per_course < 1) problems.push_back(p + ".bricks_per_course must be >= 1");
                        if (!(w.brick_pitch_m > 0)) problems.push_back(p + ".brick_pitch_m must be > 0");
                    }
                    c.site.walls.push_back(w);
                    ++i;
                }
            }
        }
        if (const json* storages = r.raw("storages")) {
            if (!storages->is_array()) {
                problems.push_back("site.storages must be an array");
            } else {
                int i = 0;
                for (const auto& sj : *storages) {
                    StorageSpec s;
                    s.unlimited = false;
                    const std::string p = "site.storages[" + std::to_string(i) + "]";
                    if (!sj.is_object()) {
                        problems.push_back(p + " must be an object");
                    } else {
                        for (auto it = sj.begin(); it != sj.end(); ++it) {
                            if (it.key() == "position_m") {
                                s.position_m = it->get<double>();
                            } else if (it.key() == "stock") {
                                if (it->is_string() && it->get<std::string>() == "unlimited") {
                                    s.unlimited = true;
                                } else if (it->is_number_integer()) {
                                    s.stock = it->get<long long>();
                                    if (s.stock < 0) problems.push_back(p + ".stock must be >= 0");
                                } else {
                                    problems.push_back(p + ".stock must be an integer or \"unlimited\"");
                                }
                            } else {
                                problems.push_back("unknown key: " + p + "." + it.key());
                            }
                        }
                    }
                    c.site.storages.push_back(s);
                    ++i;
                }
            }
        }
        r.get("wall_spacing_m", c.site.wall_spacing_m);
        r.ascend();
        if (!(c.site.wall_spacing_m > 0)) problems.push_back("site.wall_spacing_m must be > 0");
    }
    if (c.site.walls.empty()) c.site.walls.push_back(WallSpec{});
    if (c.site.storages.empty()) c.site.storages.push_back(StorageSpec{});

    if (r.descend("robot")) {
        r.get("lay_time_s", c.robot.lay_time_s);
        r.get("move_speed_mps", c.robot.move_speed_mps);
        r.get("safety_radius_m", c.robot.safety_radius_m);
        r.get("reach_m", c.robot.reach_m);
        r.get("buffer_capacity", c.robot.buffer_capacity);
        r.get("initial_buffer", c.robot.initial_buffer);
        r.get("backlog_limit", c.robot.backlog_limit);
        r.ascend();
    }
    if (!(c.robot.lay_time_s > 0)) problems.push_back("robot.lay_time_s must be > 0");
    if (!(c.robot.move_speed_mps > 0)) problems.push_back("robot.move_speed_mps must be > 0");
    if (c.robot.safety_radius_m < 0) problems.push_back("robot.safety_radius_m must be >= 0");
    if (c.robot.reach_m < 0) problems.push_back("robot.reach_m must be >= 0");
    if (c.robot.buffer_capacity < 1) problems.push_back("robot.buffer_capacity must be >= 1");
    if (c.robot.backlog_limit < 1) problems.push_back("robot.backlog_limit must be >= 1");
    if (c.robot.initial_buffer == -1) c.robot.initial_buffer = c.robot.buffer_capacity;
    if (c.robot.initial_buffer < 0 || c.robot.initial_buffer > c.robot.buffer_capacity)
        problems.push_back("robot.initial_buffer must be in [0, buffer_capacity]");

    if (r.descend("workers")) {
        if (r.descend("emr")) {
            r.get("walk_speed_mps", c.emr.walk_speed_mps);
            r.get("clean_time_s", c.emr.clean_time_s);
            read_fatigue(r, c.emr.fatigue, problems, "workers.emr");
            r.ascend();
        }
        if (r.descend("bs")) {
            r.get("walk_speed_mps", c.bs.walk_speed_mps);
            r.get("load_time_s", c.bs.load_time_s);
            r.get("carry_capacity", c.bs.carry_capacity);
            read_fatigue(r, c.bs.fatigue, problems, "workers.bs");
            if (r.descend("forgetting")) {
                r.get("enabled", c.bs.forgetting.enabled);
                r.get("p_skip", c.bs.forgetting.p_skip);
                r.get("extra_delay_mean_s", c.bs.forgetting.extra_delay_mean_s);
                r.ascend();
            }
            r.ascend();
        }
        r.ascend();
    }
    if (!(c.emr.walk_speed_mps > 0)) problems.push_back("workers.emr.walk_speed_mps must be > 0");
    if (!(c.emr.clean_time_s > 0)) problems.push_back("workers.emr.clean_time_s must be > 0");
    if (!(c.bs.walk_speed_mps > 0)) problems.push_back("workers.bs.walk_speed_mps must be > 0");
    if (c.bs.load_time_s < 0) problems.push_back("workers.bs.load_time_s must be >= 0");
    if (c.bs.carry_capacity < 1) problems.push_back("workers.bs.carry_capacity must be >= 1");
    if (c.bs.forgetting.p_skip < 0 || c.bs.forgetting.p_skip > 1)
        problems.push_back("workers.bs.forgetting.p_skip must be in [0, 1]");
    if (c.bs.forgetting.extra_delay_mean_s < 0)
        problems.push_back("workers.bs.forgetting.extra_delay_mean_s must be >= 0");

    if (r.descend("collaboration")) {
        std::string mode, phase;
        r.get("mode", mode);
        r.get("ci_s", c.collaboration.ci_s);
        r.get("sl", c.collaboration.sl);
        r.get("mutual_help", c.collaboration.mutual_help);
        r.get("reaction_delay_s", c.collaboration.reaction_delay_s);
        r.get("phase", phase);
        r.get("zero_cost_check", c.collaboration.zero_cost_check);
        r.get("check_duration_s", c.collaboration.check_duration_s);
        r.get("proactive_heartbeat", c.collaboration.proactive_heartbeat);
        r.ascend();
        if (!mode.empty()) {
            if (mode == "passive") c.collaboration.mode = CollabMode::Passive;
            else if (mode == "proactive") c.collaboration.mode = CollabMode::Proactive;
            else problems.push_back("collaboration.mode must be \"passive\" or \"proactive\"");
        }
        if (!phase.empty()) {
            if (phase == "even") c.collaboration.phase = PhaseMode::Even;
            else if (phase == "random") c.collaboration.phase = PhaseMode::Random;
            else problems.push_back("collaboration.phase must be \"even\" or \"random\"");
        }
    }
    if (!(c.collaboration.ci_s > 0)) problems.push_back("collaboration.ci_s must be > 0");
    if (c.collaboration.sl < 0 || c.collaboration.sl > c.robot.buffer_capacity)
        problems.push_back("collaboration.sl must be in [0, buffer_capacity]");
    if (c.collaboration.reaction_delay_s < 0) problems.push_back("collaboration.reaction_delay_s must be >= 0");
    if (c.collaboration.check_duration_s < 0) problems.push_back("collaboration.check_duration_s must be >= 0");

    if (r.descend("scenario")) {
        std::string kind;
        r.get("kind", kind);
        r.get("teams", c.scenario.teams);
        r.get("robots", c.scenario.robots);
        bool robots_given = r.has("robots");
        r.ascend();
        if (!kind.empty()) {
            if (kind == "srsw") c.scenario.kind = ScenarioKind::Srsw;
            else if (kind == "mrsw") c.scenario.kind = ScenarioKind::Mrsw;
            else if (kind == "mrmw") c.scenario.kind = ScenarioKind::Mrmw;
            else problems.push_back("scenario.kind must be \"srsw\", \"mrsw\" or \"mrmw\"");
        }
        switch (c.scenario.kind) {
            case ScenarioKind::Srsw:
                if (c.scenario.teams != 1) problems.push_back("scenario.teams must be 1 for srsw");
                if (c.scenario.robots != 1) problems.push_back("scenario.robots must be 1 for srsw");
                break;
            case ScenarioKind::Mrsw:
                if (c.scenario.teams != 1) problems.push_back("scenario.teams must be 1 for mrsw");
                if (c.scenario.robots < 2) problems.push_back("scenario.robots must be >= 2 for mrsw");
                break;
            case ScenarioKind::Mrmw:
                if (c.scenario.teams < 2) problems.push_back("scenario.teams must be >= 2 for mrmw");
                if (!robots_given) c.scenario.robots = c.scenario.teams;
                else if (c.scenario.robots != c.scenario.teams)
                    problems.push_back("scenario.robots must equal scenario.teams for mrmw (one robot per team)");
                break;
        }
    }

    if (r.descend("run")) {
        r.get("master_seed", c.run.master_seed);
        r.get("time_cap_s", c.run.time_cap_s);
        r.get("team_seeds", c.run.team_seeds);
        r.ascend();
    }
    if (!(c.run.time_cap_s > 0)) problems.push_back("run.time_cap_s must be > 0");
    if (!c.run.team_seeds.empty() && static_cast<int>(c.run.team_seeds.size()) != c.scenario.teams)
        problems.push_back("run.team_seeds must be empty or have one seed per team");

    if (r.descend("sweep")) {
        SweepSpec sw;
        r.get("ci_s", sw.ci_s);
        r.get("sl", sw.sl);
        std::vector<std::string> modes;
        r.get("modes", modes);
        r.get("replications", sw.replications);
        r.ascend();
        for (const auto& m : modes) {
            if (m == "passive") sw.modes.push_back(CollabMode::Passive);
            else if (m == "proactive") sw.modes.push_back(CollabMode::Proactive);
            else problems.push_back("sweep.modes entries must be \"passive\" or \"proactive\"");
        }
        if (sw.ci_s.empty()) problems.push_back("sweep.ci_s must be non-empty");
        for (double v : sw.ci_s)
            if (!(v > 0)) { problems.push_back("sweep.ci_s values must be > 0"); break; }
        if (sw.sl.empty()) problems.push_back("sweep.sl must be non-empty");
        for (int v : sw.sl)
            if (v < 0 || v > c.robot.buffer_capacity) {
                problems.push_back("sweep.sl values must be in [0, buffer_capacity]");
                break;
            }
        if (sw.modes.empty()) problems.push_back("sweep.modes must be non-empty");
        if (sw.replications < 1) problems.push_back("sweep.replications must be >= 1");
        c.sweep = std::move(sw);
    }

    r.finish_level();

    // Scenario geometry: a single wall/storage spec stands for "one per unit",
    // replicated along x at wall_spacing_m.
    const int need_walls = c.n_robots();
    if (static_cast<int>(c.site.walls.size()) == 1 && need_walls > 1) {
        WallSpec base = c.site.walls[0];
        for (int i = 1; i < need_walls; ++i) {
            WallSpec w = base;
            w.origin_m = base.origin_m + i * c.site.wall_spacing_m;
            c.site.walls.push_back(w);
        }
    }
    if (static_cast<int>(c.site.walls.size()) != need_walls)
        problems.push_back("site.walls must have 1 or " + std::to_string(need_walls) +
                           " entries for scenario " + to_string(c.scenario.kind));

    const int need_storages = c.scenario.kind == ScenarioKind::Mrmw ? c.scenario.teams : 1;
    if (static_cast<int>(c.site.storages.size()) == 1 && need_storages > 1) {
        StorageSpec base = c.site.storages[0];
        for (int i = 1; i < need_storages; ++i) {
            StorageSpec s = base;
            s.position_m = base.position_m + i * c.site.wall_spacing_m;
            c.site.storages.push_back(s);
        }
    }
    if (static_cast<int>(c.site.storages.size()) != 1 &&
        static_cast<int>(c.site.storages.size()) != need_storages)
        problems.push_back("site.storages must have 1 or " + std::to_string(need_storages) + " entries");

    if (!problems.empty()) throw ConfigError(std::move(problems));
    return c;
}

SimConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot open config file: " + path});
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

namespace {

json to_json(const SimConfig& c) {
    json j;
    json site;
    site["walls"] = json::array();
    for (const auto& w : c.site.walls) {
        json wj;
        wj["origin_m"] = w.origin_m;
        wj["courses"] = w.courses;
        wj["bricks_per_course"] = w.bricks_per_course;
        wj["brick_pitch_m"] = w.brick_pitch_m;
        site["walls"].push_back(wj);
    }
    site["storages"] = json::array();
    for (const auto& s : c.site.storages) {
        json sj;
        sj["position_m"] = s.position_m;
        if (s.unlimited) sj["stock"] = "unlimited";
        else sj["stock"] = s.stock;
        site["storages"].push_back(sj);
    }
    site["wall_spacing_m"] = c.site.wall_spacing_m;
    j["site"] = site;

    json robot;
    robot["lay_time_s"] = c.robot.lay_time_s;
    robot["move_speed_mps"] = c.robot.move_speed_mps;
    robot["safety_radius_m"] = c.robot.safety_radius_m;
    robot["reach_m"] = c.robot.reach_m;
    robot["buffer_capacity"] = c.robot.buffer_capacity;
    robot["initial_buffer"] = c.robot.initial_buffer;
    robot["backlog_limit"] = c.robot.backlog_limit;
    j["robot"] = robot;

    json workers;
    json emr;
    emr["walk_speed_mps"] = c.emr.walk_speed_mps;
    emr["clean_time_s"] = c.emr.clean_time_s;
    emr["fatigue"] = fatigue_json(c.emr.fatigue);
    workers["emr"] = emr;
    json bs;
    bs["walk_speed_mps"] = c.bs.walk_speed_mps;
    bs["load_time_s"] = c.bs.load_time_s;
    bs["carry_capacity"] = c.bs.carry_capacity;
    bs["fatigue"] = fatigue_json(c.bs.fatigue);
    json forgetting;
    forgetting["enabled"] = c.bs.forgetting.enabled;
    forgetting["p_skip"] = c.bs.forgetting.p_skip;
    forgetting["extra_delay_mean_s"] = c.bs.forgetting.extra_delay_mean_s;
    bs["forgetting"] = forgetting;
    workers["bs"] = bs;
    j["workers"] = workers;

    json collab;
    collab["mode"] = to_string(c.collaboration.mode);
    collab["ci_s"] = c.collaboration.ci_s;
    collab["sl"] = c.collaboration.sl;
    collab["mutual_help"] = c.collaboration.mutual_help;
    collab["reaction_delay_s"] = c.collaboration.reaction_delay_s;
    collab["phase"] = to_string(c.collaboration.phase);
    collab["zero_cost_check"] = c.collaboration.zero_cost_check;
    collab["check_duration_s"] = c.collaboration.check_duration_s;
    collab["proactive_heartbeat"] = c.collaboration.proactive_heartbeat;
    j["collaboration"] = collab;

    json scenario;
    scenario["kind"] = to_string(c.scenario.kind);
    scenario["teams"] = c.scenario.teams;
    scenario["robots"] = c.scenario.robots;
    j["scenario"] = scenario;

    json run;
    run["master_seed"] = c.run.master_seed;
    run["time_cap_s"] = c.run.time_cap_s;
    run["team_seeds"] = c.run.team_seeds;
    j["run"] = run;

    if (c.sweep) {
        json sw;
        sw["ci_s"] = c.sweep->ci_s;
        sw["sl"] = c.sweep->sl;
        sw["modes"] = json::array();
        for (auto m : c.sweep->modes) sw["modes"].push_back(to_string(m));
        sw["replications"] = c.sweep->replications;
        j["sweep"] = sw;
    }
    return j;
}

}  // namespace

std::string serialize_config(const SimConfig& cfg) { return to_json(cfg).dump(2) + "\n"; }

std::string annotated_defaults() {
    // Comments for keys whose names alone do not explain them.
    static const std::pair<const char*, const char*> notes[] = {
        {"origin_m", "wall start along the one-dimensional site line"},
        {"wall_spacing_m", "gap between replicated walls in multi-robot scenarios"},
        {"stock", "brick count, or \"unlimited\""},
        {"safety_radius_m", "a worker this close to the laying face blocks the robot"},
        {"initial_buffer", "-1 starts full"},
        {"backlog_limit", "uncleaned-joint debt at which the robot stops laying"},
        {"lambda_per_s", "fatigue accumulation rate while working"},
        {"mu_per_s", "fatigue recovery rate while resting"},
        {"alpha", "weight of fatigue in the speed penalty"},
        {"m_min", "floor of the fatigue speed multiplier"},
        {"p_skip", "chance a scheduled check is forgotten"},
        {"extra_delay_mean_s", "mean lateness added to a remembered check"},
        {"ci_s", "seconds between scheduled buffer checks per worker"},
        {"sl", "buffer level at or below which a check converts to a supply trip"},
        {"reaction_delay_s", "latency before acting on a proactive signal"},
        {"phase", "check-schedule offsets: Even spreads workers, Random draws per run"},
        {"zero_cost_check", "checks observe remotely: no walk, no check time"},
        {"check_duration_s", "time spent at the robot per check visit"},
        {"proactive_heartbeat", "keep periodic checks alive in proactive mode"},
        {"time_cap_s", "runs exceeding this wall-clock of simulated time are cut off"},
        {"team_seeds", "optional per-team seeds overriding derivation from master_seed"},
    };
    const std::string body = serialize_config(default_config());
    std::ostringstream out;
    out << "# Default configuration. Full-line # comments are ignored by the parser.\n";
    std::istringstream in(body);
    std::string line;
    while (std::getline(in, line)) {
        for (const auto& [key, note] : notes) {
            if (line.find("\"" + std::string(key) + "\": ") != std::string::npos) {
                const std::size_t indent = line.find_first_not_of(' ');
                out << line.substr(0, indent) << "# " << note << "\n";
                break;
            }
        }
        out << line << "\n";
    }
    return out.str();
}

std::uint64_t config_hash(const SimConfig& cfg) {
    const std::string s = serialize_config(cfg);
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace hrcsim
