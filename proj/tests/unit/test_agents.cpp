#include <cmath>
#include <vector>

#include "doctest.h"
#include "hrcsim/agents.hpp"

using namespace hrcsim;

namespace {

// Reference integrator for dF/dt = lambda(1-F) (working) / -mu F (resting).
// Classic RK4 at a fixed step; the closed form must agree to high precision.
double integrate_fatigue(double f, const FatigueParams& p, double duration_s, bool working,
                         double dt) {
    auto deriv = [&](double x) { return working ? p.lambda_per_s * (1.0 - x) : -p.mu_per_s * x; };
    double t = 0;
    while (t < duration_s) {
        const double h = std::min(dt, duration_s - t);
        const double k1 = deriv(f);
        const double k2 = deriv(f + 0.5 * h * k1);
        const double k3 = deriv(f + 0.5 * h * k2);
        const double k4 = deriv(f + h * k3);
        f += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
        t += h;
    }
    return f;
}

FatigueParams params(double lambda, double mu, double alpha = 0.4, double m_min = 0.3) {
    return FatigueParams{true, lambda, mu, alpha, m_min};
}

}  // namespace

TEST_CASE("fatigue closed forms") {
    SUBCASE("resting with mu=0 holds the level") {
        FatigueState s{0.5};
        s = fatigue_evolve(s, params(1.0 / 600, 0.0), 1000.0, false);
        CHECK(s.level == doctest::Approx(0.5));
    }
    SUBCASE("working from rest for 4 h at lambda=1/7200") {
        FatigueState s{0.0};
        s = fatigue_evolve(s, params(1.0 / 7200, 1.0 / 1200), 4 * 3600.0, true);
        CHECK(s.level == doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-12));
    }
    SUBCASE("resting halves exponentially") {
        FatigueState s{0.8};
        s = fatigue_evolve(s, params(1.0 / 600, 1.0 / 1200), 1200.0, false);
        CHECK(s.level == doctest::Approx(0.8 * std::exp(-1.0)).epsilon(1e-12));
    }
    SUBCASE("disabled parameters leave the level untouched") {
        FatigueParams off;
        FatigueState s{0.3};
        CHECK(fatigue_evolve(s, off, 5000.0, true).level == doctest::Approx(0.3));
    }
    SUBCASE("level stays within [0,1]") {
        FatigueState s{0.0};
        s = fatigue_evolve(s, params(1.0, 1.0), 1e7, true);
        CHECK(s.level <= 1.0);
        s = fatigue_evolve(s, params(1.0, 1.0), 1e7, false);
        CHECK(s.level >= 0.0);
    }
}

TEST_CASE("closed form agrees with 0.1 s step integration over 8 h") {
    const FatigueParams p = params(1.0 / 3600, 1.0 / 1800);
    double closed = 0.2, stepped = 0.2;
    // Alternating 30 min work / 10 min rest across a full shift.
    bool working = true;
    double elapsed = 0;
    while (elapsed < 8 * 3600.0) {
        const double chunk = working ? 1800.0 : 600.0;
        closed = fatigue_evolve(FatigueState{closed}, p, chunk, working).level;
        stepped = integrate_fatigue(stepped, p, chunk, working, 0.1);
        elapsed += chunk;
        working = !working;
        REQUIRE(std::fabs(closed - stepped) / std::max(closed, 1e-12) < 1e-6);
    }
    CHECK(closed > 0.2);  // net accumulation under this duty cycle
}

TEST_CASE("performance multiplier") {
    SUBCASE("disabled fatigue means multiplier exactly 1") {
        FatigueParams off;
        CHECK(performance_multiplier(FatigueState{0.9}, off) == 1.0);
        CHECK(effective_duration(42.0, FatigueState{0.9}, off) == 42.0);
    }
    SUBCASE("fresh worker works at nominal speed") {
        CHECK(effective_duration(80.0, FatigueState{0.0}, params(1, 1, 1.0, 0.3)) ==
              doctest::Approx(80.0));
    }
    SUBCASE("floor engages at full fatigue") {
        CHECK(performance_multiplier(FatigueState{1.0}, params(1, 1, 1.0, 0.3)) ==
              doctest::Approx(0.3));
        CHECK(effective_duration(60.0, FatigueState{1.0}, params(1, 1, 1.0, 0.3)) ==
              doctest::Approx(60.0 / 0.3));
    }
    SUBCASE("mid fatigue") {
        CHECK(performance_multiplier(FatigueState{0.5}, params(1, 1, 0.8, 0.3)) ==
              doctest::Approx(0.6));
        CHECK(effective_duration(80.0, FatigueState{0.5}, params(1, 1, 0.8, 0.3)) ==
              doctest::Approx(80.0 / 0.6));
    }
}

namespace {

RobotView view(int buffer, int backlog_limit = 10, double radius = 0.5, double reach = 0.3,
               double pos = 0.0) {
    return RobotView{buffer, backlog_limit, radius, reach, pos};
}

Wall wall_at(double origin, int laid = 0, int cleaned = 0) {
    Wall w;
    w.origin_m = origin;
    w.courses = 1;
    w.bricks_per_course = 40;
    w.brick_pitch_m = 0.25;
    w.lay_cursor = laid;
    w.clean_cursor = cleaned;
    return w;
}

}  // namespace

TEST_CASE("robot guards") {
    SUBCASE("all guards pass: lay the next brick") {
        Wall w = wall_at(0.0, 5, 3);
        const LayDecision d = robot_try_lay(view(5, 10, 0.5, 0.3, brick_position(w, 5)), w, {});
        CHECK(d.kind == LayDecision::Kind::Lay);
        CHECK(d.target_m == doctest::Approx(brick_position(w, 5)));
    }
    SUBCASE("backlog at the limit blocks, inclusive semantics") {
        Wall w = wall_at(0.0, 13, 3);
        const LayDecision d = robot_try_lay(view(5, 10), w, {});
        CHECK(d.kind == LayDecision::Kind::Block);
        CHECK(d.why.find("backlog") != std::string::npos);
    }
    SUBCASE("backlog one under the limit does not block") {
        Wall w = wall_at(0.0, 12, 3);
        const LayDecision d =
            robot_try_lay(view(5, 10, 0.5, 20.0, 0.0), w, {});  // wide reach: no Move
        CHECK(d.kind == LayDecision::Kind::Lay);
    }
    SUBCASE("worker at 2.0 m and next brick at 2.3 m blocks inside radius 0.5") {
        Wall w = wall_at(2.3);
        const std::vector<double> hazards{2.0};
        const LayDecision d = robot_try_lay(view(5, 10, 0.5, 0.3, 2.3), w, hazards);
        CHECK(d.kind == LayDecision::Kind::Block);
        CHECK(d.why.find("safety") != std::string::npos);
    }
    SUBCASE("worker exactly at the radius does not block") {
        // Exact quarters: 2.25 - 1.75 is exactly 0.5, probing the strict compare.
        Wall w = wall_at(2.25);
        const std::vector<double> hazards{1.75};
        CHECK(robot_try_lay(view(5, 10, 0.5, 0.3, 2.25), w, hazards).kind == LayDecision::Kind::Lay);
    }
    SUBCASE("empty buffer starves") {
        Wall w = wall_at(0.0);
        CHECK(robot_try_lay(view(0), w, {}).kind == LayDecision::Kind::Starve);
    }
    SUBCASE("block wins over starve") {
        Wall w = wall_at(0.0, 10, 0);
        CHECK(robot_try_lay(view(0, 10), w, {}).kind == LayDecision::Kind::Block);
        Wall w2 = wall_at(2.3);
        const std::vector<double> hazards{2.2};
        CHECK(robot_try_lay(view(0, 10, 0.5, 0.3, 2.3), w2, hazards).kind ==
              LayDecision::Kind::Block);
    }
    SUBCASE("target beyond reach moves first") {
        Wall w = wall_at(0.0, 8, 8);  // next brick at 2.0 m
        const LayDecision d = robot_try_lay(view(5, 10, 0.5, 0.3, 0.0), w, {});
        CHECK(d.kind == LayDecision::Kind::Move);
        CHECK(d.target_m == doctest::Approx(2.0));
    }
    SUBCASE("target exactly at reach lays without moving") {
        Wall w = wall_at(0.0, 1, 1);  // next brick at 0.25 m
        CHECK(robot_try_lay(view(5, 10, 0.2, 0.25, 0.0), w, {}).kind == LayDecision::Kind::Lay);
    }
}
