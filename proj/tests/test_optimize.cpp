#include <stdexcept>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "microgrid/optimize.hpp"
#include "test_support.hpp"

using namespace microgrid;
using microgrid::testing::make_toy_scenario;

namespace {

Scenario free_energy_scenario() {
    Scenario s = make_toy_scenario(10);
    s.tidal_spec.unit_cost = 0.0;
    s.solar_spec.unit_cost = 0.0;
    s.lib.energy_cost = 0.0;
    s.lib.power_cost = 0.0;
    s.vrfb.module_cost_a = 2.0;  // keep a > c
    s.vrfb.module_cost_c = 1.0;
    s.vrfb.candc_cost = 0.0;
    s.vrfb.pcs_cost = 0.0;
    s.vrfb.bop_cost = 0.0;
    s.backup_rate_per_mwh = 0.0;
    return s;
}

SearchBounds tight_bounds() {
    return {{10.0, 10.0, 1.0}, {1e5, 1e5, 8760.0}};
}

}  // namespace

TEST_CASE("2x2 grid evaluates exactly four cells and picks their minimum") {
    Scenario s = make_toy_scenario(11);
    SliceSpec slice{Var::TidalPower, Var::SolarPower, {0.0, 0.0, 24.0}, DeficitRouting::Split};
    GridResult g = grid_search(slice, s, tight_bounds(), 2);
    REQUIRE(g.cells.size() == 4);
    double best = g.cells[0].lcoe;
    for (const auto& c : g.cells) best = std::min(best, c.lcoe);
    CHECK(g.best_lcoe == best);
}

TEST_CASE("constant objective makes every grid point an argmin") {
    Scenario s = free_energy_scenario();
    s.vrfb.module_cost_a = 0.0;
    s.vrfb.module_cost_c = 0.0;
    SliceSpec slice{Var::TidalPower, Var::SolarPower, {0.0, 0.0, 24.0}, DeficitRouting::Split};
    GridResult g = grid_search(slice, s, tight_bounds(), 3);
    for (const auto& c : g.cells) {
        CHECK(c.lcoe == doctest::Approx(g.best_lcoe).epsilon(1e-12));
    }
}

TEST_CASE("grid search matches an exhaustive oracle over the same points") {
    Scenario s = make_toy_scenario(12);
    SliceSpec slice{Var::TidalPower, Var::Span, {0.0, 0.0, 24.0}, DeficitRouting::Split};
    SearchBounds b = tight_bounds();
    const int n = 5;
    GridResult g = grid_search(slice, s, b, n, 4);

    Scenario sliced = s;
    sliced.routing = slice.routing;
    double oracle_best = std::numeric_limits<double>::infinity();
    std::size_t k = 0;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i, ++k) {
            double x = std::pow(10.0, std::log10(b.lower[0]) +
                                          (std::log10(b.upper[0]) - std::log10(b.lower[0])) * i /
                                              (n - 1));
            double y = std::pow(10.0, std::log10(b.lower[2]) +
                                          (std::log10(b.upper[2]) - std::log10(b.lower[2])) * j /
                                              (n - 1));
            double lcoe = objective({x, slice.fixed[1], y}, sliced);
            CHECK(g.cells[k].lcoe == doctest::Approx(lcoe).epsilon(1e-12));
            oracle_best = std::min(oracle_best, lcoe);
        }
    }
    CHECK(g.best_lcoe == doctest::Approx(oracle_best).epsilon(1e-12));
}

TEST_CASE("grid surface is independent of the thread count") {
    Scenario s = make_toy_scenario(13);
    SliceSpec slice{Var::TidalPower, Var::SolarPower, {0.0, 0.0, 12.0}, DeficitRouting::LibOnly};
    GridResult serial = grid_search(slice, s, tight_bounds(), 4, 1);
    GridResult parallel = grid_search(slice, s, tight_bounds(), 4, 8);
    REQUIRE(serial.cells.size() == parallel.cells.size());
    for (std::size_t k = 0; k < serial.cells.size(); ++k) {
        CHECK(serial.cells[k].lcoe == parallel.cells[k].lcoe);
    }
}

TEST_CASE("nelder_mead_log finds the minimum of a log-space quadratic") {
    SearchBounds b{{1e-2, 1e-2, 1.0}, {1e4, 1e4, 8760.0}};
    std::array<double, 3> target{2.0, -1.0, 1.5};  // in log10 coordinates
    auto f = [&](const std::array<double, 3>& x) {
        double v = 0.0;
        for (int i = 0; i < 3; ++i) {
            double z = std::log10(x[i]) - target[i];
            v += z * z;
        }
        return v;
    };
    auto result = nelder_mead_log(f, b, {1.0, 1.0, 10.0});
    for (int i = 0; i < 3; ++i) {
        CHECK(std::log10(result[i]) == doctest::Approx(target[i]).epsilon(1e-4));
    }
}

TEST_CASE("local_refine never worsens the start and rejects out-of-bounds starts") {
    Scenario s = make_toy_scenario(14);
    SearchBounds b = tight_bounds();
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        DesignPoint start{200.0 + 300.0 * seed, 100.0 + 50.0 * seed, 10.0 + 5.0 * seed};
        DesignPoint refined = local_refine(start, b, s);
        CHECK(objective(refined, s) <= objective(start, s));
    }
    CHECK_THROWS_AS(local_refine({1.0, 100.0, 10.0}, b, s), std::invalid_argument);
}

TEST_CASE("PSO solves a 3-D sphere in log space") {
    SearchBounds b{{1e-2, 1e-2, 1e-2}, {1e2, 1e2, 1e2}};
    std::array<double, 3> target{1.0, -0.5, 0.25};
    auto f = [&](const std::array<double, 3>& x) {
        double v = 0.0;
        for (int i = 0; i < 3; ++i) {
            double z = std::log10(x[i]) - target[i];
            v += z * z;
        }
        return v;
    };
    PsoConfig cfg;
    cfg.swarm_size = 200;
    cfg.seed = 5;
    PsoResult r = pso_minimize(f, b, cfg);
    CHECK(r.best_lcoe <= 1e-3);
}

TEST_CASE("PSO is deterministic for a fixed seed, at any thread count") {
    Scenario s = make_toy_scenario(15);
    PsoConfig cfg;
    cfg.swarm_size = 30;
    cfg.max_iterations = 25;
    cfg.seed = 77;
    PsoResult a = pso(tight_bounds(), s, cfg);
    cfg.threads = 8;
    PsoResult b = pso(tight_bounds(), s, cfg);
    CHECK(a.best_lcoe == b.best_lcoe);
    CHECK(a.best.tidal_power_kw == b.best.tidal_power_kw);
    CHECK(a.best.solar_power_kw == b.best.solar_power_kw);
    CHECK(a.best.span_h == b.best.span_h);
}

TEST_CASE("two_stage refinement never worsens stage one") {
    Scenario s = make_toy_scenario(16);
    PsoConfig cfg;
    cfg.swarm_size = 40;
    cfg.max_iterations = 40;
    cfg.seed = 1;
    cfg.threads = 4;
    TwoStageResult r = two_stage(tight_bounds(), s, cfg);
    CHECK(r.lcoe <= r.stage1.best_lcoe + 1e-12);
    // progress log is non-increasing
    for (std::size_t i = 1; i < r.stage1.progress.size(); ++i) {
        CHECK(r.stage1.progress[i].second <= r.stage1.progress[i - 1].second);
    }
}

TEST_CASE("free energy drives the optimum to zero LCOE") {
    Scenario s = free_energy_scenario();
    s.vrfb.module_cost_a = 0.0;
    s.vrfb.module_cost_c = 0.0;
    PsoConfig cfg;
    cfg.swarm_size = 20;
    cfg.max_iterations = 10;
    cfg.seed = 3;
    TwoStageResult r = two_stage(tight_bounds(), s, cfg);
    CHECK(r.lcoe == 0.0);
}

TEST_CASE("every PSO candidate stays within bounds") {
    SearchBounds b{{1.0, 1.0, 1.0}, {10.0, 10.0, 10.0}};
    bool ok = true;
    auto f = [&](const std::array<double, 3>& x) {
        for (double v : x) {
            if (v < b.lower[0] - 1e-9 || v > b.upper[0] + 1e-9) ok = false;
        }
        return x[0] + x[1] + x[2];
    };
    PsoConfig cfg;
    cfg.swarm_size = 50;
    cfg.max_iterations = 50;
    cfg.seed = 9;
    pso_minimize(f, b, cfg);
    CHECK(ok);
}
