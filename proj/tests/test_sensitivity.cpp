#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "microgrid/sensitivity.hpp"
#include "test_support.hpp"

using namespace microgrid;
using microgrid::testing::make_toy_scenario;

namespace {

SearchBounds tight_bounds() {
    return {{10.0, 10.0, 1.0}, {1e5, 1e5, 8760.0}};
}

PsoConfig quick_config() {
    PsoConfig cfg;
    cfg.swarm_size = 30;
    cfg.max_iterations = 30;
    cfg.threads = 4;
    return cfg;
}

}  // namespace

TEST_CASE("default multipliers are 20 linear steps on [0.1, 2.0]") {
    auto m = SweepSpec::default_multipliers();
    REQUIRE(m.size() == 20);
    CHECK(m.front() == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(m.back() == doctest::Approx(2.0).epsilon(1e-12));
    double step = m[1] - m[0];
    for (std::size_t i = 1; i < m.size(); ++i) {
        CHECK(m[i] - m[i - 1] == doctest::Approx(step).epsilon(1e-9));
    }
}

TEST_CASE("apply_multiplier touches only the named component") {
    Scenario base = make_toy_scenario(20);
    Scenario s = apply_multiplier(base, CostComponent::VrfbModule, 0.5);
    CHECK(s.multipliers.vrfb_module == 0.5);
    CHECK(s.multipliers.lib_energy == 1.0);
    CHECK(s.multipliers.solar_power == 1.0);
    CHECK(s.multipliers.tidal_power == 1.0);
    CHECK_THROWS_AS(apply_multiplier(base, CostComponent::LibEnergy, 0.0), std::invalid_argument);

    // The VRFB multiplier scales only the module term of the LCOE, so the cost
    // with multiplier 1 equals the unmodified scenario.
    DesignPoint d{800.0, 300.0, 24.0};
    CHECK(objective(d, apply_multiplier(base, CostComponent::VrfbModule, 1.0)) ==
          objective(d, base));
    CHECK(objective(d, s) < objective(d, base));
}

TEST_CASE("component names round-trip") {
    for (auto c : {CostComponent::LibEnergy, CostComponent::VrfbModule, CostComponent::SolarPower,
                   CostComponent::TidalPower}) {
        CHECK(cost_component_from_string(to_string(c)) == c);
    }
    CHECK_THROWS_AS(cost_component_from_string("diesel"), std::invalid_argument);
}

TEST_CASE("step seeds are deterministic and distinct") {
    CHECK(step_seed(42, 3, 0) == step_seed(42, 3, 0));
    CHECK(step_seed(42, 3, 0) != step_seed(42, 4, 0));
    CHECK(step_seed(42, 3, 0) != step_seed(42, 3, 1));
    CHECK(step_seed(42, 3, 0) != step_seed(43, 3, 0));
}

TEST_CASE("sweep rows re-simulate exactly and the identity step matches baseline") {
    Scenario base = make_toy_scenario(21);
    SweepSpec spec;
    spec.component = CostComponent::TidalPower;
    spec.multipliers = {0.5, 1.0, 1.5};
    spec.master_seed = 7;

    auto rows = cost_sweep(spec, base, tight_bounds(), quick_config());
    REQUIRE(rows.size() == 3);

    for (const auto& row : rows) {
        Scenario s = apply_multiplier(base, spec.component, row.multiplier);
        SimulationResult r = run_year(row.design, s);
        CHECK(r.total_lcoe == row.total_lcoe);
        CHECK(r.lib_sizing.capacity_kwh == row.lib_sizing.capacity_kwh);
        CHECK(r.vrfb_sizing.capacity_kwh == row.vrfb_sizing.capacity_kwh);
    }

    // The multiplier-1.0 row is the un-swept baseline optimization run with
    // the same step seed.
    PsoConfig cfg = quick_config();
    cfg.seed = step_seed(spec.master_seed, 1, 0);
    TwoStageResult baseline = two_stage(tight_bounds(), base, cfg);
    CHECK(rows[1].total_lcoe == baseline.lcoe);
    CHECK(rows[1].design.tidal_power_kw == baseline.design.tidal_power_kw);
}

TEST_CASE("sweep rejects non-increasing multipliers") {
    Scenario base = make_toy_scenario(22);
    SweepSpec spec;
    spec.multipliers = {1.0, 0.5};
    CHECK_THROWS_AS(cost_sweep(spec, base, tight_bounds(), quick_config()),
                    std::invalid_argument);
}
