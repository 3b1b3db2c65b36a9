#include <stdexcept>
#include <sstream>

#include "doctest.h"
#include "microgrid/scenario_config.hpp"

using namespace microgrid;

TEST_CASE("empty config reproduces the baseline parameters") {
    std::istringstream in("");
    ScenarioSettings s = parse_scenario_settings(in, "test");
    CHECK(s.annual_energy_gwh == 4.57);
    CHECK(s.solar_capacity_factor == 0.159);
    CHECK(s.solar_spec.unit_cost == 1060.0);
    CHECK(s.tidal_spec.unit_cost == 4300.0);
    CHECK(s.lib.energy_cost == 285.0);
    CHECK(s.lib.cycle_life == 3500.0);
    CHECK(s.vrfb.candc_cost == 650.0);
    CHECK(s.vrfb.cycle_life == 10000.0);
    CHECK(s.backup_rate_per_mwh == 10000.0);
}

TEST_CASE("sections and keys are parsed with comments and whitespace") {
    std::istringstream in(
        "# cost study\n"
        "[lib]\n"
        "energy_cost = 150\n"
        "  cycle_life=4000  \n"
        "\n"
        "[tidal]\n"
        "semidiurnal_period_h = 6.2\n"
        "[controller]\n"
        "warmup = truncate\n"
        "[multipliers]\n"
        "vrfb_module = 0.5\n");
    ScenarioSettings s = parse_scenario_settings(in, "test");
    CHECK(s.lib.energy_cost == 150.0);
    CHECK(s.lib.cycle_life == 4000.0);
    CHECK(s.tidal.semidiurnal_period_h == 6.2);
    CHECK(s.warmup == ControllerParams::Warmup::Truncate);
    CHECK(s.multipliers.vrfb_module == 0.5);
}

TEST_CASE("unknown sections, keys and bad numbers are rejected") {
    {
        std::istringstream in("[diesel]\nprice = 1\n");
        CHECK_THROWS_AS(parse_scenario_settings(in, "test"), std::runtime_error);
    }
    {
        std::istringstream in("[lib]\nenergy = 1\n");
        CHECK_THROWS_AS(parse_scenario_settings(in, "test"), std::runtime_error);
    }
    {
        std::istringstream in("[lib]\nenergy_cost = cheap\n");
        CHECK_THROWS_AS(parse_scenario_settings(in, "test"), std::runtime_error);
    }
    {
        std::istringstream in("[controller]\nwarmup = maybe\n");
        CHECK_THROWS_AS(parse_scenario_settings(in, "test"), std::runtime_error);
    }
    {
        std::istringstream in("stray = 1\n");
        CHECK_THROWS_AS(parse_scenario_settings(in, "test"), std::runtime_error);
    }
}

TEST_CASE("build_scenario derives delivered energy from demand when unset") {
    ScenarioSettings settings;
    HourlySeries demand{std::vector<double>(kHoursPerYear, 100.0)};
    Scenario s = build_scenario(settings, demand, HourlySeries::zeros());
    CHECK(s.delivered_energy_mwh == doctest::Approx(8760.0 * 100.0 / 1000.0).epsilon(1e-12));

    settings.delivered_energy_mwh = 4570.0;
    Scenario t = build_scenario(settings, demand, HourlySeries::zeros());
    CHECK(t.delivered_energy_mwh == 4570.0);
}
