#pragma once

#include <iosfwd>
#include <string>

#include "microgrid/simulate.hpp"

namespace microgrid {

/// Scenario parameters as read from a config file. Every field defaults to
/// the baseline study, so an empty file (or no file) reproduces it.
struct ScenarioSettings {
    double annual_energy_gwh = 4.57;
    double solar_capacity_factor = 0.159;
    double delivered_energy_mwh = 0.0;  // 0 means: derive from the demand profile
    double backup_rate_per_mwh = 10000.0;
    TidalParams tidal;
    LibParams lib;
    VrfbParams vrfb;
    GeneratorSpec solar_spec{0.0, 1060.0, 30.0};
    GeneratorSpec tidal_spec{0.0, 4300.0, 20.0};
    CostMultipliers multipliers;
    ControllerParams::Warmup warmup = ControllerParams::Warmup::ZeroPad;
};

/// INI-style file: [section] headers, key = value lines, '#' comments.
/// Unknown sections or keys are errors.
ScenarioSettings parse_scenario_settings(std::istream& in, const std::string& origin);
ScenarioSettings load_scenario_settings(const std::string& path);

/// Attaches profiles to the parsed settings.
Scenario build_scenario(const ScenarioSettings& settings, HourlySeries demand,
                        HourlySeries solar_unit);

}  // namespace microgrid
