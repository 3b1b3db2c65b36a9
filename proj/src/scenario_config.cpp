#include "microgrid/scenario_config.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <stdexcept>

namespace microgrid {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

ScenarioSettings parse_scenario_settings(std::istream& in, const std::string& origin) {
    ScenarioSettings s;

    std::map<std::string, std::map<std::string, std::function<void(double)>>> numeric = {
        {"demand",
         {{"annual_energy_gwh", [&](double v) { s.annual_energy_gwh = v; }},
          {"delivered_energy_mwh", [&](double v) { s.delivered_energy_mwh = v; }}}},
        {"solar",
         {{"unit_cost", [&](double v) { s.solar_spec.unit_cost = v; }},
          {"lifetime_y", [&](double v) { s.solar_spec.lifetime_y = v; }},
          {"capacity_factor", [&](double v) { s.solar_capacity_factor = v; }}}},
        {"tidal",
         {{"unit_cost", [&](double v) { s.tidal_spec.unit_cost = v; }},
          {"lifetime_y", [&](double v) { s.tidal_spec.lifetime_y = v; }},
          {"semidiurnal_period_h", [&](double v) { s.tidal.semidiurnal_period_h = v; }},
          {"fortnightly_period_h", [&](double v) { s.tidal.fortnightly_period_h = v; }},
          {"semidiurnal_phase_h", [&](double v) { s.tidal.semidiurnal_phase_h = v; }},
          {"fortnightly_phase_h", [&](double v) { s.tidal.fortnightly_phase_h = v; }}}},
        {"lib",
         {{"energy_cost", [&](double v) { s.lib.energy_cost = v; }},
          {"power_cost", [&](double v) { s.lib.power_cost = v; }},
          {"max_lifetime_y", [&](double v) { s.lib.max_lifetime_y = v; }},
          {"cycle_life", [&](double v) { s.lib.cycle_life = v; }},
          {"round_trip_eff", [&](double v) { s.lib.round_trip_eff = v; }}}},
        {"vrfb",
         {{"module_cost_a", [&](double v) { s.vrfb.module_cost_a = v; }},
          {"module_cost_b", [&](double v) { s.vrfb.module_cost_b = v; }},
          {"module_cost_c", [&](double v) { s.vrfb.module_cost_c = v; }},
          {"candc_cost", [&](double v) { s.vrfb.candc_cost = v; }},
          {"pcs_cost", [&](double v) { s.vrfb.pcs_cost = v; }},
          {"bop_cost", [&](double v) { s.vrfb.bop_cost = v; }},
          {"max_lifetime_y", [&](double v) { s.vrfb.max_lifetime_y = v; }},
          {"cycle_life", [&](double v) { s.vrfb.cycle_life = v; }},
          {"round_trip_eff", [&](double v) { s.vrfb.round_trip_eff = v; }}}},
        {"economics", {{"backup_rate_per_mwh", [&](double v) { s.backup_rate_per_mwh = v; }}}},
        {"multipliers",
         {{"lib_energy", [&](double v) { s.multipliers.lib_energy = v; }},
          {"vrfb_module", [&](double v) { s.multipliers.vrfb_module = v; }},
          {"solar_power", [&](double v) { s.multipliers.solar_power = v; }},
          {"tidal_power", [&](double v) { s.multipliers.tidal_power = v; }}}},
    };

    std::string section;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        std::string t = strip(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']') {
                throw std::runtime_error(origin + ": malformed section at line " +
                                         std::to_string(row));
            }
            section = strip(t.substr(1, t.size() - 2));
            if (section != "controller" && numeric.find(section) == numeric.end()) {
                throw std::runtime_error(origin + ": unknown section [" + section + "]");
            }
            continue;
        }
        std::size_t eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(origin + ": expected key = value at line " +
                                     std::to_string(row));
        }
        std::string key = strip(t.substr(0, eq));
        std::string value = strip(t.substr(eq + 1));

        if (section == "controller") {
            if (key != "warmup") {
                throw std::runtime_error(origin + ": unknown key '" + key + "' in [controller]");
            }
            if (value == "zero_pad") {
                s.warmup = ControllerParams::Warmup::ZeroPad;
            } else if (value == "truncate") {
                s.warmup = ControllerParams::Warmup::Truncate;
            } else {
                throw std::runtime_error(origin + ": warmup must be zero_pad or truncate");
            }
            continue;
        }

        auto sec = numeric.find(section);
        if (sec == numeric.end()) {
            throw std::runtime_error(origin + ": key '" + key + "' outside any section at line " +
                                     std::to_string(row));
        }
        auto setter = sec->second.find(key);
        if (setter == sec->second.end()) {
            throw std::runtime_error(origin + ": unknown key '" + key + "' in [" + section + "]");
        }
        char* end = nullptr;
        double v = std::strtod(value.c_str(), &end);
        if (end == value.c_str() || *end != '\0') {
            throw std::runtime_error(origin + ": cannot parse number '" + value + "' at line " +
                                     std::to_string(row));
        }
        setter->second(v);
    }
    return s;
}

ScenarioSettings load_scenario_settings(const std::string& path) {
    if (path.empty()) return {};
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open scenario file: " + path);
    }
    return parse_scenario_settings(in, path);
}

Scenario build_scenario(const ScenarioSettings& settings, HourlySeries demand,
                        HourlySeries solar_unit) {
    Scenario s;
    s.demand = std::move(demand);
    s.solar_unit = std::move(solar_unit);
    s.tidal = settings.tidal;
    s.lib = settings.lib;
    s.vrfb = settings.vrfb;
    s.solar_spec = settings.solar_spec;
    s.tidal_spec = settings.tidal_spec;
    s.delivered_energy_mwh = settings.delivered_energy_mwh > 0.0 ? settings.delivered_energy_mwh
                                                                 : s.demand.sum() / 1000.0;
    s.backup_rate_per_mwh = settings.backup_rate_per_mwh;
    s.multipliers = settings.multipliers;
    s.warmup = settings.warmup;
    prime_tidal_cache(s);
    return s;
}

}  // namespace microgrid
