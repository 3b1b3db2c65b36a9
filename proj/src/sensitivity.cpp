#include "microgrid/sensitivity.hpp"

#include <stdexcept>

namespace microgrid {

std::string to_string(CostComponent c) {
    switch (c) {
        case CostComponent::LibEnergy: return "lib_energy";
        case CostComponent::VrfbModule: return "vrfb_module";
        case CostComponent::SolarPower: return "solar_power";
        case CostComponent::TidalPower: return "tidal_power";
    }
    return "unknown";
}

CostComponent cost_component_from_string(const std::string& name) {
    if (name == "lib_energy") return CostComponent::LibEnergy;
    if (name == "vrfb_module") return CostComponent::VrfbModule;
    if (name == "solar_power") return CostComponent::SolarPower;
    if (name == "tidal_power") return CostComponent::TidalPower;
    throw std::invalid_argument("unknown cost component: " + name);
}

std::vector<double> SweepSpec::default_multipliers(int steps, double lo, double hi) {
    std::vector<double> out(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        // Symmetric interpolation keeps interior round values (e.g. 1.0) exact.
        out[i] = (lo * (steps - 1 - i) + hi * i) / (steps - 1);
    }
    return out;
}

std::uint64_t step_seed(std::uint64_t master_seed, int step, int repeat) {
    // splitmix64 over (master, step, repeat)
    std::uint64_t z = master_seed + 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(step) * 131 +
                                                             static_cast<std::uint64_t>(repeat) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Scenario apply_multiplier(const Scenario& base, CostComponent component, double multiplier) {
    if (multiplier <= 0.0) {
        throw std::invalid_argument("cost multiplier must be positive");
    }
    Scenario s = base;
    switch (component) {
        case CostComponent::LibEnergy: s.multipliers.lib_energy = multiplier; break;
        case CostComponent::VrfbModule: s.multipliers.vrfb_module = multiplier; break;
        case CostComponent::SolarPower: s.multipliers.solar_power = multiplier; break;
        case CostComponent::TidalPower: s.multipliers.tidal_power = multiplier; break;
    }
    return s;
}

std::vector<SweepRow> cost_sweep(const SweepSpec& spec, const Scenario& base,
                                 const SearchBounds& bounds, const PsoConfig& pso_config) {
    std::vector<double> multipliers =
        spec.multipliers.empty() ? SweepSpec::default_multipliers() : spec.multipliers;
    for (std::size_t i = 0; i + 1 < multipliers.size(); ++i) {
        if (multipliers[i] <= 0.0 || multipliers[i] >= multipliers[i + 1]) {
            throw std::invalid_argument("multipliers must be positive and strictly increasing");
        }
    }

    std::vector<SweepRow> rows;
    rows.reserve(multipliers.size());
    for (std::size_t step = 0; step < multipliers.size(); ++step) {
        Scenario scenario = apply_multiplier(base, spec.component, multipliers[step]);
        TwoStageResult best;
        for (int rep = 0; rep < std::max(1, spec.seeds_per_step); ++rep) {
            PsoConfig cfg = pso_config;
            cfg.seed = step_seed(spec.master_seed, static_cast<int>(step), rep);
            TwoStageResult r = two_stage(bounds, scenario, cfg);
            if (rep == 0 || r.lcoe < best.lcoe) best = std::move(r);
        }
        SweepRow row;
        row.multiplier = multipliers[step];
        row.design = best.design;
        row.lib_sizing = best.simulation.lib_sizing;
        row.vrfb_sizing = best.simulation.vrfb_sizing;
        row.breakdown = best.simulation.breakdown;
        row.total_lcoe = best.lcoe;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace microgrid
