#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "microgrid/optimize.hpp"

namespace microgrid {

enum class CostComponent { LibEnergy, VrfbModule, SolarPower, TidalPower };

std::string to_string(CostComponent c);
CostComponent cost_component_from_string(const std::string& name);

struct SweepSpec {
    CostComponent component = CostComponent::VrfbModule;
    std::vector<double> multipliers;  // default: 20 linear steps on [0.1, 2.0]
    std::uint64_t master_seed = 0;
    int seeds_per_step = 1;  // re-optimizations per step, best kept

    static std::vector<double> default_multipliers(int steps = 20, double lo = 0.1,
                                                   double hi = 2.0);
};

struct SweepRow {
    double multiplier = 0.0;
    DesignPoint design;
    BatterySizing lib_sizing, vrfb_sizing;
    LcoeBreakdown breakdown;
    double total_lcoe = 0.0;
};

/// Deterministic per-step RNG seed derived from the master seed.
std::uint64_t step_seed(std::uint64_t master_seed, int step, int repeat);

/// Scales only the named component's cost in a copy of the scenario.
Scenario apply_multiplier(const Scenario& base, CostComponent component, double multiplier);

/// One re-optimization per multiplier; rows ordered by multiplier.
std::vector<SweepRow> cost_sweep(const SweepSpec& spec, const Scenario& base,
                                 const SearchBounds& bounds, const PsoConfig& pso_config);

}  // namespace microgrid
