#pragma once

#include <memory>

#include "microgrid/controller.hpp"
#include "microgrid/economics.hpp"
#include "microgrid/profiles.hpp"
#include "microgrid/series.hpp"
#include "microgrid/storage.hpp"

namespace microgrid {

/// The three independent design variables.
struct DesignPoint {
    double tidal_power_kw = 0.0;
    double solar_power_kw = 0.0;
    double span_h = 24.0;
};

struct CostMultipliers {
    double lib_energy = 1.0;
    double vrfb_module = 1.0;
    double solar_power = 1.0;
    double tidal_power = 1.0;
};

/// Structural routing of the deficit between the two batteries.
enum class DeficitRouting { Split, LibOnly, VrfbOnly };

/// Everything about the world except the design variables.
struct Scenario {
    HourlySeries demand;
    HourlySeries solar_unit;  // per 1 kW DC
    TidalParams tidal;
    LibParams lib;
    VrfbParams vrfb;
    GeneratorSpec solar_spec{0.0, 1060.0, 30.0};
    GeneratorSpec tidal_spec{0.0, 4300.0, 20.0};
    double delivered_energy_mwh = 4570.0;
    double backup_rate_per_mwh = 10000.0;
    CostMultipliers multipliers;
    DeficitRouting routing = DeficitRouting::Split;
    ControllerParams::Warmup warmup = ControllerParams::Warmup::ZeroPad;

    // Optional precomputed per-1kW tidal profile; used only while it matches
    // `tidal`, so mutating the parameters never yields stale results.
    struct TidalCache {
        TidalParams params;
        std::shared_ptr<const HourlySeries> unit;
    } tidal_cache;
};

/// Precompute the per-1kW tidal profile for repeated evaluations. Scenario
/// builders call this; it is purely a speedup with identical numerics.
void prime_tidal_cache(Scenario& scenario);

struct SimulationResult {
    HourlySeries tidal_gen, solar_gen, demand, deficit;
    HourlySeries p_lib, p_vrfb, soc_lib, soc_vrfb;
    HourlySeries curtailment, backup;

    BatterySizing lib_sizing, vrfb_sizing;

    // Capital split for reporting; the breakdown carries component totals.
    double lib_energy_capital = 0.0, lib_power_capital = 0.0;
    double vrfb_energy_capital = 0.0, vrfb_power_capital = 0.0;

    double shortfall_mwh = 0.0;         // annual net discharge made up by backup
    double curtailed_surplus_mwh = 0.0;  // annual net charge left in the batteries

    LcoeBreakdown breakdown;
    double total_lcoe = 0.0;  // $/MWh
};

/// One-year evaluation: profiles -> deficit -> controller split -> battery
/// sizing, cycling and costs -> LCOE with backup penalty.
SimulationResult run_year(const DesignPoint& design, const Scenario& scenario);

/// Total LCOE of run_year; the optimization objective.
double objective(const DesignPoint& design, const Scenario& scenario);

/// Baseline scenario with synthetic profiles and the default cost set.
Scenario make_synthetic_scenario(std::uint64_t seed,
                                 double annual_energy_gwh = 4.57,
                                 double solar_capacity_factor = 0.159);

}  // namespace microgrid
