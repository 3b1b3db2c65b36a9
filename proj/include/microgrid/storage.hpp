#pragma once

#include "microgrid/series.hpp"

namespace microgrid {

struct LibParams {
    double energy_cost = 285.0;   // $/kWh
    double power_cost = 306.0;    // $/kW
    double max_lifetime_y = 10.0;
    double cycle_life = 3500.0;
    double round_trip_eff = 1.0;
};

/// Module cost per kWh follows a * exp(b / (E/P)) - c; the remaining terms
/// are fixed adders per kWh (construction and commissioning) and per kW
/// (power conversion system, balance of plant).
struct VrfbParams {
    double module_cost_a = 7.004e4;    // $/kWh
    double module_cost_b = 0.004021;   // dimensionless
    double module_cost_c = 6.9837e4;   // $/kWh
    double candc_cost = 650.0;         // $/kWh
    double pcs_cost = 211.0;           // $/kW
    double bop_cost = 95.0;            // $/kW
    double max_lifetime_y = 15.0;
    double cycle_life = 10000.0;
    double round_trip_eff = 1.0;
};

struct BatterySizing {
    double rated_power_kw = 0.0;
    double capacity_kwh = 0.0;
    double ep_ratio_h = 0.0;  // capacity / rated power when power > 0
    double cycles_per_year = 0.0;
    double realized_lifetime_y = 0.0;
    double capital_cost = 0.0;
};

/// Rated power requirement: max |p(t)|. Sign convention: p > 0 is discharge.
double size_power(const HourlySeries& p);

/// Stored energy over the year, shifted so the minimum is exactly zero.
/// charge_eff < 1 applies a loss to charging energy (stored = charged * eff).
HourlySeries soc_trajectory(const HourlySeries& p, double charge_eff = 1.0);

/// Capacity requirement: max of the shifted stored-energy trace.
double size_capacity(const HourlySeries& soc);

/// Net discharge over the year, clamped at zero; energy that backup
/// generation must make up.
double annual_charge_imbalance(const HourlySeries& p);

/// Throughput cycle model: total discharged energy over capacity.
double lib_cycles_per_year(const HourlySeries& p, double capacity_kwh);

/// Mode-switch cycle model: charge-to-discharge sign flips, zeros transparent.
double vrfb_cycles_per_year(const HourlySeries& p);

/// min(calendar life, cycle budget / cycles per year).
double realized_lifetime(double max_lifetime_y, double cycle_life, double cycles_per_year);

double vrfb_module_cost_per_kwh(double ep_ratio_h, const VrfbParams& params);

double lib_capital_cost(const BatterySizing& sizing, const LibParams& params);
double vrfb_capital_cost(const BatterySizing& sizing, const VrfbParams& params);

}  // namespace microgrid
