#pragma once

#include <cstdint>

#include "microgrid/series.hpp"

namespace microgrid {

/// Tidal flow = product of a semidiurnal and a fortnightly (spring/neap) sinusoid,
/// each normalized to [0, 1].
struct TidalParams {
    double semidiurnal_period_h = 12.4;
    double fortnightly_period_h = 360.0;
    double semidiurnal_phase_h = 0.0;
    double fortnightly_phase_h = 0.0;

    bool operator==(const TidalParams&) const = default;
};

struct GeneratorSpec {
    double rated_power_kw = 0.0;
    double unit_cost = 0.0;  // $/kW installed
    double lifetime_y = 1.0;
};

/// Normalized tidal flow at hour t, in [0, 1].
double tidal_flow(double t, const TidalParams& params);

/// rated_power * flow(t); peak flow produces rated power.
HourlySeries tidal_generation(double rated_power_kw, const TidalParams& params);

/// Scales a profile so its annual sum equals annual_energy_gwh (in kWh terms).
HourlySeries scale_demand(const HourlySeries& series, double annual_energy_gwh);

/// Pointwise scaling of a per-1kW generation profile to a rated power.
HourlySeries scale_solar(const HourlySeries& unit_series, double rated_power_kw);

/// Synthetic per-1kW solar profile: seasonal daylight window, seeded cloud noise,
/// annual mean matched to the target capacity factor.
HourlySeries synth_solar(double target_capacity_factor, std::uint64_t seed);

/// Synthetic demand with daily and seasonal structure plus seeded noise,
/// normalized to annual_energy_gwh. Strictly positive.
HourlySeries synth_demand(double annual_energy_gwh, std::uint64_t seed);

}  // namespace microgrid
