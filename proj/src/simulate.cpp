#include "microgrid/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace microgrid {

namespace {

void validate_design(const DesignPoint& d) {
    if (d.tidal_power_kw < 0.0 || d.solar_power_kw < 0.0) {
        throw std::invalid_argument("rated powers must be nonnegative");
    }
    if (d.span_h < 1.0 || d.span_h > static_cast<double>(kHoursPerYear)) {
        throw std::invalid_argument("controller span must be in [1, 8760] hours");
    }
}

BatterySizing size_lib(const HourlySeries& p, const LibParams& params, double energy_mult,
                       HourlySeries& soc_out) {
    BatterySizing s;
    s.rated_power_kw = size_power(p);
    soc_out = soc_trajectory(p, params.round_trip_eff);
    s.capacity_kwh = size_capacity(soc_out);
    s.ep_ratio_h = s.rated_power_kw > 0.0 ? s.capacity_kwh / s.rated_power_kw : 0.0;
    s.cycles_per_year = lib_cycles_per_year(p, s.capacity_kwh);
    s.realized_lifetime_y =
        realized_lifetime(params.max_lifetime_y, params.cycle_life, s.cycles_per_year);
    LibParams priced = params;
    priced.energy_cost *= energy_mult;
    s.capital_cost = lib_capital_cost(s, priced);
    return s;
}

BatterySizing size_vrfb(const HourlySeries& p, const VrfbParams& params, double module_mult,
                        HourlySeries& soc_out) {
    BatterySizing s;
    s.rated_power_kw = size_power(p);
    soc_out = soc_trajectory(p, params.round_trip_eff);
    s.capacity_kwh = size_capacity(soc_out);
    s.ep_ratio_h = s.rated_power_kw > 0.0 ? s.capacity_kwh / s.rated_power_kw : 0.0;
    s.cycles_per_year = vrfb_cycles_per_year(p);
    s.realized_lifetime_y =
        realized_lifetime(params.max_lifetime_y, params.cycle_life, s.cycles_per_year);
    // The multiplier scales the module term only, not C&C/PCS/BOP.
    VrfbParams priced = params;
    priced.module_cost_a *= module_mult;
    priced.module_cost_c *= module_mult;
    s.capital_cost = vrfb_capital_cost(s, priced);
    return s;
}

}  // namespace

void prime_tidal_cache(Scenario& scenario) {
    scenario.tidal_cache = {scenario.tidal, std::make_shared<const HourlySeries>(
                                                tidal_generation(1.0, scenario.tidal))};
}

SimulationResult run_year(const DesignPoint& design, const Scenario& scenario) {
    validate_design(design);

    SimulationResult r;
    const auto& cache = scenario.tidal_cache;
    if (cache.unit && cache.params == scenario.tidal) {
        std::vector<double> tidal(kHoursPerYear);
        for (std::size_t t = 0; t < kHoursPerYear; ++t) {
            tidal[t] = design.tidal_power_kw * (*cache.unit)[t];
        }
        r.tidal_gen = HourlySeries(std::move(tidal));
    } else {
        r.tidal_gen = tidal_generation(design.tidal_power_kw, scenario.tidal);
    }
    r.solar_gen = scale_solar(scenario.solar_unit, design.solar_power_kw);
    r.demand = scenario.demand;

    std::vector<double> deficit(kHoursPerYear);
    for (std::size_t t = 0; t < kHoursPerYear; ++t) {
        deficit[t] = r.demand[t] - r.tidal_gen[t] - r.solar_gen[t];
    }
    r.deficit = HourlySeries(std::move(deficit));

    switch (scenario.routing) {
        case DeficitRouting::Split: {
            auto split = split_deficit(r.deficit, {design.span_h, scenario.warmup});
            r.p_vrfb = std::move(split.vrfb);
            r.p_lib = std::move(split.lib);
            break;
        }
        case DeficitRouting::LibOnly:
            r.p_lib = r.deficit;
            r.p_vrfb = HourlySeries::zeros();
            break;
        case DeficitRouting::VrfbOnly:
            r.p_vrfb = r.deficit;
            r.p_lib = HourlySeries::zeros();
            break;
    }

    r.lib_sizing = size_lib(r.p_lib, scenario.lib, scenario.multipliers.lib_energy, r.soc_lib);
    r.vrfb_sizing =
        size_vrfb(r.p_vrfb, scenario.vrfb, scenario.multipliers.vrfb_module, r.soc_vrfb);

    r.lib_energy_capital =
        r.lib_sizing.capacity_kwh * scenario.lib.energy_cost * scenario.multipliers.lib_energy;
    r.lib_power_capital = r.lib_sizing.rated_power_kw * scenario.lib.power_cost;
    r.vrfb_power_capital =
        r.vrfb_sizing.rated_power_kw * (scenario.vrfb.pcs_cost + scenario.vrfb.bop_cost);
    r.vrfb_energy_capital = r.vrfb_sizing.capital_cost - r.vrfb_power_capital;

    // Exact-sizing dispatch absorbs all commanded charging, so instantaneous
    // curtailment is structurally zero; the net annual surplus is reported
    // separately as curtailed energy.
    std::vector<double> combined(kHoursPerYear), curtail(kHoursPerYear);
    for (std::size_t t = 0; t < kHoursPerYear; ++t) {
        combined[t] = r.p_lib[t] + r.p_vrfb[t];
        double charging = std::max(0.0, -r.p_lib[t]) + std::max(0.0, -r.p_vrfb[t]);
        curtail[t] = std::max(0.0, -r.deficit[t] - charging);
    }
    HourlySeries combined_series{std::move(combined)};
    r.curtailment = HourlySeries(std::move(curtail));
    r.backup = HourlySeries::zeros();
    r.shortfall_mwh = annual_charge_imbalance(combined_series) / 1000.0;
    r.curtailed_surplus_mwh = std::max(0.0, -combined_series.sum()) / 1000.0;

    std::vector<ComponentCost> components;
    if (design.tidal_power_kw > 0.0) {
        components.push_back({"tidal",
                              design.tidal_power_kw * scenario.tidal_spec.unit_cost *
                                  scenario.multipliers.tidal_power,
                              scenario.tidal_spec.lifetime_y});
    }
    if (design.solar_power_kw > 0.0) {
        components.push_back({"solar",
                              design.solar_power_kw * scenario.solar_spec.unit_cost *
                                  scenario.multipliers.solar_power,
                              scenario.solar_spec.lifetime_y});
    }
    if (r.lib_sizing.capital_cost > 0.0) {
        components.push_back({"lib", r.lib_sizing.capital_cost, r.lib_sizing.realized_lifetime_y});
    }
    if (r.vrfb_sizing.capital_cost > 0.0) {
        components.push_back(
            {"vrfb", r.vrfb_sizing.capital_cost, r.vrfb_sizing.realized_lifetime_y});
    }
    r.breakdown = lcoe(components, scenario.delivered_energy_mwh);
    add_backup(r.breakdown, backup_penalty(r.shortfall_mwh, scenario.backup_rate_per_mwh,
                                           scenario.delivered_energy_mwh));
    r.total_lcoe = r.breakdown.total;
    return r;
}

namespace {

/// Streaming battery statistics replicating size_power / soc_trajectory /
/// size_capacity / cycle counting arithmetic operation-for-operation, so the
/// lean objective below equals run_year's total exactly.
struct BatteryStats {
    double rated = 0.0;
    double discharged = 0.0;
    double w = 0.0;
    double w_min = std::numeric_limits<double>::infinity();
    double w_max = -std::numeric_limits<double>::infinity();
    int last_sign = 0;
    double flips = 0.0;

    void add(double v, double charge_eff) {
        rated = std::max(rated, std::fabs(v));
        w += v < 0.0 ? -v * charge_eff : -v;
        w_min = std::min(w_min, w);
        w_max = std::max(w_max, w);
        discharged += std::max(0.0, v);
        if (v != 0.0) {
            int sign = v > 0.0 ? 1 : -1;
            if (last_sign == -1 && sign == 1) flips += 1.0;
            last_sign = sign;
        }
    }

    double capacity() const { return w_max - w_min; }
};

BatterySizing lean_lib_sizing(const BatteryStats& st, const LibParams& params,
                              double energy_mult) {
    BatterySizing s;
    s.rated_power_kw = st.rated;
    s.capacity_kwh = st.capacity();
    s.ep_ratio_h = s.rated_power_kw > 0.0 ? s.capacity_kwh / s.rated_power_kw : 0.0;
    if (s.capacity_kwh == 0.0) {
        if (st.discharged > 0.0) {
            throw std::invalid_argument("nonzero discharge with zero capacity");
        }
        s.cycles_per_year = 0.0;
    } else {
        s.cycles_per_year = st.discharged / s.capacity_kwh;
    }
    s.realized_lifetime_y =
        realized_lifetime(params.max_lifetime_y, params.cycle_life, s.cycles_per_year);
    LibParams priced = params;
    priced.energy_cost *= energy_mult;
    s.capital_cost = lib_capital_cost(s, priced);
    return s;
}

BatterySizing lean_vrfb_sizing(const BatteryStats& st, const VrfbParams& params,
                               double module_mult) {
    BatterySizing s;
    s.rated_power_kw = st.rated;
    s.capacity_kwh = st.capacity();
    s.ep_ratio_h = s.rated_power_kw > 0.0 ? s.capacity_kwh / s.rated_power_kw : 0.0;
    s.cycles_per_year = st.flips;
    s.realized_lifetime_y =
        realized_lifetime(params.max_lifetime_y, params.cycle_life, s.cycles_per_year);
    VrfbParams priced = params;
    priced.module_cost_a *= module_mult;
    priced.module_cost_c *= module_mult;
    s.capital_cost = vrfb_capital_cost(s, priced);
    return s;
}

}  // namespace

double objective(const DesignPoint& design, const Scenario& scenario) {
    validate_design(design);

    const auto& cache = scenario.tidal_cache;
    const HourlySeries* tidal_unit =
        cache.unit && cache.params == scenario.tidal ? cache.unit.get() : nullptr;

    std::vector<double> deficit(kHoursPerYear);
    for (std::size_t t = 0; t < kHoursPerYear; ++t) {
        double tidal = design.tidal_power_kw *
                       (tidal_unit ? (*tidal_unit)[t]
                                   : tidal_flow(static_cast<double>(t), scenario.tidal));
        if (scenario.solar_unit[t] < 0.0) {
            throw std::invalid_argument("solar unit profile must be nonnegative");
        }
        double solar = scenario.solar_unit[t] * design.solar_power_kw;
        deficit[t] = scenario.demand[t] - tidal - solar;
    }

    BatteryStats lib_st, vrfb_st;
    double combined_sum = 0.0;
    const double lib_eff = scenario.lib.round_trip_eff;
    const double vrfb_eff = scenario.vrfb.round_trip_eff;
    switch (scenario.routing) {
        case DeficitRouting::Split: {
            HourlySeries d{std::move(deficit)};
            auto split = split_deficit(d, {design.span_h, scenario.warmup});
            for (std::size_t t = 0; t < kHoursPerYear; ++t) {
                lib_st.add(split.lib[t], lib_eff);
                vrfb_st.add(split.vrfb[t], vrfb_eff);
                combined_sum += split.lib[t] + split.vrfb[t];
            }
            break;
        }
        case DeficitRouting::LibOnly:
            for (std::size_t t = 0; t < kHoursPerYear; ++t) {
                lib_st.add(deficit[t], lib_eff);
                vrfb_st.add(0.0, vrfb_eff);
                combined_sum += deficit[t] + 0.0;
            }
            break;
        case DeficitRouting::VrfbOnly:
            for (std::size_t t = 0; t < kHoursPerYear; ++t) {
                lib_st.add(0.0, lib_eff);
                vrfb_st.add(deficit[t], vrfb_eff);
                combined_sum += 0.0 + deficit[t];
            }
            break;
    }

    BatterySizing lib_sizing =
        lean_lib_sizing(lib_st, scenario.lib, scenario.multipliers.lib_energy);
    BatterySizing vrfb_sizing =
        lean_vrfb_sizing(vrfb_st, scenario.vrfb, scenario.multipliers.vrfb_module);

    std::vector<ComponentCost> components;
    if (design.tidal_power_kw > 0.0) {
        components.push_back({"tidal",
                              design.tidal_power_kw * scenario.tidal_spec.unit_cost *
                                  scenario.multipliers.tidal_power,
                              scenario.tidal_spec.lifetime_y});
    }
    if (design.solar_power_kw > 0.0) {
        components.push_back({"solar",
                              design.solar_power_kw * scenario.solar_spec.unit_cost *
                                  scenario.multipliers.solar_power,
                              scenario.solar_spec.lifetime_y});
    }
    if (lib_sizing.capital_cost > 0.0) {
        components.push_back({"lib", lib_sizing.capital_cost, lib_sizing.realized_lifetime_y});
    }
    if (vrfb_sizing.capital_cost > 0.0) {
        components.push_back({"vrfb", vrfb_sizing.capital_cost, vrfb_sizing.realized_lifetime_y});
    }
    LcoeBreakdown breakdown = lcoe(components, scenario.delivered_energy_mwh);
    double shortfall_mwh = std::max(0.0, combined_sum) / 1000.0;
    add_backup(breakdown, backup_penalty(shortfall_mwh, scenario.backup_rate_per_mwh,
                                         scenario.delivered_energy_mwh));
    return breakdown.total;
}

Scenario make_synthetic_scenario(std::uint64_t seed, double annual_energy_gwh,
                                 double solar_capacity_factor) {
    Scenario s;
    s.demand = synth_demand(annual_energy_gwh, seed);
    s.solar_unit = synth_solar(solar_capacity_factor, seed ^ 0x9e3779b97f4a7c15ull);
    s.delivered_energy_mwh = s.demand.sum() / 1000.0;
    prime_tidal_cache(s);
    return s;
}

}  // namespace microgrid
