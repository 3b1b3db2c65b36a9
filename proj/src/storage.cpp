#include "microgrid/storage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace microgrid {

double size_power(const HourlySeries& p) {
    return p.max_abs();
}

HourlySeries soc_trajectory(const HourlySeries& p, double charge_eff) {
    if (charge_eff <= 0.0 || charge_eff > 1.0) {
        throw std::invalid_argument("charge efficiency must be in (0, 1]");
    }
    std::vector<double> stored(kHoursPerYear);
    double w = 0.0;
    double w_min = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < kHoursPerYear; ++t) {
        // p > 0 discharges; charging energy is derated by the efficiency.
        w += p[t] < 0.0 ? -p[t] * charge_eff : -p[t];
        stored[t] = w;
        w_min = std::min(w_min, w);
    }
    for (double& v : stored) v -= w_min;
    return HourlySeries(std::move(stored));
}

double size_capacity(const HourlySeries& soc) {
    return soc.max();
}

double annual_charge_imbalance(const HourlySeries& p) {
    return std::max(0.0, p.sum());
}

double lib_cycles_per_year(const HourlySeries& p, double capacity_kwh) {
    if (capacity_kwh < 0.0) {
        throw std::invalid_argument("capacity must be nonnegative");
    }
    double discharged = 0.0;
    for (double v : p) discharged += std::max(0.0, v);
    if (capacity_kwh == 0.0) {
        if (discharged > 0.0) {
            throw std::invalid_argument("nonzero discharge with zero capacity");
        }
        return 0.0;
    }
    return discharged / capacity_kwh;
}

double vrfb_cycles_per_year(const HourlySeries& p) {
    double cycles = 0.0;
    int last_sign = 0;  // 0 until the first nonzero hour; idle hours keep the mode
    for (double v : p) {
        if (v == 0.0) continue;
        int sign = v > 0.0 ? 1 : -1;
        if (last_sign == -1 && sign == 1) cycles += 1.0;
        last_sign = sign;
    }
    return cycles;
}

double realized_lifetime(double max_lifetime_y, double cycle_life, double cycles_per_year) {
    if (max_lifetime_y <= 0.0 || cycle_life <= 0.0 || cycles_per_year < 0.0) {
        throw std::invalid_argument("invalid lifetime parameters");
    }
    if (cycles_per_year == 0.0) return max_lifetime_y;
    return std::min(max_lifetime_y, cycle_life / cycles_per_year);
}

double vrfb_module_cost_per_kwh(double ep_ratio_h, const VrfbParams& params) {
    if (ep_ratio_h <= 0.0) {
        throw std::invalid_argument("E/P ratio must be positive");
    }
    return params.module_cost_a * std::exp(params.module_cost_b / ep_ratio_h) -
           params.module_cost_c;
}

double lib_capital_cost(const BatterySizing& sizing, const LibParams& params) {
    return sizing.capacity_kwh * params.energy_cost + sizing.rated_power_kw * params.power_cost;
}

double vrfb_capital_cost(const BatterySizing& sizing, const VrfbParams& params) {
    if (sizing.capacity_kwh == 0.0 && sizing.rated_power_kw == 0.0) return 0.0;
    double per_kwh = params.candc_cost;
    if (sizing.capacity_kwh > 0.0) {
        per_kwh += vrfb_module_cost_per_kwh(sizing.ep_ratio_h, params);
    }
    return sizing.capacity_kwh * per_kwh +
           sizing.rated_power_kw * (params.pcs_cost + params.bop_cost);
}

}  // namespace microgrid
