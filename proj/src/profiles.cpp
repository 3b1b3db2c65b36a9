#include "microgrid/profiles.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace microgrid {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double unit_sine(double t, double period_h, double phase_h) {
    return (std::sin(kTwoPi * (t + phase_h) / period_h) + 1.0) / 2.0;
}

}  // namespace

double tidal_flow(double t, const TidalParams& params) {
    if (params.semidiurnal_period_h <= 0.0 || params.fortnightly_period_h <= 0.0) {
        throw std::invalid_argument("tidal periods must be positive");
    }
    return unit_sine(t, params.semidiurnal_period_h, params.semidiurnal_phase_h) *
           unit_sine(t, params.fortnightly_period_h, params.fortnightly_phase_h);
}

HourlySeries tidal_generation(double rated_power_kw, const TidalParams& params) {
    if (rated_power_kw < 0.0) {
        throw std::invalid_argument("tidal rated power must be nonnegative");
    }
    std::vector<double> out(kHoursPerYear);
    for (std::size_t t = 0; t < kHoursPerYear; ++t) {
        out[t] = rated_power_kw * tidal_flow(static_cast<double>(t), params);
    }
    return HourlySeries(std::move(out));
}

HourlySeries scale_demand(const HourlySeries& series, double annual_energy_gwh) {
    if (annual_energy_gwh <= 0.0) {
        throw std::invalid_argument("annual energy must be positive");
    }
    double total = series.sum();
    if (total <= 0.0) {
        throw std::invalid_argument("cannot scale an all-zero demand series");
    }
    double factor = annual_energy_gwh * 1e6 / total;  // GWh -> kWh
    std::vector<double> out(kHoursPerYear);
    for (std::size_t t = 0; t < kHoursPerYear; ++t) out[t] = series[t] * factor;
    return HourlySeries(std::move(out));
}

HourlySeries scale_solar(const HourlySeries& unit_series, double rated_power_kw) {
    if (rated_power_kw < 0.0) {
        throw std::invalid_argument("solar rated power must be nonnegative");
    }
    std::vector<double> out(kHoursPerYear);
    for (std::size_t t = 0; t < kHoursPerYear; ++t) {
        if (unit_series[t] < 0.0) {
            throw std::invalid_argument("solar unit profile must be nonnegative");
        }
        out[t] = unit_series[t] * rated_power_kw;
    }
    return HourlySeries(std::move(out));
}

HourlySeries synth_solar(double target_capacity_factor, std::uint64_t seed) {
    if (target_capacity_factor <= 0.0 || target_capacity_factor >= 0.5) {
        throw std::invalid_argument("target capacity factor must be in (0, 0.5)");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> cloud(0.4, 1.0);
    std::uniform_real_distribution<double> jitter(0.85, 1.0);

    std::vector<double> out(kHoursPerYear, 0.0);
    for (int day = 0; day < 365; ++day) {
        double daylen = 12.0 + 3.5 * std::sin(kTwoPi * (day - 80) / 365.0);
        double sunrise = 12.0 - daylen / 2.0;
        double day_cloud = cloud(rng);
        for (int h = 0; h < 24; ++h) {
            double mid = h + 0.5 - sunrise;
            double v = 0.0;
            if (mid > 0.0 && mid < daylen) {
                v = std::sin(std::numbers::pi * mid / daylen) * day_cloud * jitter(rng);
            }
            out[static_cast<std::size_t>(day) * 24 + h] = v;
        }
    }
    double mean = 0.0;
    for (double v : out) mean += v;
    mean /= static_cast<double>(kHoursPerYear);
    if (target_capacity_factor > mean) {
        throw std::runtime_error("target capacity factor unattainable for the synthetic shape");
    }
    double factor = target_capacity_factor / mean;
    for (double& v : out) v *= factor;
    return HourlySeries(std::move(out));
}

HourlySeries synth_demand(double annual_energy_gwh, std::uint64_t seed) {
    if (annual_energy_gwh <= 0.0) {
        throw std::invalid_argument("annual energy must be positive");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> noise(-1.0, 1.0);

    std::vector<double> out(kHoursPerYear);
    for (std::size_t t = 0; t < kHoursPerYear; ++t) {
        double day = static_cast<double>(t) / 24.0;
        double hour = static_cast<double>(t % 24);
        // Summer-peaking season (cooling-dominated island), afternoon-peaking
        // day, seeded jitter.
        double seasonal = 1.0 + 0.25 * std::cos(kTwoPi * (day - 172.0) / 365.0);
        double daily = 1.0 + 0.25 * std::sin(kTwoPi * (hour - 8.0) / 24.0);
        double jitter = 1.0 + 0.10 * noise(rng);
        out[t] = seasonal * daily * jitter;
    }
    HourlySeries shaped{std::move(out)};
    return scale_demand(shaped, annual_energy_gwh);
}

}  // namespace microgrid
