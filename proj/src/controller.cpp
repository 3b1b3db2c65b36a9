#include "microgrid/controller.hpp"

#include <cmath>
#include <stdexcept>

namespace microgrid {

DeficitSplit split_deficit(const HourlySeries& deficit, const ControllerParams& params) {
    const double span = params.span_h;
    if (span < 1.0 || span > static_cast<double>(kHoursPerYear)) {
        throw std::invalid_argument("controller span must be in [1, 8760] hours");
    }

    const std::size_t full = static_cast<std::size_t>(std::floor(span));
    const double frac = span - static_cast<double>(full);
    const std::size_t oldest = full + (frac > 0.0 ? 1 : 0);  // ceil(span)

    auto at = [&](std::ptrdiff_t t) -> double {
        return t >= 0 ? deficit[static_cast<std::size_t>(t)] : 0.0;
    };

    std::vector<double> vrfb(kHoursPerYear), lib(kHoursPerYear);
    double window_sum = 0.0;  // sum of deficit(t-1 .. t-full), pre-year samples zero
    for (std::size_t t = 0; t < kHoursPerYear; ++t) {
        const std::ptrdiff_t st = static_cast<std::ptrdiff_t>(t);
        double numer = window_sum + frac * at(st - static_cast<std::ptrdiff_t>(oldest));
        double denom = span;
        if (params.warmup == ControllerParams::Warmup::Truncate) {
            denom = std::min(span, static_cast<double>(t));
        }
        vrfb[t] = denom > 0.0 ? numer / denom : 0.0;
        lib[t] = deficit[t] - vrfb[t];
        window_sum += deficit[t] - at(st - static_cast<std::ptrdiff_t>(full));
    }
    return {HourlySeries(std::move(vrfb)), HourlySeries(std::move(lib))};
}

}  // namespace microgrid
