#include "microgrid/economics.hpp"

#include <stdexcept>

namespace microgrid {

double LcoeBreakdown::contribution(const std::string& name) const {
    for (const auto& [n, v] : contributions) {
        if (n == name) return v;
    }
    return 0.0;
}

LcoeBreakdown lcoe(const std::vector<ComponentCost>& components, double delivered_energy_mwh) {
    if (delivered_energy_mwh <= 0.0) {
        throw std::invalid_argument("delivered energy must be positive");
    }
    LcoeBreakdown out;
    for (const auto& c : components) {
        if (c.realized_lifetime_y <= 0.0) {
            throw std::invalid_argument("component '" + c.name + "' has nonpositive lifetime");
        }
        if (c.capital_cost < 0.0) {
            throw std::invalid_argument("component '" + c.name + "' has negative capital cost");
        }
        double contrib = (c.capital_cost / c.realized_lifetime_y) / delivered_energy_mwh;
        out.contributions.emplace_back(c.name, contrib);
        out.total += contrib;
    }
    return out;
}

double backup_penalty(double shortfall_mwh, double rate_per_mwh, double delivered_energy_mwh) {
    if (shortfall_mwh < 0.0 || rate_per_mwh < 0.0) {
        throw std::invalid_argument("shortfall and backup rate must be nonnegative");
    }
    if (delivered_energy_mwh <= 0.0) {
        throw std::invalid_argument("delivered energy must be positive");
    }
    return shortfall_mwh * rate_per_mwh / delivered_energy_mwh;
}

void add_backup(LcoeBreakdown& breakdown, double penalty_per_mwh) {
    breakdown.backup_penalty = penalty_per_mwh;
    breakdown.total += penalty_per_mwh;
}

}  // namespace microgrid
