#pragma once

#include <string>
#include <vector>

namespace microgrid {

struct ComponentCost {
    std::string name;
    double capital_cost = 0.0;     // $
    double realized_lifetime_y = 1.0;
};

/// Undiscounted LCOE: annualized capital per component over delivered energy.
struct LcoeBreakdown {
    std::vector<std::pair<std::string, double>> contributions;  // $/MWh each
    double backup_penalty = 0.0;                                // $/MWh
    double total = 0.0;                                         // $/MWh

    double contribution(const std::string& name) const;
};

LcoeBreakdown lcoe(const std::vector<ComponentCost>& components, double delivered_energy_mwh);

/// Shortfall energy priced at the backup rate, per MWh delivered.
double backup_penalty(double shortfall_mwh, double rate_per_mwh, double delivered_energy_mwh);

/// Appends the backup term to a breakdown and updates the total.
void add_backup(LcoeBreakdown& breakdown, double penalty_per_mwh);

}  // namespace microgrid
