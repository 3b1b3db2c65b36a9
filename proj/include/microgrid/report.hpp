#pragma once

#include <string>
#include <vector>

#include "microgrid/optimize.hpp"
#include "microgrid/sensitivity.hpp"
#include "microgrid/simulate.hpp"

namespace microgrid {

std::string var_name(Var v);

/// traces.csv: 8760 rows, one column per hourly trace.
void write_traces_csv(const std::string& path, const SimulationResult& result);

/// summary.csv: key,value rows with sizings, costs, lifetimes and the LCOE
/// breakdown.
void write_summary_csv(const std::string& path, const DesignPoint& design,
                       const SimulationResult& result);

/// grid.csv: long format (var1, var2, lcoe, above_ceiling) for contours.
void write_grid_csv(const std::string& path, const SliceSpec& slice, const GridResult& grid);

/// progress.csv: (iteration, best_lcoe) log of an optimizer run.
void write_progress_csv(const std::string& path, const PsoResult& result);

/// sweep.csv: one row per multiplier with design, sizings and breakdown.
void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);

}  // namespace microgrid
