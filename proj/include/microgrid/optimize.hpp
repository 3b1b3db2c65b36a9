#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "microgrid/simulate.hpp"

namespace microgrid {

/// Design variable order used by every search: tidal power, solar power, span.
enum class Var { TidalPower = 0, SolarPower = 1, Span = 2 };

/// All searches operate in log10 space of these bounds.
struct SearchBounds {
    std::array<double, 3> lower{0.1, 0.1, 1.0};
    std::array<double, 3> upper{1e6, 1e6, 8760.0};
};

/// A 2-D slice of the 3-D design space: two free variables, the rest fixed,
/// with an optional structural routing toggle (e.g. all deficit to one battery).
struct SliceSpec {
    Var x = Var::TidalPower;
    Var y = Var::SolarPower;
    std::array<double, 3> fixed{0.0, 0.0, 24.0};  // used for non-free variables
    DeficitRouting routing = DeficitRouting::Split;
};

struct GridCell {
    double x = 0.0, y = 0.0;  // natural units
    double lcoe = 0.0;
    bool above_ceiling = false;  // blanked in contour plots
};

struct GridResult {
    std::vector<GridCell> cells;  // row-major, x fastest
    DesignPoint best;
    double best_lcoe = 0.0;
};

struct PsoConfig {
    int swarm_size = 200;
    int max_iterations = 200;
    double inertia = 0.729;
    double cognitive = 1.49445;
    double social = 1.49445;
    std::uint64_t seed = 0;
    double stall_tolerance = 1e-6;  // relative improvement over stall_iterations
    int stall_iterations = 20;
    int threads = 1;
};

struct PsoResult {
    DesignPoint best;
    double best_lcoe = 0.0;
    std::vector<std::pair<int, double>> progress;  // (iteration, best lcoe)
    int evaluations = 0;
};

struct TwoStageResult {
    DesignPoint design;
    double lcoe = 0.0;
    SimulationResult simulation;
    PsoResult stage1;
};

/// Objective over the three design variables in natural units.
using Objective3 = std::function<double(const std::array<double, 3>&)>;

/// Nelder-Mead descent on the log10-transformed box. Returns the best point
/// found, never worse than the start.
std::array<double, 3> nelder_mead_log(const Objective3& f, const SearchBounds& bounds,
                                      const std::array<double, 3>& start,
                                      double initial_step_frac = 0.05);

/// Generic PSO core over the log10-transformed box.
PsoResult pso_minimize(const Objective3& f, const SearchBounds& bounds, const PsoConfig& config);

/// Exhaustive log-spaced grid over a 2-D slice. LCOE above display_ceiling
/// is flagged for contour blanking.
GridResult grid_search(const SliceSpec& slice, const Scenario& scenario,
                       const SearchBounds& bounds, int n_per_axis, int threads = 1,
                       double display_ceiling = 100000.0);

/// Derivative-free constrained local descent in log10 space. Never returns a
/// point worse than the start.
DesignPoint local_refine(const DesignPoint& start, const SearchBounds& bounds,
                         const Scenario& scenario);

/// Global-best particle swarm in log10 space with reflecting bounds.
/// Deterministic for a fixed seed, regardless of thread count.
PsoResult pso(const SearchBounds& bounds, const Scenario& scenario, const PsoConfig& config);

/// PSO followed by local refinement and a snap-to-zero pass for power
/// variables stuck at the lower bound.
TwoStageResult two_stage(const SearchBounds& bounds, const Scenario& scenario,
                         const PsoConfig& config);

}  // namespace microgrid
