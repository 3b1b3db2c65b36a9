#include <cstdio>
#include <filesystem>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "microgrid/report.hpp"
#include "microgrid/scenario_config.hpp"

namespace fs = std::filesystem;
using namespace microgrid;

namespace {

struct CommonOpts {
    std::string scenario_path;
    std::string out_dir = ".";
    std::string demand_csv;
    std::string solar_csv;
    std::uint64_t seed = 0;
    int threads = 0;  // 0 = hardware concurrency
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--scenario", o.scenario_path, "Scenario config file (default: baseline)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", o.out_dir, "Output directory");
    auto* d = cmd->add_option("--demand-csv", o.demand_csv, "Demand profile CSV (8760 rows)");
    auto* s = cmd->add_option("--solar-csv", o.solar_csv, "Per-1kW solar profile CSV");
    auto* sd = cmd->add_flag("--synth-demand", "Use the synthetic demand profile (default)");
    auto* ss = cmd->add_flag("--synth-solar", "Use the synthetic solar profile (default)");
    d->excludes(sd);
    s->excludes(ss);
    cmd->add_option("--seed", o.seed, "Master RNG seed");
    cmd->add_option("--threads", o.threads, "Parallel objective evaluations (0 = all cores)");
}

Scenario make_scenario(const CommonOpts& o, ScenarioSettings& settings) {
    settings = load_scenario_settings(o.scenario_path);
    HourlySeries demand = o.demand_csv.empty()
                              ? synth_demand(settings.annual_energy_gwh, o.seed)
                              : scale_demand(load_profile_csv(o.demand_csv),
                                             settings.annual_energy_gwh);
    HourlySeries solar = o.solar_csv.empty()
                             ? synth_solar(settings.solar_capacity_factor,
                                           o.seed ^ 0x9e3779b97f4a7c15ull)
                             : load_profile_csv(o.solar_csv);
    return build_scenario(settings, std::move(demand), std::move(solar));
}

int effective_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

std::string out_path(const CommonOpts& o, const std::string& name) {
    fs::create_directories(o.out_dir);
    return (fs::path(o.out_dir) / name).string();
}

void print_summary(const DesignPoint& d, double lcoe) {
    std::printf("lcoe=%.6f $/MWh tidal=%.6f kW solar=%.6f kW span=%.6f h\n", lcoe,
                d.tidal_power_kw, d.solar_power_kw, d.span_h);
}

SliceSpec named_slice(const std::string& name, double fixed_span) {
    if (name == "lib-only") {
        return {Var::TidalPower, Var::SolarPower, {0.0, 0.0, fixed_span},
                DeficitRouting::LibOnly};
    }
    if (name == "vrfb-only") {
        return {Var::TidalPower, Var::SolarPower, {0.0, 0.0, fixed_span},
                DeficitRouting::VrfbOnly};
    }
    if (name == "no-pv") {
        return {Var::TidalPower, Var::Span, {0.0, 0.0, fixed_span}, DeficitRouting::Split};
    }
    if (name == "no-tidal") {
        return {Var::SolarPower, Var::Span, {0.0, 0.0, fixed_span}, DeficitRouting::Split};
    }
    throw CLI::ValidationError("--slice", "unknown slice: " + name);
}

// Local refinement restricted to the slice plane: the pinned variable keeps
// its slice value (possibly outside the search box, e.g. 0 kW).
DesignPoint refine_slice(const SliceSpec& slice, const DesignPoint& start, SearchBounds bounds,
                         const Scenario& sliced) {
    int fi = 3 - static_cast<int>(slice.x) - static_cast<int>(slice.y);
    double pinned = slice.fixed[static_cast<std::size_t>(fi)];
    auto coord = [fi](DesignPoint& d) -> double& {
        return fi == 0 ? d.tidal_power_kw : fi == 1 ? d.solar_power_kw : d.span_h;
    };
    auto f = [&](const std::array<double, 3>& x) {
        DesignPoint d{x[0], x[1], x[2]};
        coord(d) = pinned;
        return objective(d, sliced);
    };
    std::array<double, 3> s{start.tidal_power_kw, start.solar_power_kw, start.span_h};
    bounds.lower[static_cast<std::size_t>(fi)] = 1.0;  // dummy range; coordinate is ignored
    bounds.upper[static_cast<std::size_t>(fi)] = 10.0;
    s[static_cast<std::size_t>(fi)] = 3.0;
    auto best = nelder_mead_log(f, bounds, s);
    DesignPoint out{best[0], best[1], best[2]};
    coord(out) = pinned;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hybrid islanded microgrid sizing and dispatch design tool"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* sim = app.add_subcommand("simulate", "Evaluate one design over a year");
    add_common(sim, opts);
    DesignPoint design{1700.0, 500.0, 15.0};
    sim->add_option("--tidal-kw", design.tidal_power_kw, "Tidal rated power [kW]");
    sim->add_option("--solar-kw", design.solar_power_kw, "Solar rated power [kW]");
    sim->add_option("--span", design.span_h, "Controller filter span [h]");

    auto* grid = app.add_subcommand("grid", "2-D log-grid search over a slice");
    add_common(grid, opts);
    std::string slice_name = "lib-only";
    int n_per_axis = 20;
    double fixed_span = 24.0;
    grid->add_option("--slice", slice_name, "lib-only | vrfb-only | no-pv | no-tidal")
        ->check(CLI::IsMember({"lib-only", "vrfb-only", "no-pv", "no-tidal"}));
    grid->add_option("--n", n_per_axis, "Grid points per axis")->check(CLI::Range(2, 1000));
    grid->add_option("--span-fixed", fixed_span, "Span when not a free variable [h]");

    auto* opt = app.add_subcommand("optimize", "Two-stage PSO + local refinement");
    add_common(opt, opts);
    PsoConfig pso_cfg;
    opt->add_option("--swarm", pso_cfg.swarm_size, "Swarm size");
    opt->add_option("--iters", pso_cfg.max_iterations, "Max PSO iterations");

    auto* sweep = app.add_subcommand("sweep", "Re-optimize across a component cost sweep");
    add_common(sweep, opts);
    std::string component = "vrfb_module";
    int steps = 20;
    SweepSpec sweep_spec;
    PsoConfig sweep_cfg;
    sweep->add_option("--component", component,
                      "lib_energy | vrfb_module | solar_power | tidal_power")
        ->check(CLI::IsMember({"lib_energy", "vrfb_module", "solar_power", "tidal_power"}));
    sweep->add_option("--steps", steps, "Number of multipliers on [0.1, 2.0]")
        ->check(CLI::Range(2, 1000));
    sweep->add_option("--seeds-per-step", sweep_spec.seeds_per_step,
                      "Re-optimizations per step, best kept");
    sweep->add_option("--swarm", sweep_cfg.swarm_size, "Swarm size");
    sweep->add_option("--iters", sweep_cfg.max_iterations, "Max PSO iterations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ScenarioSettings settings;
        Scenario scenario = make_scenario(opts, settings);
        int threads = effective_threads(opts.threads);
        SearchBounds bounds;

        if (sim->parsed()) {
            SimulationResult r = run_year(design, scenario);
            write_traces_csv(out_path(opts, "traces.csv"), r);
            write_summary_csv(out_path(opts, "summary.csv"), design, r);
            print_summary(design, r.total_lcoe);
        } else if (grid->parsed()) {
            SliceSpec slice = named_slice(slice_name, fixed_span);
            GridResult g = grid_search(slice, scenario, bounds, n_per_axis, threads);
            write_grid_csv(out_path(opts, "grid.csv"), slice, g);
            Scenario sliced = scenario;
            sliced.routing = slice.routing;
            DesignPoint refined = refine_slice(slice, g.best, bounds, sliced);
            SimulationResult r = run_year(refined, sliced);
            write_summary_csv(out_path(opts, "summary.csv"), refined, r);
            print_summary(refined, r.total_lcoe);
        } else if (opt->parsed()) {
            pso_cfg.seed = opts.seed;
            pso_cfg.threads = threads;
            TwoStageResult r = two_stage(bounds, scenario, pso_cfg);
            write_progress_csv(out_path(opts, "progress.csv"), r.stage1);
            write_traces_csv(out_path(opts, "traces.csv"), r.simulation);
            write_summary_csv(out_path(opts, "summary.csv"), r.design, r.simulation);
            print_summary(r.design, r.lcoe);
        } else if (sweep->parsed()) {
            sweep_spec.component = cost_component_from_string(component);
            sweep_spec.multipliers = SweepSpec::default_multipliers(steps);
            sweep_spec.master_seed = opts.seed;
            sweep_cfg.threads = threads;
            auto rows = cost_sweep(sweep_spec, scenario, bounds, sweep_cfg);
            write_sweep_csv(out_path(opts, "sweep.csv"), rows);
            const auto& last = rows.back();
            print_summary(last.design, last.total_lcoe);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
