#include "microgrid/report.hpp"

#include <fstream>
#include <stdexcept>

namespace microgrid {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    return out;
}

}  // namespace

std::string var_name(Var v) {
    switch (v) {
        case Var::TidalPower: return "tidal_power_kw";
        case Var::SolarPower: return "solar_power_kw";
        case Var::Span: return "span_h";
    }
    return "unknown";
}

void write_traces_csv(const std::string& path, const SimulationResult& r) {
    auto out = open_out(path);
    out << "hour,demand_kw,tidal_gen_kw,solar_gen_kw,deficit_kw,p_lib_kw,p_vrfb_kw,"
           "soc_lib_kwh,soc_vrfb_kwh,curtailment_kw,backup_kw\n";
    for (std::size_t t = 0; t < kHoursPerYear; ++t) {
        out << t << ',' << format_double(r.demand[t]) << ',' << format_double(r.tidal_gen[t])
            << ',' << format_double(r.solar_gen[t]) << ',' << format_double(r.deficit[t]) << ','
            << format_double(r.p_lib[t]) << ',' << format_double(r.p_vrfb[t]) << ','
            << format_double(r.soc_lib[t]) << ',' << format_double(r.soc_vrfb[t]) << ','
            << format_double(r.curtailment[t]) << ',' << format_double(r.backup[t]) << '\n';
    }
}

void write_summary_csv(const std::string& path, const DesignPoint& design,
                       const SimulationResult& r) {
    auto out = open_out(path);
    out << "key,value\n";
    auto row = [&](const std::string& key, double value) {
        out << key << ',' << format_double(value) << '\n';
    };
    row("tidal_power_kw", design.tidal_power_kw);
    row("solar_power_kw", design.solar_power_kw);
    row("span_h", design.span_h);
    auto battery = [&](const std::string& prefix, const BatterySizing& s) {
        row(prefix + "_rated_power_kw", s.rated_power_kw);
        row(prefix + "_capacity_kwh", s.capacity_kwh);
        row(prefix + "_ep_ratio_h", s.ep_ratio_h);
        row(prefix + "_cycles_per_year", s.cycles_per_year);
        row(prefix + "_realized_lifetime_y", s.realized_lifetime_y);
        row(prefix + "_capital_cost", s.capital_cost);
    };
    battery("lib", r.lib_sizing);
    battery("vrfb", r.vrfb_sizing);
    row("lib_energy_capital", r.lib_energy_capital);
    row("lib_power_capital", r.lib_power_capital);
    row("vrfb_energy_capital", r.vrfb_energy_capital);
    row("vrfb_power_capital", r.vrfb_power_capital);
    row("shortfall_mwh", r.shortfall_mwh);
    row("curtailed_surplus_mwh", r.curtailed_surplus_mwh);
    for (const auto& [name, contrib] : r.breakdown.contributions) {
        row("lcoe_" + name, contrib);
    }
    row("lcoe_backup", r.breakdown.backup_penalty);
    row("lcoe_total", r.total_lcoe);
}

void write_grid_csv(const std::string& path, const SliceSpec& slice, const GridResult& grid) {
    auto out = open_out(path);
    out << var_name(slice.x) << ',' << var_name(slice.y) << ",lcoe,above_ceiling\n";
    for (const auto& c : grid.cells) {
        out << format_double(c.x) << ',' << format_double(c.y) << ',' << format_double(c.lcoe)
            << ',' << (c.above_ceiling ? 1 : 0) << '\n';
    }
}

void write_progress_csv(const std::string& path, const PsoResult& result) {
    auto out = open_out(path);
    out << "iteration,best_lcoe\n";
    for (const auto& [iter, lcoe] : result.progress) {
        out << iter << ',' << format_double(lcoe) << '\n';
    }
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
    auto out = open_out(path);
    out << "multiplier,tidal_power_kw,solar_power_kw,span_h,"
           "lib_power_kw,lib_capacity_kwh,lib_lifetime_y,"
           "vrfb_power_kw,vrfb_capacity_kwh,vrfb_lifetime_y,"
           "lcoe_tidal,lcoe_solar,lcoe_lib,lcoe_vrfb,lcoe_backup,lcoe_total\n";
    for (const auto& r : rows) {
        out << format_double(r.multiplier) << ',' << format_double(r.design.tidal_power_kw) << ','
            << format_double(r.design.solar_power_kw) << ',' << format_double(r.design.span_h)
            << ',' << format_double(r.lib_sizing.rated_power_kw) << ','
            << format_double(r.lib_sizing.capacity_kwh) << ','
            << format_double(r.lib_sizing.realized_lifetime_y) << ','
            << format_double(r.vrfb_sizing.rated_power_kw) << ','
            << format_double(r.vrfb_sizing.capacity_kwh) << ','
            << format_double(r.vrfb_sizing.realized_lifetime_y) << ','
            << format_double(r.breakdown.contribution("tidal")) << ','
            << format_double(r.breakdown.contribution("solar")) << ','
            << format_double(r.breakdown.contribution("lib")) << ','
            << format_double(r.breakdown.contribution("vrfb")) << ','
            << format_double(r.breakdown.backup_penalty) << ',' << format_double(r.total_lcoe)
            << '\n';
    }
}

}  // namespace microgrid
