#include "microgrid/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace microgrid {

namespace {

using Vec3 = std::array<double, 3>;

DesignPoint to_design(const Vec3& x) {
    return {x[0], x[1], x[2]};
}

Vec3 from_design(const DesignPoint& d) {
    return {d.tidal_power_kw, d.solar_power_kw, d.span_h};
}

Vec3 log_of(const Vec3& x) {
    return {std::log10(x[0]), std::log10(x[1]), std::log10(x[2])};
}

Vec3 exp_of(const Vec3& z) {
    return {std::pow(10.0, z[0]), std::pow(10.0, z[1]), std::pow(10.0, z[2])};
}

void check_bounds(const SearchBounds& b) {
    for (int i = 0; i < 3; ++i) {
        if (!(b.lower[i] > 0.0 && b.lower[i] < b.upper[i])) {
            throw std::invalid_argument("bounds must satisfy 0 < lower < upper");
        }
    }
}

/// Runs fn(i) for i in [0, n); results must be written to per-index slots so
/// the outcome is independent of scheduling.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    pool.reserve(count);
    for (std::size_t i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace

std::array<double, 3> nelder_mead_log(const Objective3& f, const SearchBounds& bounds,
                                      const std::array<double, 3>& start,
                                      double initial_step_frac) {
    if (!(initial_step_frac > 0.0 && initial_step_frac < 1.0)) {
        throw std::invalid_argument("initial step fraction must be in (0, 1)");
    }
    check_bounds(bounds);
    for (int i = 0; i < 3; ++i) {
        if (start[i] < bounds.lower[i] || start[i] > bounds.upper[i]) {
            throw std::invalid_argument("start point must lie within bounds");
        }
    }

    Vec3 zlo = log_of(bounds.lower), zhi = log_of(bounds.upper);
    auto clip = [&](Vec3 z) {
        for (int i = 0; i < 3; ++i) z[i] = std::clamp(z[i], zlo[i], zhi[i]);
        return z;
    };
    auto fz = [&](const Vec3& z) { return f(exp_of(z)); };

    constexpr int dim = 3;
    struct Vertex {
        Vec3 z;
        double fv;
    };
    std::array<Vertex, dim + 1> simplex;
    Vec3 z0 = clip(log_of(start));
    simplex[0] = {z0, fz(z0)};
    for (int i = 0; i < dim; ++i) {
        Vec3 z = z0;
        double step = initial_step_frac * (zhi[i] - zlo[i]);
        z[i] = z[i] + step <= zhi[i] ? z[i] + step : z[i] - step;
        z = clip(z);
        simplex[i + 1] = {z, fz(z)};
    }

    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
    auto by_value = [](const Vertex& a, const Vertex& b) { return a.fv < b.fv; };
    for (int iter = 0; iter < 600; ++iter) {
        std::sort(simplex.begin(), simplex.end(), by_value);
        double spread = simplex[dim].fv - simplex[0].fv;
        double size = 0.0;
        for (int i = 1; i <= dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                size = std::max(size, std::fabs(simplex[i].z[j] - simplex[0].z[j]));
            }
        }
        if (spread <= 1e-14 * (1.0 + std::fabs(simplex[0].fv)) && size <= 1e-10) break;

        Vec3 centroid{0, 0, 0};
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) centroid[j] += simplex[i].z[j] / dim;
        }
        auto along = [&](double coeff) {
            Vec3 z;
            for (int j = 0; j < dim; ++j) {
                z[j] = centroid[j] + coeff * (centroid[j] - simplex[dim].z[j]);
            }
            return clip(z);
        };

        Vec3 zr = along(alpha);
        double fr = fz(zr);
        if (fr < simplex[0].fv) {
            Vec3 ze = along(gamma);
            double fe = fz(ze);
            simplex[dim] = fe < fr ? Vertex{ze, fe} : Vertex{zr, fr};
        } else if (fr < simplex[dim - 1].fv) {
            simplex[dim] = {zr, fr};
        } else {
            Vec3 zc = along(-rho);
            double fc = fz(zc);
            if (fc < simplex[dim].fv) {
                simplex[dim] = {zc, fc};
            } else {
                for (int i = 1; i <= dim; ++i) {
                    Vec3 z;
                    for (int j = 0; j < dim; ++j) {
                        z[j] = simplex[0].z[j] + sigma * (simplex[i].z[j] - simplex[0].z[j]);
                    }
                    z = clip(z);
                    simplex[i] = {z, fz(z)};
                }
            }
        }
    }
    std::sort(simplex.begin(), simplex.end(), by_value);

    if (simplex[0].fv <= f(start)) return exp_of(simplex[0].z);
    return start;
}

PsoResult pso_minimize(const Objective3& f, const SearchBounds& bounds, const PsoConfig& config) {
    check_bounds(bounds);
    if (config.swarm_size < 2) {
        throw std::invalid_argument("swarm size must be at least 2");
    }
    if (config.inertia <= 0.0 || config.cognitive <= 0.0 || config.social <= 0.0) {
        throw std::invalid_argument("PSO coefficients must be positive");
    }

    const std::size_t n = static_cast<std::size_t>(config.swarm_size);
    Vec3 zlo = log_of(bounds.lower), zhi = log_of(bounds.upper);

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<Vec3> pos(n), vel(n), pbest(n);
    std::vector<double> fit(n), pbest_fit(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (int j = 0; j < 3; ++j) {
            double range = zhi[j] - zlo[j];
            pos[i][j] = zlo[j] + range * unit(rng);
            // Random initial velocities keep early diversity; a swarm started
            // at rest collapses onto the first global best.
            vel[i][j] = (2.0 * unit(rng) - 1.0) * 0.25 * range;
        }
        pbest[i] = pos[i];
    }

    PsoResult result;
    auto evaluate_all = [&] {
        parallel_for(n, config.threads,
                     [&](std::size_t i) { fit[i] = f(exp_of(pos[i])); });
        result.evaluations += static_cast<int>(n);
    };

    evaluate_all();
    std::size_t g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        pbest_fit[i] = fit[i];
        if (fit[i] < fit[g]) g = i;
    }
    Vec3 gbest = pos[g];
    double gbest_fit = fit[g];
    result.progress.emplace_back(0, gbest_fit);

    double stall_ref = gbest_fit;
    int stall = 0;
    for (int iter = 1; iter <= config.max_iterations; ++iter) {
        // Random draws happen on one thread so results never depend on the
        // thread count.
        for (std::size_t i = 0; i < n; ++i) {
            for (int j = 0; j < 3; ++j) {
                double r1 = unit(rng), r2 = unit(rng);
                vel[i][j] = config.inertia * vel[i][j] +
                            config.cognitive * r1 * (pbest[i][j] - pos[i][j]) +
                            config.social * r2 * (gbest[j] - pos[i][j]);
                double vmax = 0.2 * (zhi[j] - zlo[j]);
                vel[i][j] = std::clamp(vel[i][j], -vmax, vmax);
                pos[i][j] += vel[i][j];
                // Reflect at the bounds; reverse the velocity component.
                while (pos[i][j] < zlo[j] || pos[i][j] > zhi[j]) {
                    if (pos[i][j] < zlo[j]) pos[i][j] = 2.0 * zlo[j] - pos[i][j];
                    if (pos[i][j] > zhi[j]) pos[i][j] = 2.0 * zhi[j] - pos[i][j];
                    vel[i][j] = -vel[i][j];
                }
            }
        }
        evaluate_all();
        for (std::size_t i = 0; i < n; ++i) {
            if (fit[i] < pbest_fit[i]) {
                pbest_fit[i] = fit[i];
                pbest[i] = pos[i];
            }
            if (fit[i] < gbest_fit) {
                gbest_fit = fit[i];
                gbest = pos[i];
            }
        }
        result.progress.emplace_back(iter, gbest_fit);

        if (stall_ref - gbest_fit <= config.stall_tolerance * std::max(1.0, std::fabs(stall_ref))) {
            if (++stall >= config.stall_iterations) break;
        } else {
            stall = 0;
            stall_ref = gbest_fit;
        }
    }

    result.best = to_design(exp_of(gbest));
    result.best_lcoe = gbest_fit;
    return result;
}

GridResult grid_search(const SliceSpec& slice, const Scenario& scenario,
                       const SearchBounds& bounds, int n_per_axis, int threads,
                       double display_ceiling) {
    check_bounds(bounds);
    if (n_per_axis < 2) {
        throw std::invalid_argument("grid needs at least 2 points per axis");
    }
    const int ix = static_cast<int>(slice.x);
    const int iy = static_cast<int>(slice.y);
    if (ix == iy) {
        throw std::invalid_argument("slice free variables must be distinct");
    }

    Scenario sliced = scenario;
    sliced.routing = slice.routing;

    auto axis = [&](int var) {
        std::vector<double> pts(static_cast<std::size_t>(n_per_axis));
        double lo = std::log10(bounds.lower[var]);
        double hi = std::log10(bounds.upper[var]);
        for (int i = 0; i < n_per_axis; ++i) {
            pts[i] = std::clamp(std::pow(10.0, lo + (hi - lo) * i / (n_per_axis - 1)),
                                bounds.lower[var], bounds.upper[var]);
        }
        return pts;
    };
    std::vector<double> xs = axis(ix), ys = axis(iy);

    GridResult result;
    const std::size_t n = xs.size() * ys.size();
    result.cells.resize(n);
    parallel_for(n, threads, [&](std::size_t k) {
        Vec3 v = slice.fixed;
        v[ix] = xs[k % xs.size()];
        v[iy] = ys[k / xs.size()];
        double lcoe = objective(to_design(v), sliced);
        result.cells[k] = {v[ix], v[iy], lcoe, lcoe > display_ceiling};
    });

    std::size_t best_k = 0;
    for (std::size_t k = 1; k < n; ++k) {
        if (result.cells[k].lcoe < result.cells[best_k].lcoe) best_k = k;
    }
    Vec3 v = slice.fixed;
    v[ix] = result.cells[best_k].x;
    v[iy] = result.cells[best_k].y;
    result.best = to_design(v);
    result.best_lcoe = result.cells[best_k].lcoe;
    return result;
}

DesignPoint local_refine(const DesignPoint& start, const SearchBounds& bounds,
                         const Scenario& scenario) {
    auto f = [&](const Vec3& x) { return objective(to_design(x), scenario); };
    // Multi-scale restarts: each pass rebuilds the simplex around the current
    // best with a smaller initial step, polishing past single-run stalls.
    Vec3 best = from_design(start);
    double fbest = f(best);
    for (double step : {0.05, 0.01, 0.002, 0.0004}) {
        Vec3 cand = nelder_mead_log(f, bounds, best, step);
        double fc = f(cand);
        if (fc < fbest) {
            best = cand;
            fbest = fc;
        }
    }
    return to_design(best);
}

PsoResult pso(const SearchBounds& bounds, const Scenario& scenario, const PsoConfig& config) {
    auto f = [&](const Vec3& x) { return objective(to_design(x), scenario); };
    return pso_minimize(f, bounds, config);
}

TwoStageResult two_stage(const SearchBounds& bounds, const Scenario& scenario,
                         const PsoConfig& config) {
    PsoResult stage1 = pso(bounds, scenario, config);
    auto f = [&](const Vec3& x) { return objective(to_design(x), scenario); };

    // The span axis carries local basins spaced by the profiles' periods
    // (dispatch-filter resonances), so pure descent is unreliable there. Each
    // round descends, then line-searches the span at the refined powers and
    // re-descends if a better basin shows up.
    Vec3 w = from_design(stage1.best);
    double best = f(w);
    const double zlo2 = std::log10(bounds.lower[2]);
    const double zhi2 = std::log10(bounds.upper[2]);
    for (int round = 0; round < 2; ++round) {
        Vec3 cand = nelder_mead_log(f, bounds, w);
        double fc = f(cand);
        if (fc < best) {
            w = cand;
            best = fc;
        }

        // Profile the span at the current powers and descend (all three
        // variables free) from each local minimum of the profile.
        const int n_spans = 64;
        std::vector<double> spans(n_spans + 1), fs(n_spans + 1);
        Vec3 probe = w;
        for (int k = 0; k <= n_spans; ++k) {
            spans[k] = std::clamp(std::pow(10.0, zlo2 + (zhi2 - zlo2) * k / n_spans),
                                  bounds.lower[2], bounds.upper[2]);
            probe[2] = spans[k];
            fs[k] = f(probe);
        }
        std::vector<int> minima;
        for (int k = 0; k <= n_spans; ++k) {
            bool left_ok = k == 0 || fs[k] <= fs[k - 1];
            bool right_ok = k == n_spans || fs[k] <= fs[k + 1];
            if (left_ok && right_ok) minima.push_back(k);
        }
        std::sort(minima.begin(), minima.end(), [&](int a, int b) { return fs[a] < fs[b]; });
        if (minima.size() > 3) minima.resize(3);

        bool improved = false;
        for (int k : minima) {
            Vec3 start = w;
            start[2] = spans[k];
            Vec3 c2 = nelder_mead_log(f, bounds, start);
            double fc2 = f(c2);
            if (fc2 < best) {
                w = c2;
                best = fc2;
                improved = true;
            }
        }
        if (!improved) break;
    }
    DesignPoint refined = local_refine(to_design(w), bounds, scenario);
    double f_refined = objective(refined, scenario);
    if (f_refined < best) {
        best = f_refined;
    } else {
        refined = to_design(w);
    }

    // Log-space searches cannot reach zero; a power variable resting on the
    // lower bound means "omit this generator" when doing so costs nothing.
    Vec3 v = from_design(refined);
    for (int j = 0; j < 2; ++j) {
        if (v[j] > 0.0 && v[j] <= bounds.lower[j] * (1.0 + 1e-9)) {
            Vec3 snapped = v;
            snapped[j] = 0.0;
            double f_snapped = objective(to_design(snapped), scenario);
            if (f_snapped <= best * (1.0 + 1e-9)) {
                v = snapped;
                best = std::min(best, f_snapped);
            }
        }
    }

    TwoStageResult out;
    out.design = to_design(v);
    out.simulation = run_year(out.design, scenario);
    out.lcoe = out.simulation.total_lcoe;
    out.stage1 = std::move(stage1);
    return out;
}

}  // namespace microgrid
