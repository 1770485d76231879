#pragma once

#include <cmath>
#include <vector>

#include "diagnostics.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace yudo {

/// Positions of |labels| particles under M independent noise realizations,
/// stored realization-major. The Brownian forcing is spatially uniform: one
/// noise increment per step per realization, shared by every label, so the
/// separation of two labels inside one realization carries no noise at all.
struct ParticleEnsemble {
    std::vector<Vec2> labels;
    int realizations = 0;
    std::uint64_t seed = 0;
    std::vector<Vec2> positions;  // realizations x labels

    Vec2& pos(int m, size_t l) { return positions[static_cast<size_t>(m) * labels.size() + l]; }
    const Vec2& pos(int m, size_t l) const {
        return positions[static_cast<size_t>(m) * labels.size() + l];
    }
};

namespace detail {

enum class FlowDirection { Forward, Backward };

/// Euler-Maruyama particle stepping through an archived velocity.
/// Forward integrates dX = u(X, s) ds + sqrt(2 nu) dW from s = 0 to t.
/// Backward integrates dY = -u(Y, t - s) ds + sqrt(2 nu) dW_hat, which ends
/// at the back-to-labels point A_t(x) when started from Y = x.
inline ParticleEnsemble integrate_particles(const std::vector<Vec2>& start,
                                            const VelocityArchive& archive, double nu, int M,
                                            double dt, double t, std::uint64_t seed,
                                            FlowDirection dir) {
    if (M < 1) throw std::invalid_argument("particle ensemble: M must be >= 1");
    if (dt <= 0.0) throw std::invalid_argument("particle ensemble: dt must be positive");
    if (nu < 0.0) throw std::invalid_argument("particle ensemble: nu must be >= 0");
    archive.require_coverage(0.0, t, "particle ensemble");
    const long steps = std::max<long>(1, std::llround(t / dt));
    const double h = t / static_cast<double>(steps);
    const double amp = std::sqrt(2.0 * nu * h);
    const double L = archive.grid().length;

    ParticleEnsemble ens;
    ens.labels = start;
    ens.realizations = M;
    ens.seed = seed;
    ens.positions.resize(static_cast<size_t>(M) * start.size());

    parallel_for(0, M, [&](long m) {
        Rng rng(substream(seed, static_cast<std::uint64_t>(m)));
        std::vector<Vec2> p = start;
        for (long s = 0; s < steps; ++s) {
            const double ts = h * static_cast<double>(s);
            const double tq = dir == FlowDirection::Forward ? ts : t - ts;
            double z1, z2;
            rng.gauss_pair(z1, z2);
            for (auto& q : p) {
                const Vec2 u = archive.velocity(tq, q);
                const double sgn = dir == FlowDirection::Forward ? 1.0 : -1.0;
                q.x = wrap_coord(q.x + sgn * h * u.x + amp * z1, L);
                q.y = wrap_coord(q.y + sgn * h * u.y + amp * z2, L);
            }
        }
        for (size_t l = 0; l < p.size(); ++l) ens.pos(static_cast<int>(m), l) = p[l];
    });
    return ens;
}

}  // namespace detail

/// Forward stochastic flow started at the labels.
inline ParticleEnsemble advect(const std::vector<Vec2>& labels, const VelocityArchive& archive,
                               double nu, int M, double dt, double t, std::uint64_t seed) {
    return detail::integrate_particles(labels, archive, nu, M, dt, t, seed,
                                       detail::FlowDirection::Forward);
}

/// Back-to-labels endpoints A_t(x) for each query point x.
inline ParticleEnsemble back_to_labels(const std::vector<Vec2>& points,
                                       const VelocityArchive& archive, double nu, int M, double dt,
                                       double t, std::uint64_t seed) {
    return detail::integrate_particles(points, archive, nu, M, dt, t, seed,
                                       detail::FlowDirection::Backward);
}

struct McStats {
    std::vector<double> mean;
    std::vector<double> variance;  // unbiased over realizations
    std::vector<double> se;        // standard error of the mean
};

/// Monte-Carlo viscous vorticity: averages omega0 over the back-to-labels
/// ensemble, point by point. Requires an unforced archive (the plain average
/// represents the solution only without body forces).
inline McStats mc_vorticity(const ScalarField& omega0, const VelocityArchive& archive, double nu,
                            int M, double dt, double t, std::uint64_t seed,
                            const std::vector<Vec2>& eval_points) {
    if (archive.forced())
        throw std::invalid_argument("mc_vorticity: archive comes from a forced run");
    if (M < 2) throw std::invalid_argument("mc_vorticity: need M >= 2 for variance");
    const ParticleEnsemble ens = back_to_labels(eval_points, archive, nu, M, dt, t, seed);
    McStats st;
    const size_t L = eval_points.size();
    st.mean.assign(L, 0.0);
    st.variance.assign(L, 0.0);
    st.se.assign(L, 0.0);
    std::vector<double> samples(static_cast<size_t>(M));
    for (size_t l = 0; l < L; ++l) {
        for (int m = 0; m < M; ++m) {
            const Vec2& q = ens.pos(m, l);
            samples[static_cast<size_t>(m)] = bicubic(omega0, q.x, q.y);
        }
        double s = 0.0;
        for (double v : samples) s += v;
        const double mean = s / M;
        double ss = 0.0;
        for (double v : samples) ss += (v - mean) * (v - mean);
        st.mean[l] = mean;
        st.variance[l] = ss / (M - 1);
        st.se[l] = std::sqrt(st.variance[l] / M);
    }
    return st;
}

struct SeparationExponent {
    double time = 0.0;
    double exponent = 0.0;   // fitted slope of log E[d] against log delta0
    double r_squared = 0.0;
};

/// Pair-dispersion exponent: advects pairs at initial separations delta0
/// under shared noise and fits the separation law at a few report times.
inline std::vector<SeparationExponent> pair_separation(const VelocityArchive& archive, double nu,
                                                       const std::vector<double>& delta0,
                                                       int M, double dt, double t,
                                                       std::uint64_t seed, int base_points = 8,
                                                       int report_times = 4) {
    if (delta0.size() < 3) throw std::invalid_argument("pair_separation: need >= 3 separations");
    const auto [dmin, dmax] = std::minmax_element(delta0.begin(), delta0.end());
    if (*dmax / *dmin < 99.0)
        throw std::invalid_argument("pair_separation: separations must span >= 2 decades");
    const double L = archive.grid().length;
    Rng setup(derive_seed(seed, "pair_separation/setup"));
    std::vector<Vec2> labels;  // layout: [delta][base][2]
    for (size_t d = 0; d < delta0.size(); ++d)
        for (int b = 0; b < base_points; ++b) {
            const Vec2 x{setup.uniform(0.0, L), setup.uniform(0.0, L)};
            const double th = setup.uniform(0.0, two_pi);
            labels.push_back(x);
            labels.push_back({wrap_coord(x.x + delta0[d] * std::cos(th), L),
                              wrap_coord(x.y + delta0[d] * std::sin(th), L)});
        }

    const long steps = std::max<long>(1, std::llround(t / dt));
    const double h = t / static_cast<double>(steps);
    const long stride = std::max<long>(1, steps / report_times);
    std::vector<long> report_steps;
    for (long s = stride; s <= steps; s += stride) report_steps.push_back(s);
    if (report_steps.back() != steps) report_steps.push_back(steps);

    // mean separation accumulated per (report, delta); realizations first
    // write private slots, then a fixed-order reduction.
    std::vector<std::vector<double>> per_real(
        static_cast<size_t>(M), std::vector<double>(report_steps.size() * delta0.size(), 0.0));
    const double amp = std::sqrt(2.0 * nu * h);
    parallel_for(0, M, [&](long m) {
        Rng rng(substream(seed, static_cast<std::uint64_t>(m)));
        std::vector<Vec2> p = labels;
        size_t next_report = 0;
        for (long s = 0; s < steps; ++s) {
            double z1, z2;
            rng.gauss_pair(z1, z2);
            const double ts = h * static_cast<double>(s);
            for (auto& q : p) {
                const Vec2 u = archive.velocity(ts, q);
                q.x = wrap_coord(q.x + h * u.x + amp * z1, L);
                q.y = wrap_coord(q.y + h * u.y + amp * z2, L);
            }
            while (next_report < report_steps.size() && report_steps[next_report] == s + 1) {
                for (size_t d = 0; d < delta0.size(); ++d) {
                    double acc = 0.0;
                    for (int b = 0; b < base_points; ++b) {
                        const size_t i = 2 * (d * base_points + b);
                        acc += torus_distance(p[i].x, p[i].y, p[i + 1].x, p[i + 1].y, L);
                    }
                    per_real[static_cast<size_t>(m)][next_report * delta0.size() + d] =
                        acc / base_points;
                }
                ++next_report;
            }
        }
    });

    std::vector<SeparationExponent> out;
    for (size_t r = 0; r < report_steps.size(); ++r) {
        std::vector<double> xs, ys;
        for (size_t d = 0; d < delta0.size(); ++d) {
            double mean = 0.0;
            for (int m = 0; m < M; ++m) mean += per_real[static_cast<size_t>(m)][r * delta0.size() + d];
            mean /= M;
            xs.push_back(std::log(delta0[d]));
            ys.push_back(std::log(mean));
        }
        const LineFit fit = fit_line(xs, ys);
        out.push_back({h * static_cast<double>(report_steps[r]), fit.slope, fit.r_squared});
    }
    return out;
}

struct FdrResult {
    double lhs = 0.0;      // nu * int_0^t |grad omega|_2^2 ds
    double rhs = 0.0;      // (1/2) int Var[omega0(A_t(x))] dx
    double mc_se = 0.0;    // batch standard error of rhs
};

/// Fluctuation-dissipation identity: viscous enstrophy dissipation equals
/// half the integrated variance of the initial vorticity sampled along
/// backward stochastic characteristics.
inline FdrResult fdr_check(const Trajectory& traj, int M, double dt, std::uint64_t seed,
                           int eval_grid = 20) {
    if (traj.nu <= 0.0) throw std::invalid_argument("fdr_check: requires nu > 0");
    if (traj.forced) throw std::invalid_argument("fdr_check: requires an unforced run");
    if (traj.snapshots.size() < 3)
        throw std::invalid_argument("fdr_check: trajectory too sparse for time quadrature");
    FdrResult out;
    for (size_t i = 1; i < traj.snapshots.size(); ++i) {
        const double h = traj.snapshots[i].time - traj.snapshots[i - 1].time;
        out.lhs += 0.5 * h *
                   (2.0 * traj.snapshots[i].palinstrophy + 2.0 * traj.snapshots[i - 1].palinstrophy);
    }
    out.lhs *= traj.nu;

    const VelocityArchive archive = archive_from_trajectory(traj);
    const double t = traj.back().time;
    const GridSpec& g = traj.grid;
    std::vector<Vec2> pts;
    for (int i = 0; i < eval_grid; ++i)
        for (int j = 0; j < eval_grid; ++j)
            pts.push_back({g.length * i / eval_grid, g.length * j / eval_grid});

    const ScalarField& omega0 = traj.front().omega;
    const ParticleEnsemble ens = back_to_labels(pts, archive, traj.nu, M, dt, t, seed);

    // Batch means over realizations give the spread of the variance estimate.
    const int batches = std::max(2, std::min(20, M / 20));
    const int per_batch = M / batches;
    std::vector<double> batch_rhs;
    const double cell = g.length * g.length / (double(eval_grid) * eval_grid);
    std::vector<double> vals(static_cast<size_t>(per_batch));
    for (int b = 0; b < batches; ++b) {
        double acc = 0.0;
        for (size_t l = 0; l < pts.size(); ++l) {
            for (int m = 0; m < per_batch; ++m) {
                const Vec2& q = ens.pos(b * per_batch + m, l);
                vals[static_cast<size_t>(m)] = bicubic(omega0, q.x, q.y);
            }
            double s = 0.0;
            for (double v : vals) s += v;
            const double mean = s / per_batch;
            double ss = 0.0;
            for (double v : vals) ss += (v - mean) * (v - mean);
            acc += ss / (per_batch - 1);
        }
        batch_rhs.push_back(0.5 * cell * acc);
    }
    double mean = 0.0;
    for (double v : batch_rhs) mean += v;
    mean /= batches;
    double ss = 0.0;
    for (double v : batch_rhs) ss += (v - mean) * (v - mean);
    out.rhs = mean;
    out.mc_se = std::sqrt(ss / (batches - 1) / batches);
    return out;
}

}  // namespace yudo
