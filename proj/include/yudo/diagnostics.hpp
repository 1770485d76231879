#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "constants.hpp"
#include "dynamics.hpp"
#include "fitting.hpp"
#include "norms.hpp"
#include "rng.hpp"

namespace yudo {

// ---------------------------------------------------------------------------
// Distribution functions
// ---------------------------------------------------------------------------

/// Pushforward of the normalized area measure under a field: the sorted node
/// values with uniform weights 1/n^2.
struct EmpiricalDistribution {
    std::vector<double> sorted;

    double quantile(double q) const {
        if (sorted.empty()) throw std::invalid_argument("EmpiricalDistribution: empty");
        const double pos = std::clamp(q, 0.0, 1.0) * (sorted.size() - 1);
        const size_t i = static_cast<size_t>(pos);
        const double a = pos - i;
        return i + 1 < sorted.size() ? sorted[i] + a * (sorted[i + 1] - sorted[i]) : sorted.back();
    }

    template <class F>
    double expectation(F&& f) const {
        double s = 0.0;
        for (double v : sorted) s += f(v);
        return s / static_cast<double>(sorted.size());
    }
};

inline EmpiricalDistribution distribution(const ScalarField& f) {
    EmpiricalDistribution d;
    d.sorted = f.values;
    std::sort(d.sorted.begin(), d.sorted.end());
    return d;
}

/// Exact 1-Wasserstein distance for equal-count uniform-weight samples:
/// mean absolute difference of sorted values.
inline double wasserstein1(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
    if (a.sorted.size() != b.sorted.size())
        throw std::invalid_argument("wasserstein1: sample counts differ");
    if (a.sorted.empty()) return 0.0;
    double s = 0.0;
    for (size_t i = 0; i < a.sorted.size(); ++i) s += std::fabs(a.sorted[i] - b.sorted[i]);
    return s / static_cast<double>(a.sorted.size());
}

// ---------------------------------------------------------------------------
// Dyadic (Littlewood-Paley) analysis
// ---------------------------------------------------------------------------

namespace detail {

/// C-infinity step: 0 for x <= 0, 1 for x >= 1.
inline double smoothstep(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / x);
    const double b = std::exp(-1.0 / (1.0 - x));
    return a / (a + b);
}

/// Radial low-pass profile: 1 for r <= 1, 0 for r >= 2.
inline double lowpass(double r) { return 1.0 - smoothstep(r - 1.0); }

/// Squared multiplier of dyadic block j (j = -1 is the low block). The
/// squares sum to 1 at every mode, so block energies partition |f|_2^2.
/// The partition is fixed; all dyadic constants in this project are
/// relative to it.
inline double block_multiplier_sq(int j, double kmag) {
    if (j < 0) return lowpass(kmag);
    const double hi = lowpass(kmag / double(1 << (j + 1)));
    const double lo = lowpass(kmag / double(1 << j));
    return std::max(hi - lo, 0.0);
}

inline int top_block(const GridSpec& g) {
    const double kmax = 0.5 * std::sqrt(2.0) * g.n;
    return static_cast<int>(std::ceil(std::log2(kmax)));
}

}  // namespace detail

/// Block norms of the smooth dyadic decomposition and the sup-type seminorm
/// sup_j 2^(js) |Delta_j f|_p (low block carries weight 1).
struct BesovSpectrum {
    double s = 0.0;
    double p = 2.0;
    int first_block = -1;
    std::vector<double> block_norms;   // |Delta_j f|_p, j = first_block..
    std::vector<double> block_energy;  // |Delta_j f|_2^2; sums to |f|_2^2
    double seminorm = 0.0;
};

inline BesovSpectrum besov_seminorm(const ScalarField& f, double s, double p) {
    if (s < 0.0) throw std::invalid_argument("besov_seminorm: s must be >= 0");
    if (p < 1.0) throw std::invalid_argument("besov_seminorm: p must be >= 1");
    const SpectralField w = to_spectral(f);
    const int n = f.grid.n, nc = w.cols();
    const int jtop = detail::top_block(f.grid);
    BesovSpectrum out;
    out.s = s;
    out.p = p;
    SpectralField block(f.grid);
    ScalarField piece(f.grid);
    const double area = f.grid.length * f.grid.length;
    for (int j = -1; j <= jtop; ++j) {
        double energy = 0.0;
        for (int r = 0; r < n; ++r) {
            const int k1 = w.k1(r);
            for (int c = 0; c < nc; ++c) {
                const double kmag = std::hypot(double(k1), double(c));
                const double m2 = detail::block_multiplier_sq(j, kmag);
                block.at(r, c) = std::sqrt(m2) * w.at(r, c);
                energy += w.col_weight(c) * m2 * std::norm(w.at(r, c));
            }
        }
        energy *= area;
        double norm_p;
        if (p == 2.0) {
            norm_p = std::sqrt(energy);
        } else {
            SpectralTransform::local(n).inverse(block.coeff.data(), piece.values.data());
            norm_p = lp_norm(piece, p);
        }
        out.block_norms.push_back(norm_p);
        out.block_energy.push_back(energy);
        const double weight = j < 0 ? 1.0 : std::pow(2.0, j * s);
        out.seminorm = std::max(out.seminorm, weight * norm_p);
    }
    return out;
}

/// Fitted decay exponent of the dyadic block L2 norms: block j scales like
/// 2^(-j s) for a field of smoothness s. Fit skips the lowest blocks and
/// empty tail blocks.
inline double measured_besov_index(const ScalarField& f) {
    const BesovSpectrum sp = besov_seminorm(f, 0.0, 2.0);
    std::vector<double> xs, ys;
    for (size_t i = 0; i < sp.block_norms.size(); ++i) {
        const int j = sp.first_block + static_cast<int>(i);
        if (j < 1) continue;
        if (sp.block_norms[i] <= 0.0 || sp.block_norms[i] < 1e-13 * sp.block_norms.front()) break;
        xs.push_back(double(j));
        ys.push_back(std::log2(sp.block_norms[i]));
    }
    if (xs.size() < 3) throw std::invalid_argument("measured_besov_index: too few active blocks");
    return -fit_line(xs, ys).slope;
}

// ---------------------------------------------------------------------------
// Dissipation
// ---------------------------------------------------------------------------

/// nu * int_0^T int f''(omega) |grad omega|^2 dx dt by trapezoid over the
/// stored snapshots. Identically zero for nu = 0 by the transport structure,
/// so inviscid trajectories are rejected.
inline double dissipation_integral(const Trajectory& traj,
                                   const std::function<double(double)>& f_second) {
    if (traj.nu <= 0.0)
        throw std::invalid_argument("dissipation_integral: requires a viscous trajectory");
    std::vector<double> integrand(traj.snapshots.size());
    for (size_t i = 0; i < traj.snapshots.size(); ++i) {
        const ScalarField& om = traj.snapshots[i].omega;
        const VectorField g = gradient(om);
        double sum = 0.0;
        for (size_t k = 0; k < om.values.size(); ++k) {
            const double gg =
                g.x.values[k] * g.x.values[k] + g.y.values[k] * g.y.values[k];
            sum += f_second(om.values[k]) * gg;
        }
        const double area = om.grid.length * om.grid.length;
        integrand[i] = area * sum / static_cast<double>(om.grid.size());
    }
    double total = 0.0;
    for (size_t i = 1; i < traj.snapshots.size(); ++i) {
        const double h = traj.snapshots[i].time - traj.snapshots[i - 1].time;
        total += 0.5 * h * (integrand[i] + integrand[i - 1]);
    }
    return traj.nu * total;
}

// ---------------------------------------------------------------------------
// Exponential integrability and the velocity modulus of continuity
// ---------------------------------------------------------------------------

struct ExpIntegral {
    double value = 0.0;
    bool saturated = false;  // some exponent hit the overflow clamp
};

/// Grid quadrature of exp(beta |grad u|) with the Frobenius magnitude.
inline ExpIntegral exp_integral(const VectorField& u, double beta) {
    if (beta <= 0.0) throw std::invalid_argument("exp_integral: beta must be positive");
    const ScalarField mag = velocity_gradient_magnitude(u);
    ExpIntegral out;
    double sum = 0.0;
    for (double v : mag.values) {
        double e = beta * v;
        if (e > 700.0) {
            e = 700.0;
            out.saturated = true;
        }
        sum += std::exp(e);
    }
    const double area = mag.grid.length * mag.grid.length;
    out.value = area * sum / static_cast<double>(mag.grid.size());
    return out;
}

/// Trigonometric evaluation of a spectral field at an arbitrary point.
inline double eval_spectral(const SpectralField& f, double x1, double x2) {
    const int n = f.grid.n, nc = f.cols();
    static thread_local std::vector<std::complex<double>> ph1, ph2;
    ph1.resize(n);
    ph2.resize(nc);
    for (int r = 0; r < n; ++r) {
        const double a = f.k1(r) * x1;
        ph1[r] = {std::cos(a), std::sin(a)};
    }
    for (int c = 0; c < nc; ++c) {
        const double a = c * x2;
        ph2[c] = {std::cos(a), std::sin(a)};
    }
    double total = 0.0;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < nc; ++c) {
            const std::complex<double> term = f.at(r, c) * ph1[r] * ph2[c];
            total += f.col_weight(c) * term.real();
        }
    }
    return total;
}

/// Smallest constant C making |u(x)-u(y)| <= (C/beta) d ln(C C_K / d^2) hold
/// over `pair_count` sampled pairs, with beta = gamma_hat / |curl u|_inf and
/// C_K proportional to the torus area. Velocities are evaluated spectrally.
inline double log_lipschitz_modulus(const VectorField& u, int pair_count, std::uint64_t seed) {
    if (pair_count < 1000)
        throw std::invalid_argument("log_lipschitz_modulus: need at least 1000 pairs");
    const double omega_inf = curl(u).max_abs();
    if (omega_inf <= 0.0) return 0.0;
    const double beta = fitted::gamma_hat / omega_inf;
    const double ck = 2.0 * u.grid().length * u.grid().length;
    const SpectralField u1 = to_spectral(u.x), u2 = to_spectral(u.y);
    Rng rng(seed);
    const double L = u.grid().length;
    double cmax = 0.0;
    for (int i = 0; i < pair_count; ++i) {
        const double ax = rng.uniform(0.0, L), ay = rng.uniform(0.0, L);
        const double bx = rng.uniform(0.0, L), by = rng.uniform(0.0, L);
        const double d = torus_distance(ax, ay, bx, by, L);
        if (d < 1e-9) continue;
        const double du = std::hypot(eval_spectral(u1, ax, ay) - eval_spectral(u1, bx, by),
                                     eval_spectral(u2, ax, ay) - eval_spectral(u2, bx, by));
        if (du <= 0.0) continue;
        auto holds = [&](double c) { return c / beta * d * std::log(c * ck / (d * d)) >= du; };
        double hi = 1.0;
        while (!holds(hi)) hi *= 2.0;
        double lo = 0.0;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (holds(mid) ? hi : lo) = mid;
        }
        cmax = std::max(cmax, hi);
    }
    return cmax;
}

// ---------------------------------------------------------------------------
// Scalar inequalities and operator-growth ratios
// ---------------------------------------------------------------------------

/// Gap of the Young-type product bound a*b <= e^a + b ln b - b (b > 0);
/// nonnegative for all admissible arguments.
inline double young_gap(double a, double b) {
    return std::exp(a) + b * std::log(b) - b - a * b;
}

/// |grad K[w]|_p / (p |w|_p): the singular-integral growth ratio, bounded
/// uniformly in p.
inline double cz_ratio(const ScalarField& omega, double p) {
    const VectorField u = biot_savart(omega);
    const ScalarField mag = velocity_gradient_magnitude(u);
    return lp_norm(mag, p) / (p * lp_norm(omega, p));
}

}  // namespace yudo
