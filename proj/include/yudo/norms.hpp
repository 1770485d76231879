#pragma once

#include <cmath>
#include <limits>

#include "spectral.hpp"

namespace yudo {

/// Lebesgue norm on the torus by grid quadrature (the rectangle rule is
/// spectrally accurate on periodic grids); p may be infinity.
inline double lp_norm(const ScalarField& f, double p) {
    if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
    if (std::isinf(p)) return f.max_abs();
    double sum = 0.0;
    for (double v : f.values) sum += std::pow(std::fabs(v), p);
    const double area = f.grid.length * f.grid.length;
    return std::pow(area * sum / static_cast<double>(f.grid.size()), 1.0 / p);
}

inline double l2_norm(const ScalarField& f) { return std::sqrt(grid_l2_squared(f)); }

/// Pointwise Frobenius magnitude of the velocity gradient tensor.
inline ScalarField velocity_gradient_magnitude(const VectorField& u) {
    VectorField gx = gradient(u.x);
    VectorField gy = gradient(u.y);
    ScalarField out(u.grid());
    for (size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] = std::sqrt(gx.x.values[i] * gx.x.values[i] + gx.y.values[i] * gx.y.values[i] +
                                  gy.x.values[i] * gy.x.values[i] + gy.y.values[i] * gy.y.values[i]);
    }
    return out;
}

/// Kinetic energy (1/2)|u|_2^2 of the velocity induced by omega.
inline double energy_from_vorticity(const SpectralField& w) {
    const int n = w.grid.n, nc = w.cols();
    const double area = w.grid.length * w.grid.length;
    double sum = 0.0;
    for (int r = 0; r < n; ++r) {
        const int k1 = w.k1(r);
        for (int c = 0; c < nc; ++c) {
            if (k1 == 0 && c == 0) continue;
            const double ksq = double(k1) * k1 + double(c) * c;
            sum += w.col_weight(c) * std::norm(w.at(r, c)) / ksq;
        }
    }
    return 0.5 * area * sum;
}

/// (1/2)|omega|_2^2.
inline double enstrophy(const SpectralField& w) { return 0.5 * spectral_l2_squared(w); }

/// (1/2)|grad omega|_2^2.
inline double palinstrophy(const SpectralField& w) {
    const int n = w.grid.n, nc = w.cols();
    const double area = w.grid.length * w.grid.length;
    double sum = 0.0;
    for (int r = 0; r < n; ++r) {
        const int k1 = w.k1(r);
        for (int c = 0; c < nc; ++c) {
            const double ksq = double(k1) * k1 + double(c) * c;
            sum += w.col_weight(c) * ksq * std::norm(w.at(r, c));
        }
    }
    return 0.5 * area * sum;
}

/// Negative-order Sobolev norm |f|_{H^-1} over the zero-mean part; equals the
/// L2 norm of the velocity induced by f via the stream function.
inline double hminus1_norm(const SpectralField& f) {
    const int n = f.grid.n, nc = f.cols();
    const double area = f.grid.length * f.grid.length;
    double sum = 0.0;
    for (int r = 0; r < n; ++r) {
        const int k1 = f.k1(r);
        for (int c = 0; c < nc; ++c) {
            if (k1 == 0 && c == 0) continue;
            const double ksq = double(k1) * k1 + double(c) * c;
            sum += f.col_weight(c) * std::norm(f.at(r, c)) / ksq;
        }
    }
    return std::sqrt(area * sum);
}

inline double hminus1_norm(const ScalarField& f) { return hminus1_norm(to_spectral(f)); }

}  // namespace yudo
