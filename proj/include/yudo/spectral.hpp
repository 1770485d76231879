#pragma once

#include <cmath>

#include "field.hpp"

namespace yudo {

inline constexpr double zero_mean_rel_tol = 1e-12;

inline void require_zero_mean(const ScalarField& f, const char* where) {
    const double m = f.mean();
    if (std::fabs(m) > zero_mean_rel_tol * f.max_abs()) throw MeanViolation(m, where);
}

namespace detail {

/// Applies op(k1, k2, c) over all stored modes. Rows/columns at the Nyquist
/// frequency carry no sign information, so odd (first-order) operators must
/// zero them; even multipliers can keep them.
template <class Op>
inline void for_each_mode(SpectralField& s, Op&& op) {
    const int n = s.grid.n, nc = s.cols();
    for (int r = 0; r < n; ++r) {
        const int k1 = s.k1(r);
        for (int c = 0; c < nc; ++c) op(k1, c, s.at(r, c));
    }
}

}  // namespace detail

/// d/dx1 and d/dx2 as spectral multipliers i*k; Nyquist modes are dropped.
inline void gradient_spectral(const SpectralField& f, SpectralField& d1, SpectralField& d2) {
    const int n = f.grid.n, nc = f.cols();
    if (d1.grid != f.grid) d1 = SpectralField(f.grid);
    if (d2.grid != f.grid) d2 = SpectralField(f.grid);
    for (int r = 0; r < n; ++r) {
        const int k1 = f.k1(r);
        for (int c = 0; c < nc; ++c) {
            const std::complex<double> v = f.at(r, c);
            const std::complex<double> iv(-v.imag(), v.real());
            d1.at(r, c) = (k1 == -n / 2) ? 0.0 : double(k1) * iv;
            d2.at(r, c) = (c == n / 2) ? 0.0 : double(c) * iv;
        }
    }
}

inline VectorField gradient(const ScalarField& f) {
    SpectralField s = to_spectral(f), d1, d2;
    gradient_spectral(s, d1, d2);
    VectorField g(f.grid);
    g.x = to_physical(d1);
    g.y = to_physical(d2);
    return g;
}

inline void laplacian_spectral(SpectralField& f) {
    detail::for_each_mode(f, [](int k1, int k2, std::complex<double>& c) {
        c *= -double(k1) * k1 - double(k2) * k2;
    });
}

inline ScalarField laplacian(const ScalarField& f) {
    SpectralField s = to_spectral(f);
    laplacian_spectral(s);
    return to_physical(s);
}

/// Velocity with curl u = +omega: psi solves Lap psi = omega, u = (-d2, d1) psi.
inline void biot_savart_spectral(const SpectralField& w, SpectralField& u1, SpectralField& u2) {
    const int n = w.grid.n, nc = w.cols();
    if (u1.grid != w.grid) u1 = SpectralField(w.grid);
    if (u2.grid != w.grid) u2 = SpectralField(w.grid);
    for (int r = 0; r < n; ++r) {
        const int k1 = w.k1(r);
        for (int c = 0; c < nc; ++c) {
            if ((k1 == 0 && c == 0) || k1 == -n / 2 || c == n / 2) {
                u1.at(r, c) = 0.0;
                u2.at(r, c) = 0.0;
                continue;
            }
            const double ksq = double(k1) * k1 + double(c) * c;
            const std::complex<double> v = w.at(r, c);
            const std::complex<double> iv(-v.imag(), v.real());
            u1.at(r, c) = double(c) / ksq * iv;
            u2.at(r, c) = -double(k1) / ksq * iv;
        }
    }
}

inline VectorField biot_savart(const ScalarField& omega) {
    require_zero_mean(omega, "biot_savart");
    SpectralField w = to_spectral(omega), u1, u2;
    biot_savart_spectral(w, u1, u2);
    VectorField u(omega.grid);
    u.x = to_physical(u1);
    u.y = to_physical(u2);
    return u;
}

/// Scalar curl d1 u2 - d2 u1.
inline ScalarField curl(const VectorField& u) {
    SpectralField s1 = to_spectral(u.x), s2 = to_spectral(u.y);
    SpectralField a, b, out(u.grid());
    gradient_spectral(s2, a, b);   // a = d1 u2
    SpectralField c, d;
    gradient_spectral(s1, c, d);   // d = d2 u1
    for (size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] = a.coeff[i] - d.coeff[i];
    return to_physical(out);
}

inline ScalarField divergence(const VectorField& u) {
    SpectralField s1 = to_spectral(u.x), s2 = to_spectral(u.y);
    SpectralField a, b, c, d, out(u.grid());
    gradient_spectral(s1, a, b);
    gradient_spectral(s2, c, d);
    for (size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] = a.coeff[i] + d.coeff[i];
    return to_physical(out);
}

/// Gaussian mollifier exp(-(ell*|k|)^2/2); unit mass, mean-preserving.
inline void mollify_spectral(SpectralField& f, double ell) {
    if (ell <= 0.0) throw std::invalid_argument("mollify: scale must be positive");
    detail::for_each_mode(f, [ell](int k1, int k2, std::complex<double>& c) {
        const double ksq = double(k1) * k1 + double(k2) * k2;
        c *= std::exp(-0.5 * ell * ell * ksq);
    });
}

inline ScalarField mollify(const ScalarField& f, double ell) {
    SpectralField s = to_spectral(f);
    mollify_spectral(s, ell);
    return to_physical(s);
}

/// 2/3-rule truncation; idempotent.
inline void dealias_spectral(SpectralField& f) {
    const GridSpec g = f.grid;
    detail::for_each_mode(f, [g](int k1, int k2, std::complex<double>& c) {
        if (!g.in_dealias_band(k1, k2)) c = 0.0;
    });
}

inline ScalarField dealias(const ScalarField& f) {
    SpectralField s = to_spectral(f);
    dealias_spectral(s);
    return to_physical(s);
}

}  // namespace yudo
