#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "errors.hpp"
#include "fft.hpp"
#include "grid.hpp"

namespace yudo {

/// Real periodic field sampled at grid nodes, row-major (x1 slow, x2 fast).
struct ScalarField {
    GridSpec grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const GridSpec& g) : grid(g), values(g.size(), 0.0) {}

    double& at(int i1, int i2) { return values[static_cast<long>(i1) * grid.n + i2]; }
    double at(int i1, int i2) const { return values[static_cast<long>(i1) * grid.n + i2]; }

    template <class F>
    static ScalarField sample(const GridSpec& g, F&& f) {
        ScalarField out(g);
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) out.at(i, j) = f(g.coord(i), g.coord(j));
        return out;
    }

    double mean() const {
        double s = 0.0;
        for (double v : values) s += v;
        return s / static_cast<double>(values.size());
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::fabs(v));
        return m;
    }

    void project_zero_mean() {
        const double m = mean();
        for (double& v : values) v -= m;
    }

    ScalarField& operator+=(const ScalarField& o) {
        for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
        return *this;
    }
    ScalarField& operator-=(const ScalarField& o) {
        for (size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
        return *this;
    }
    ScalarField& operator*=(double s) {
        for (double& v : values) v *= s;
        return *this;
    }
};

inline ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
inline ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
inline ScalarField operator*(double s, ScalarField f) { return f *= s; }

/// Half-complex spectrum of a real field: rows are k1 in signed order,
/// columns are k2 = 0..n/2. The k2 < 0 half is implied by Hermitian
/// symmetry.
struct SpectralField {
    GridSpec grid;
    std::vector<std::complex<double>> coeff;

    SpectralField() = default;
    explicit SpectralField(const GridSpec& g)
        : grid(g), coeff(static_cast<size_t>(g.n) * (g.n / 2 + 1)) {}

    int cols() const { return grid.n / 2 + 1; }
    std::complex<double>& at(int row, int col) { return coeff[static_cast<long>(row) * cols() + col]; }
    std::complex<double> at(int row, int col) const {
        return coeff[static_cast<long>(row) * cols() + col];
    }

    int k1(int row) const { return grid.signed_mode(row); }
    int k2(int col) const { return col; }

    /// Multiplicity of a column when summing over the full spectrum.
    double col_weight(int col) const { return (col == 0 || col == grid.n / 2) ? 1.0 : 2.0; }
};

inline SpectralField to_spectral(const ScalarField& f) {
    SpectralField s(f.grid);
    SpectralTransform::local(f.grid.n).forward(f.values.data(), s.coeff.data());
    return s;
}

inline ScalarField to_physical(const SpectralField& s) {
    ScalarField f(s.grid);
    SpectralTransform::local(s.grid.n).inverse(s.coeff.data(), f.values.data());
    return f;
}

/// Integral of f^2 over the torus evaluated from coefficients (Parseval).
inline double spectral_l2_squared(const SpectralField& s) {
    const int n = s.grid.n, nc = s.cols();
    const double area = s.grid.length * s.grid.length;
    double sum = 0.0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < nc; ++c) sum += s.col_weight(c) * std::norm(s.at(r, c));
    return area * sum;
}

/// Integral of f^2 over the torus by grid quadrature (exact for the
/// trigonometric basis, so it matches spectral_l2_squared to rounding).
inline double grid_l2_squared(const ScalarField& f) {
    double sum = 0.0;
    for (double v : f.values) sum += v * v;
    const double area = f.grid.length * f.grid.length;
    return area * sum / static_cast<double>(f.grid.size());
}

struct VectorField {
    ScalarField x, y;

    VectorField() = default;
    explicit VectorField(const GridSpec& g) : x(g), y(g) {}
    const GridSpec& grid() const { return x.grid; }

    double max_speed() const {
        double m2 = 0.0;
        for (size_t i = 0; i < x.values.size(); ++i) {
            const double s2 = x.values[i] * x.values[i] + y.values[i] * y.values[i];
            m2 = std::max(m2, s2);
        }
        return std::sqrt(m2);
    }
};

}  // namespace yudo
