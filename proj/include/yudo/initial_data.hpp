#pragma once

#include <array>
#include <utility>
#include <vector>

#include "rng.hpp"
#include "spectral.hpp"

namespace yudo {

/// Stationary Euler mode sin(N x1).
inline ScalarField eigenmode(int N, const GridSpec& grid) {
    if (N < 1 || !grid.in_dealias_band(N, 0))
        throw std::invalid_argument("eigenmode: N = " + std::to_string(N) +
                                    " outside the dealias band for n = " + std::to_string(grid.n));
    return ScalarField::sample(grid, [N](double x1, double) { return std::sin(N * x1); });
}

/// Steady cellular flow cos(x1)cos(x2).
inline ScalarField taylor_green(const GridSpec& grid, double amplitude = 1.0) {
    return ScalarField::sample(
        grid, [amplitude](double x1, double x2) { return amplitude * std::cos(x1) * std::cos(x2); });
}

/// Random field with shell amplitudes |k|^-(1+s) and uniform random phases,
/// filled over the dealias band, zero mean, rescaled to max|f| = 1. The decay
/// exponent makes the dyadic block L2 norms scale like 2^(-j s), i.e. the
/// field sits at regularity s (sup-type dyadic norm finite, any higher
/// exponent divergent as n grows).
inline ScalarField random_besov(double s, std::uint64_t seed, const GridSpec& grid) {
    if (s <= 0.0) throw std::invalid_argument("random_besov: s must be positive");
    SpectralField f(grid);
    Rng rng(seed);
    const int n = grid.n;
    // k2 = 0 column: fill k1 > 0 rows, Hermitian partner rows are implied by
    // the transform only for k2 > 0, so (k1, 0) and (-k1, 0) must be set as
    // conjugates explicitly.
    // radial cutoff |k| <= n/3 keeps the filled band self-similar across
    // resolutions (the cutoff lands at the same position inside its dyadic
    // shell for every power-of-two n)
    const double kcut = n / 3.0;
    for (int k1 = 1; k1 <= n / 3; ++k1) {
        const double amp = std::pow(double(k1), -(1.0 + s));
        const double phase = rng.uniform(0.0, two_pi);
        const std::complex<double> c = 0.5 * amp * std::exp(std::complex<double>(0.0, phase));
        f.at(k1, 0) = c;
        f.at(n - k1, 0) = std::conj(c);
    }
    for (int r = 0; r < n; ++r) {
        const int k1 = f.k1(r);
        for (int k2 = 1; k2 <= n / 3; ++k2) {
            const double kk = std::hypot(double(k1), double(k2));
            if (kk > kcut) continue;
            const double amp = std::pow(kk, -(1.0 + s));
            const double phase = rng.uniform(0.0, two_pi);
            f.at(r, k2) = 0.5 * amp * std::exp(std::complex<double>(0.0, phase));
        }
    }
    ScalarField out = to_physical(f);
    const double m = out.max_abs();
    if (m > 0.0) out *= 1.0 / m;
    out.project_zero_mean();
    return out;
}

/// Vortex patch shapes: a disk of given radius or a Koch-snowflake polygon
/// (base triangle side 3.0) after `iterations` edge subdivisions.
struct PatchSpec {
    enum class Shape { Disk, Koch };
    Shape shape = Shape::Disk;
    double radius = 1.0;  // disk only
    int iterations = 0;   // koch only
    double center_x = 0.5 * two_pi;
    double center_y = 0.5 * two_pi;
    double amplitude = 1.0;

    static PatchSpec disk(double r, double amplitude = 1.0) {
        PatchSpec p;
        p.shape = Shape::Disk;
        p.radius = r;
        p.amplitude = amplitude;
        return p;
    }
    static PatchSpec koch(int iterations, double amplitude = 1.0) {
        PatchSpec p;
        p.shape = Shape::Koch;
        p.iterations = iterations;
        p.amplitude = amplitude;
        return p;
    }
};

namespace detail {

struct P2 {
    double x, y;
};

inline std::vector<P2> koch_polygon(double cx, double cy, int iterations, double side) {
    // Counter-clockwise equilateral triangle; bumps grow to the right of each
    // directed edge, i.e. outward.
    const double R = side / std::sqrt(3.0);
    std::vector<P2> poly;
    for (double deg : {90.0, 210.0, 330.0}) {
        const double th = deg * two_pi / 360.0;
        poly.push_back({cx + R * std::cos(th), cy + R * std::sin(th)});
    }
    for (int it = 0; it < iterations; ++it) {
        std::vector<P2> next;
        next.reserve(poly.size() * 4);
        for (size_t i = 0; i < poly.size(); ++i) {
            const P2 a = poly[i];
            const P2 b = poly[(i + 1) % poly.size()];
            const double ex = (b.x - a.x) / 3.0, ey = (b.y - a.y) / 3.0;
            const P2 p1{a.x + ex, a.y + ey};
            const P2 p2{a.x + 2 * ex, a.y + 2 * ey};
            // rotate (p2 - p1) by -60 degrees about p1
            const double c = 0.5, s = -std::sqrt(3.0) / 2.0;
            const P2 tip{p1.x + c * ex - s * ey, p1.y + s * ex + c * ey};
            next.push_back(a);
            next.push_back(p1);
            next.push_back(tip);
            next.push_back(p2);
        }
        poly = std::move(next);
    }
    return poly;
}

/// Even-odd scanline fill over grid nodes; assumes the polygon does not wrap
/// around the torus.
inline void fill_polygon(ScalarField& f, const std::vector<P2>& poly, double value) {
    const int n = f.grid.n;
    std::vector<double> crossings;
    for (int i = 0; i < n; ++i) {
        const double x1 = f.grid.coord(i);
        crossings.clear();
        for (size_t e = 0; e < poly.size(); ++e) {
            const P2 a = poly[e];
            const P2 b = poly[(e + 1) % poly.size()];
            if ((a.x <= x1 && x1 < b.x) || (b.x <= x1 && x1 < a.x)) {
                const double t = (x1 - a.x) / (b.x - a.x);
                crossings.push_back(a.y + t * (b.y - a.y));
            }
        }
        std::sort(crossings.begin(), crossings.end());
        for (size_t c = 0; c + 1 < crossings.size(); c += 2) {
            int j0 = static_cast<int>(std::ceil(crossings[c] / f.grid.spacing()));
            int j1 = static_cast<int>(std::ceil(crossings[c + 1] / f.grid.spacing()));
            for (int j = std::max(j0, 0); j < std::min(j1, n); ++j) f.at(i, j) = value;
        }
    }
}

}  // namespace detail

/// Indicator of the patch region times amplitude, mean-projected so the
/// result has values in {-mu, amplitude - mu}.
inline ScalarField vortex_patch(const PatchSpec& spec, const GridSpec& grid) {
    ScalarField f(grid);
    if (spec.shape == PatchSpec::Shape::Disk) {
        if (spec.radius <= 0.0 || spec.radius * spec.radius * 3.14159265358979 >= grid.length * grid.length)
            throw std::invalid_argument("vortex_patch: disk area outside (0, |T^2|)");
        for (int i = 0; i < grid.n; ++i)
            for (int j = 0; j < grid.n; ++j) {
                const double d = torus_distance(grid.coord(i), grid.coord(j), spec.center_x,
                                                spec.center_y, grid.length);
                if (d < spec.radius) f.at(i, j) = spec.amplitude;
            }
    } else {
        if (spec.iterations < 0) throw std::invalid_argument("vortex_patch: iterations < 0");
        if (spec.iterations > 7 && grid.n < 1024)
            throw std::invalid_argument(
                "vortex_patch: koch boundary below pixel scale (iterations > 7 needs n >= 1024)");
        const auto poly =
            detail::koch_polygon(spec.center_x, spec.center_y, spec.iterations, 3.0);
        detail::fill_polygon(f, poly, spec.amplitude);
    }
    f.project_zero_mean();
    return f;
}

}  // namespace yudo
