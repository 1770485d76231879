#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace yudo {

inline constexpr double two_pi = 6.28318530717958647692528676655900577;

/// Uniform N x N sampling of the periodic square [0, 2*pi)^2, row-major
/// with x1 on the slow index. Wavenumbers per axis are the integers in
/// [-n/2, n/2).
struct GridSpec {
    int n = 0;
    double length = two_pi;

    GridSpec() = default;
    explicit GridSpec(int points) : n(points) {
        if (n < 16 || (n & (n - 1)) != 0)
            throw std::invalid_argument("GridSpec: n must be a power of two >= 16, got " +
                                        std::to_string(n));
    }

    double spacing() const { return length / n; }
    long size() const { return static_cast<long>(n) * n; }
    double coord(int i) const { return length * i / n; }
    int signed_mode(int i) const { return i < n / 2 ? i : i - n; }

    /// Largest mode kept by the 2/3 rule: 3*max(|k1|,|k2|) <= n.
    bool in_dealias_band(int k1, int k2) const {
        int m = std::max(std::abs(k1), std::abs(k2));
        return 3 * m <= n;
    }

    bool operator==(const GridSpec& o) const { return n == o.n && length == o.length; }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

inline double wrap_coord(double x, double length) {
    double y = std::fmod(x, length);
    return y < 0 ? y + length : y;
}

/// Geodesic distance on the torus of side `length`.
inline double torus_distance(double ax, double ay, double bx, double by, double length = two_pi) {
    auto axis = [length](double d) {
        d = std::fabs(std::fmod(d, length));
        return std::min(d, length - d);
    };
    return std::hypot(axis(ax - bx), axis(ay - by));
}

}  // namespace yudo
