#pragma once

#include <algorithm>
#include <vector>

#include "spectral.hpp"

namespace yudo {

struct Vec2 {
    double x = 0.0, y = 0.0;
};

namespace detail {

inline double catmull_rom(double fm1, double f0, double f1, double f2, double t) {
    return f0 + 0.5 * t *
                    (f1 - fm1 +
                     t * (2.0 * fm1 - 5.0 * f0 + 4.0 * f1 - f2 + t * (3.0 * (f0 - f1) + f2 - fm1)));
}

}  // namespace detail

/// Periodic bicubic (Catmull-Rom) interpolation at an arbitrary point.
inline double bicubic(const ScalarField& f, double x1, double x2) {
    const int n = f.grid.n;
    const double h = f.grid.spacing();
    const double g1 = wrap_coord(x1, f.grid.length) / h;
    const double g2 = wrap_coord(x2, f.grid.length) / h;
    int i = static_cast<int>(g1);
    int j = static_cast<int>(g2);
    if (i >= n) i = n - 1;  // guards wrap_coord landing exactly on length
    if (j >= n) j = n - 1;
    const double t1 = g1 - i, t2 = g2 - j;
    double rows[4];
    for (int r = 0; r < 4; ++r) {
        const int ii = (i + r - 1 + n) % n;
        const int j0 = (j - 1 + n) % n, j1 = j, j2 = (j + 1) % n, j3 = (j + 2) % n;
        rows[r] = detail::catmull_rom(f.at(ii, j0), f.at(ii, j1), f.at(ii, j2), f.at(ii, j3), t2);
    }
    return detail::catmull_rom(rows[0], rows[1], rows[2], rows[3], t1);
}

/// Time-indexed velocity snapshots. Space is interpolated bicubically,
/// time linearly between stored snapshots.
class VelocityArchive {
  public:
    VelocityArchive() = default;
    VelocityArchive(const GridSpec& grid, double declared_max_gap, bool forced = false)
        : grid_(grid), declared_max_gap_(declared_max_gap), forced_(forced) {}

    void push(double time, VectorField u) {
        if (!times_.empty()) {
            if (time <= times_.back())
                throw std::invalid_argument("VelocityArchive: snapshot times must increase");
            if (time - times_.back() > declared_max_gap_ * (1.0 + 1e-9))
                throw CoverageGap("VelocityArchive: gap " + std::to_string(time - times_.back()) +
                                  " exceeds declared maximum " + std::to_string(declared_max_gap_));
        }
        times_.push_back(time);
        snaps_.push_back(std::move(u));
    }

    const GridSpec& grid() const { return grid_; }
    bool forced() const { return forced_; }
    size_t count() const { return times_.size(); }
    double declared_max_gap() const { return declared_max_gap_; }
    double t_begin() const { return times_.empty() ? 0.0 : times_.front(); }
    double t_end() const { return times_.empty() ? 0.0 : times_.back(); }
    const std::vector<double>& times() const { return times_; }
    const VectorField& snapshot(size_t i) const { return snaps_[i]; }

    void require_coverage(double t0, double t1, const char* who) const {
        const double slop = 1e-9 * std::max(1.0, std::fabs(t1));
        if (times_.empty() || t_begin() > t0 + slop || t_end() < t1 - slop)
            throw CoverageGap(std::string(who) + ": archive covers [" + std::to_string(t_begin()) +
                              ", " + std::to_string(t_end()) + "] but [" + std::to_string(t0) +
                              ", " + std::to_string(t1) + "] was requested");
    }

    /// Point sample of the velocity at time t.
    Vec2 velocity(double t, const Vec2& p) const {
        const auto [i, a] = bracket(t);
        const VectorField& lo = snaps_[i];
        Vec2 v{bicubic(lo.x, p.x, p.y), bicubic(lo.y, p.x, p.y)};
        if (a > 0.0) {
            const VectorField& hi = snaps_[i + 1];
            v.x += a * (bicubic(hi.x, p.x, p.y) - v.x);
            v.y += a * (bicubic(hi.y, p.x, p.y) - v.y);
        }
        return v;
    }

    /// Full-grid velocity at time t (linear blend of the bracketing snapshots).
    void velocity_field(double t, VectorField& out) const {
        const auto [i, a] = bracket(t);
        const VectorField& lo = snaps_[i];
        if (a == 0.0) {
            out = lo;
            return;
        }
        const VectorField& hi = snaps_[i + 1];
        if (out.grid() != grid_) out = VectorField(grid_);
        for (size_t k = 0; k < out.x.values.size(); ++k) {
            out.x.values[k] = lo.x.values[k] + a * (hi.x.values[k] - lo.x.values[k]);
            out.y.values[k] = lo.y.values[k] + a * (hi.y.values[k] - lo.y.values[k]);
        }
    }

  private:
    /// Index of the snapshot at or before t plus the blend weight in [0, 1).
    std::pair<size_t, double> bracket(double t) const {
        if (times_.empty()) throw CoverageGap("VelocityArchive: empty");
        if (t <= times_.front()) return {0, 0.0};
        if (t >= times_.back()) return {times_.size() - 1, 0.0};
        const auto it = std::upper_bound(times_.begin(), times_.end(), t);
        const size_t i = static_cast<size_t>(it - times_.begin()) - 1;
        const double a = (t - times_[i]) / (times_[i + 1] - times_[i]);
        return {i, a};
    }

    GridSpec grid_;
    double declared_max_gap_ = 0.0;
    bool forced_ = false;
    std::vector<double> times_;
    std::vector<VectorField> snaps_;
};

}  // namespace yudo
