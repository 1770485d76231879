#include <catch2/catch_amalgamated.hpp>
#include <yudo/diagnostics.hpp>
#include <yudo/initial_data.hpp>

#include "support/test_fields.hpp"

using namespace yudo;
using yudo::test::max_abs_diff;
using yudo::test::rel_diff;

TEST_CASE("eigenmode samples sin(N x1)", "[initial_data]") {
    const GridSpec g(64);
    const ScalarField f = eigenmode(1, g);
    const ScalarField want = ScalarField::sample(g, [](double x1, double) { return std::sin(x1); });
    REQUIRE(max_abs_diff(f, want) == 0.0);
}

TEST_CASE("eigenmode mean and norm", "[initial_data]") {
    const GridSpec g(128);
    for (int N : {1, 2, 7, 20}) {
        const ScalarField f = eigenmode(N, g);
        REQUIRE(std::fabs(f.mean()) <= 1e-14);
        // closed form: integral of sin^2 over the torus is 2 pi^2
        REQUIRE(rel_diff(l2_norm(f), std::sqrt(2.0 * 3.14159265358979323846 *
                                               3.14159265358979323846)) <= 1e-13);
    }
}

TEST_CASE("eigenmode rejects modes outside the dealias band", "[initial_data]") {
    const GridSpec g(64);
    REQUIRE_THROWS_AS(eigenmode(0, g), std::invalid_argument);
    REQUIRE_THROWS_AS(eigenmode(22, g), std::invalid_argument);
    REQUIRE_NOTHROW(eigenmode(21, g));
}

TEST_CASE("random_besov is deterministic in the seed", "[initial_data]") {
    const GridSpec g(64);
    const ScalarField a = random_besov(0.5, 42, g);
    const ScalarField b = random_besov(0.5, 42, g);
    REQUIRE(a.values == b.values);
    const ScalarField c = random_besov(0.5, 43, g);
    REQUIRE(max_abs_diff(a, c) > 1e-3);
}

TEST_CASE("random_besov basic normalization", "[initial_data]") {
    const GridSpec g(128);
    const ScalarField f = random_besov(0.5, 9, g);
    REQUIRE(std::fabs(f.mean()) <= 1e-14);
    REQUIRE(rel_diff(f.max_abs(), 1.0) <= 1e-12);
}

TEST_CASE("random_besov spectrum follows the prescribed power law", "[initial_data]") {
    const GridSpec g(128);
    for (double s : {0.5, 1.0}) {
        const SpectralField w = to_spectral(random_besov(s, 17, g));
        // shell-averaged amplitude against |k| in log-log
        const int shells = g.n / 3;
        std::vector<double> amp(shells + 1, 0.0);
        std::vector<int> cnt(shells + 1, 0);
        for (int r = 0; r < g.n; ++r) {
            const int k1 = w.k1(r);
            for (int c = 0; c < w.cols(); ++c) {
                const int kk = static_cast<int>(std::lround(std::hypot(double(k1), double(c))));
                if (kk >= 2 && kk <= shells && std::abs(w.at(r, c)) > 0.0) {
                    amp[kk] += std::abs(w.at(r, c));
                    cnt[kk] += 1;
                }
            }
        }
        std::vector<double> xs, ys;
        for (int k = 2; k <= shells; ++k) {
            if (cnt[k] == 0) continue;
            xs.push_back(std::log(double(k)));
            ys.push_back(std::log(amp[k] / cnt[k]));
        }
        const double slope = fit_line(xs, ys).slope;
        REQUIRE(slope == Catch::Approx(-(1.0 + s)).margin(0.1));
    }
}

namespace {

/// Sharp-shell dyadic seminorm computed directly from the coefficients;
/// independent of the smooth partition used by besov_seminorm.
double sharp_dyadic_seminorm(const ScalarField& f, double s) {
    const SpectralField w = to_spectral(f);
    const double area = f.grid.length * f.grid.length;
    std::vector<double> energy(32, 0.0);
    for (int r = 0; r < f.grid.n; ++r) {
        const int k1 = w.k1(r);
        for (int c = 0; c < w.cols(); ++c) {
            const double kk = std::hypot(double(k1), double(c));
            if (kk < 1.0) continue;
            const int j = static_cast<int>(std::floor(std::log2(kk)));
            energy[static_cast<size_t>(j)] += w.col_weight(c) * std::norm(w.at(r, c));
        }
    }
    double semi = 0.0;
    for (size_t j = 0; j < energy.size(); ++j)
        semi = std::max(semi, std::pow(2.0, double(j) * s) * std::sqrt(area * energy[j]));
    return semi;
}

}  // namespace

TEST_CASE("random_besov dyadic seminorm matches the sharp-shell oracle and is stable in n",
          "[initial_data]") {
    const double s = 0.5;
    std::vector<double> smooth, sharp;
    for (int n : {128, 256, 512}) {
        const GridSpec g(n);
        const ScalarField f = random_besov(s, 23, g);
        smooth.push_back(besov_seminorm(f, s, 2.0).seminorm);
        sharp.push_back(sharp_dyadic_seminorm(f, s));
    }
    for (size_t i = 0; i < smooth.size(); ++i) {
        REQUIRE(smooth[i] / sharp[i] < 4.0);
        REQUIRE(smooth[i] / sharp[i] > 0.25);
    }
    const auto [lo, hi] = std::minmax_element(smooth.begin(), smooth.end());
    REQUIRE(*hi / *lo <= 2.0);
}

TEST_CASE("random_besov seminorm at a higher exponent grows with n", "[initial_data]") {
    const GridSpec g128(128), g512(512);
    const double at128 = besov_seminorm(random_besov(0.5, 23, g128), 1.0, 2.0).seminorm;
    const double at512 = besov_seminorm(random_besov(0.5, 23, g512), 1.0, 2.0).seminorm;
    REQUIRE(at512 >= 2.0 * at128);
}

TEST_CASE("disk patch levels and area fraction", "[initial_data]") {
    const GridSpec g(256);
    const double r = 1.0;
    const ScalarField f = vortex_patch(PatchSpec::disk(r, 1.0), g);
    REQUIRE(std::fabs(f.mean()) <= 1e-14);
    const double pi = 3.14159265358979323846;
    const double fraction_want = pi * r * r / (g.length * g.length);
    // two-level field: values are either -mu or 1 - mu
    const double mu = fraction_want;
    double inside = 0;
    for (double v : f.values) {
        const bool low = std::fabs(v + mu) < 0.05;
        const bool high = std::fabs(v - (1.0 - mu)) < 0.05;
        REQUIRE((low || high));
        if (high) inside += 1.0;
    }
    const double fraction = inside / double(g.size());
    REQUIRE(std::fabs(fraction - fraction_want) <= 2.0 / g.n);
}

TEST_CASE("koch(0) is an equilateral triangle patch", "[initial_data]") {
    const GridSpec g(256);
    const ScalarField f = vortex_patch(PatchSpec::koch(0, 1.0), g);
    double inside = 0;
    for (double v : f.values)
        if (v > 0.0) inside += 1.0;
    const double area = inside / double(g.size()) * g.length * g.length;
    const double want = std::sqrt(3.0) / 4.0 * 9.0;  // side 3 triangle
    REQUIRE(std::fabs(area - want) <= 0.1);
}

TEST_CASE("koch rejects sub-pixel boundaries", "[initial_data]") {
    const GridSpec g(512);
    REQUIRE_THROWS_AS(vortex_patch(PatchSpec::koch(8, 1.0), g), std::invalid_argument);
    REQUIRE_NOTHROW(vortex_patch(PatchSpec::koch(4, 1.0), g));
}

namespace {

/// Box-counting dimension of the patch boundary over dyadic box sizes.
double boundary_box_dimension(const ScalarField& f, int bmin, int bmax) {
    const int n = f.grid.n;
    std::vector<char> boundary(static_cast<size_t>(n) * n, 0);
    auto inside = [&](int i, int j) { return f.at((i + n) % n, (j + n) % n) > 0.0; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const bool c = inside(i, j);
            if (c != inside(i + 1, j) || c != inside(i - 1, j) || c != inside(i, j + 1) ||
                c != inside(i, j - 1))
                boundary[static_cast<size_t>(i) * n + j] = 1;
        }
    std::vector<double> xs, ys;
    for (int b = bmin; b <= bmax; b *= 2) {
        const int nb = n / b;
        std::vector<char> hit(static_cast<size_t>(nb) * nb, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (boundary[static_cast<size_t>(i) * n + j])
                    hit[static_cast<size_t>(i / b) * nb + j / b] = 1;
        long count = 0;
        for (char h : hit) count += h;
        xs.push_back(std::log(1.0 / b));
        ys.push_back(std::log(double(count)));
    }
    return yudo::fit_line(xs, ys).slope;
}

}  // namespace

TEST_CASE("koch(5) boundary has the snowflake box dimension", "[initial_data]") {
    const GridSpec g(1024);
    const ScalarField f = vortex_patch(PatchSpec::koch(5, 1.0), g);
    const double d = boundary_box_dimension(f, 2, 32);
    REQUIRE(d >= 1.20);
    REQUIRE(d <= 1.32);
}

TEST_CASE("factory outputs are zero-mean with bounded amplitude", "[initial_data]") {
    const GridSpec g(128);
    const double amp = 0.7;
    std::vector<ScalarField> fields;
    fields.push_back(vortex_patch(PatchSpec::disk(1.2, amp), g));
    fields.push_back(vortex_patch(PatchSpec::koch(3, amp), g));
    fields.push_back(eigenmode(3, g));
    fields.push_back(taylor_green(g, amp));
    for (const auto& f : fields) {
        REQUIRE(std::fabs(f.mean()) <= 1e-13);
        REQUIRE(f.max_abs() <= 1.0 + 1.0);  // amplitude plus mean shift, generous
    }
}
