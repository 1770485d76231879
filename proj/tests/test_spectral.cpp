#include <catch2/catch_amalgamated.hpp>
#include <yudo/constants.hpp>
#include <yudo/diagnostics.hpp>
#include <yudo/norms.hpp>
#include <yudo/spectral.hpp>

#include "support/test_fields.hpp"

using namespace yudo;
using yudo::test::max_abs_diff;
using yudo::test::random_band_limited;

TEST_CASE("transform round trip reproduces samples", "[spectral]") {
    const GridSpec g(64);
    const ScalarField f = random_band_limited(g, 7);
    const ScalarField back = to_physical(to_spectral(f));
    REQUIRE(max_abs_diff(f, back) <= 1e-12 * f.max_abs());
}

TEST_CASE("Parseval identity on random fields", "[spectral]") {
    const GridSpec g(64);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const ScalarField f = random_band_limited(g, seed);
        const double grid_side = grid_l2_squared(f);
        const double spec_side = spectral_l2_squared(to_spectral(f));
        REQUIRE(yudo::test::rel_diff(grid_side, spec_side) <= 1e-12);
    }
}

TEST_CASE("biot_savart of zero is zero", "[spectral]") {
    const GridSpec g(32);
    const VectorField u = biot_savart(ScalarField(g));
    REQUIRE(u.x.max_abs() == 0.0);
    REQUIRE(u.y.max_abs() == 0.0);
}

TEST_CASE("biot_savart of sin(x1) is (0, -cos(x1))", "[spectral]") {
    const GridSpec g(64);
    const ScalarField w = ScalarField::sample(g, [](double x1, double) { return std::sin(x1); });
    const VectorField u = biot_savart(w);
    const ScalarField want =
        ScalarField::sample(g, [](double x1, double) { return -std::cos(x1); });
    REQUIRE(u.x.max_abs() <= 1e-13);
    REQUIRE(max_abs_diff(u.y, want) <= 1e-13);
}

TEST_CASE("biot_savart of the stationary family sin(N x1)", "[spectral]") {
    const GridSpec g(64);
    for (int N : {2, 5, 11}) {
        const ScalarField w =
            ScalarField::sample(g, [N](double x1, double) { return std::sin(N * x1); });
        const VectorField u = biot_savart(w);
        const ScalarField want = ScalarField::sample(
            g, [N](double x1, double) { return -std::cos(N * x1) / double(N); });
        REQUIRE(u.x.max_abs() <= 1e-13);
        REQUIRE(max_abs_diff(u.y, want) <= 1e-13);
    }
}

TEST_CASE("curl of biot_savart recovers the vorticity", "[spectral]") {
    const GridSpec g(64);
    for (std::uint64_t seed : {3u, 4u, 5u}) {
        const ScalarField w = random_band_limited(g, seed);
        const ScalarField back = curl(biot_savart(w));
        REQUIRE(max_abs_diff(w, back) <= 1e-10 * w.max_abs());
    }
}

TEST_CASE("biot_savart velocity is divergence-free", "[spectral]") {
    const GridSpec g(64);
    const ScalarField w = random_band_limited(g, 11);
    const VectorField u = biot_savart(w);
    const ScalarField div = divergence(u);
    REQUIRE(div.max_abs() <= 1e-10 * u.max_speed());
}

TEST_CASE("biot_savart rejects nonzero mean and reports it", "[spectral]") {
    const GridSpec g(32);
    ScalarField w = ScalarField::sample(g, [](double x1, double) { return std::sin(x1); });
    for (double& v : w.values) v += 0.25;
    try {
        biot_savart(w);
        FAIL("expected MeanViolation");
    } catch (const MeanViolation& e) {
        REQUIRE(std::fabs(e.mean - 0.25) <= 1e-12);
    }
}

TEST_CASE("gradient oracles", "[spectral]") {
    const GridSpec g(64);
    SECTION("constant") {
        ScalarField f(g);
        for (double& v : f.values) v = 3.5;
        const VectorField d = gradient(f);
        REQUIRE(d.x.max_abs() <= 1e-13);
        REQUIRE(d.y.max_abs() <= 1e-13);
    }
    SECTION("sin(x1)") {
        const ScalarField f =
            ScalarField::sample(g, [](double x1, double) { return std::sin(x1); });
        const VectorField d = gradient(f);
        const ScalarField want =
            ScalarField::sample(g, [](double x1, double) { return std::cos(x1); });
        REQUIRE(max_abs_diff(d.x, want) <= 1e-13);
        REQUIRE(d.y.max_abs() <= 1e-13);
    }
    SECTION("sin(3 x1) cos(2 x2)") {
        const ScalarField f = ScalarField::sample(
            g, [](double x1, double x2) { return std::sin(3 * x1) * std::cos(2 * x2); });
        const VectorField d = gradient(f);
        const ScalarField w1 = ScalarField::sample(
            g, [](double x1, double x2) { return 3 * std::cos(3 * x1) * std::cos(2 * x2); });
        const ScalarField w2 = ScalarField::sample(
            g, [](double x1, double x2) { return -2 * std::sin(3 * x1) * std::sin(2 * x2); });
        REQUIRE(max_abs_diff(d.x, w1) <= 1e-12);
        REQUIRE(max_abs_diff(d.y, w2) <= 1e-12);
    }
}

TEST_CASE("laplacian oracles", "[spectral]") {
    const GridSpec g(64);
    SECTION("constant") {
        ScalarField f(g);
        for (double& v : f.values) v = -2.0;
        REQUIRE(laplacian(f).max_abs() <= 1e-13);
    }
    SECTION("sin(x1)") {
        const ScalarField f =
            ScalarField::sample(g, [](double x1, double) { return std::sin(x1); });
        const ScalarField want =
            ScalarField::sample(g, [](double x1, double) { return -std::sin(x1); });
        REQUIRE(max_abs_diff(laplacian(f), want) <= 1e-12);
    }
    SECTION("cos(x1) cos(x2)") {
        const ScalarField f = ScalarField::sample(
            g, [](double x1, double x2) { return std::cos(x1) * std::cos(x2); });
        const ScalarField want = ScalarField::sample(
            g, [](double x1, double x2) { return -2.0 * std::cos(x1) * std::cos(x2); });
        REQUIRE(max_abs_diff(laplacian(f), want) <= 1e-12);
    }
}

TEST_CASE("mollify preserves constants and the mean", "[spectral]") {
    const GridSpec g(64);
    ScalarField f(g);
    for (double& v : f.values) v = 1.7;
    for (double ell : {0.1, 0.5, 2.0}) {
        const ScalarField m = mollify(f, ell);
        REQUIRE(max_abs_diff(m, f) <= 1e-13);
    }
    const ScalarField r = random_band_limited(g, 21) + f;
    REQUIRE(yudo::test::rel_diff(mollify(r, 0.3).mean(), r.mean()) <= 1e-12);
}

TEST_CASE("mollify damps a single mode by exp(-ell^2/2)", "[spectral]") {
    const GridSpec g(64);
    const ScalarField f = ScalarField::sample(g, [](double x1, double) { return std::sin(x1); });
    const double ell = 0.4;
    const ScalarField m = mollify(f, ell);
    const double factor = std::exp(-0.5 * ell * ell);
    const ScalarField want = factor * f;
    REQUIRE(max_abs_diff(m, want) <= 1e-13);
}

TEST_CASE("mollify error decreases monotonically with ell", "[spectral]") {
    const GridSpec g(64);
    const ScalarField f = random_band_limited(g, 5);
    double prev = std::numeric_limits<double>::infinity();
    for (double ell : {0.5, 0.25, 0.125}) {
        const double err = l2_norm(mollify(f, ell) - f);
        REQUIRE(err < prev);
        prev = err;
    }
}

TEST_CASE("mollify never expands the sup norm", "[spectral]") {
    const GridSpec g(64);
    for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
        const ScalarField f = random_band_limited(g, seed);
        REQUIRE(mollify(f, 0.25).max_abs() <= f.max_abs() * (1.0 + 1e-12));
    }
}

TEST_CASE("mollify rejects nonpositive scales", "[spectral]") {
    const GridSpec g(32);
    REQUIRE_THROWS_AS(mollify(ScalarField(g), 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(mollify(ScalarField(g), -1.0), std::invalid_argument);
}

TEST_CASE("dealias keeps the retained band and kills the rest", "[spectral]") {
    const GridSpec g(64);
    SECTION("band-limited field unchanged") {
        const ScalarField f = random_band_limited(g, 9);
        REQUIRE(max_abs_diff(dealias(f), f) <= 1e-13 * f.max_abs());
    }
    SECTION("mode above the cutoff vanishes") {
        const int k = g.n / 2 - 1;
        const ScalarField f =
            ScalarField::sample(g, [k](double x1, double) { return std::cos(k * x1); });
        REQUIRE(dealias(f).max_abs() <= 1e-13);
    }
    SECTION("idempotence") {
        ScalarField f = random_band_limited(g, 10);
        // push energy above the cutoff so dealias acts
        f += ScalarField::sample(g, [](double x1, double x2) { return std::cos(30 * x1) * std::cos(2 * x2); });
        const ScalarField once = dealias(f);
        REQUIRE(max_abs_diff(dealias(once), once) <= 1e-14);
    }
}

TEST_CASE("singular-integral growth ratio admits the frozen bound", "[spectral]") {
    const GridSpec g(64);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const ScalarField w = random_band_limited(g, seed);
        for (double p : {2.0, 4.0, 8.0, 16.0}) {
            REQUIRE(cz_ratio(w, p) <= fitted::cz_ratio_bound);
        }
    }
}
