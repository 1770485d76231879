#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

#include "grid.hpp"

namespace yudo {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Deterministic random stream with platform-independent output.
/// (std:: distributions are implementation-defined, so normals are drawn
/// with an explicit Box-Muller.)
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64(state_); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Two independent standard normals.
    void gauss_pair(double& z0, double& z1) {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        z0 = r * std::cos(two_pi * u2);
        z1 = r * std::sin(two_pi * u2);
    }

    double gauss() {
        double a, b;
        gauss_pair(a, b);
        return a;
    }

  private:
    std::uint64_t state_;
};

/// Splits one top-level seed into per-task seeds keyed by a stable label.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view label) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a offset basis
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::uint64_t s = root ^ h;
    return splitmix64(s);
}

/// Counter-based sub-seed for realization k of an ensemble; streams are
/// independent of evaluation order and thread layout.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t s = seed + 0x632be59bd9b4e019ull * (counter + 1);
    return splitmix64(s);
}

}  // namespace yudo
