#pragma once

#include <stdexcept>
#include <string>

namespace yudo {

/// A zero-mean field was required but the input carries a nonzero mean.
struct MeanViolation : std::invalid_argument {
    double mean;
    MeanViolation(double m, const std::string& where)
        : std::invalid_argument(where + ": nonzero mean " + std::to_string(m)), mean(m) {}
};

struct CflViolation : std::runtime_error {
    long step;
    double cfl;
    CflViolation(long s, double c)
        : std::runtime_error("CFL limit exceeded at step " + std::to_string(s) +
                             ", cfl = " + std::to_string(c)),
          step(s),
          cfl(c) {}
};

struct NanDetected : std::runtime_error {
    long step;
    explicit NanDetected(long s)
        : std::runtime_error("non-finite state at step " + std::to_string(s)), step(s) {}
};

/// Velocity archive does not cover a requested time span, or its snapshot
/// spacing exceeds the declared maximum.
struct CoverageGap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResolutionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace yudo
