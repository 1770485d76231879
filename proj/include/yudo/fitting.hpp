#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace yudo {

/// Least-squares line with goodness-of-fit; xs and ys must match in size.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
    std::vector<double> residuals;
};

inline LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("fit_line: size mismatch");
    const size_t n = xs.size();
    if (n < 2) throw std::invalid_argument("fit_line: need at least two points");
    double sx = 0, sy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.residuals.resize(n);
    double ss_res = 0;
    for (size_t i = 0; i < n; ++i) {
        f.residuals[i] = ys[i] - (f.intercept + f.slope * xs[i]);
        ss_res += f.residuals[i] * f.residuals[i];
    }
    f.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return f;
}

}  // namespace yudo
