#pragma once

namespace yudo::fitted {

// Empirical constants fitted once on a frozen calibration corpus (random
// power-law fields, seeds 101..120, smoothness cycling over {0.3, 0.5, 0.8,
// 1.2}, n = 128) and asserted as regressions thereafter. tools/calibrate.cpp
// recomputes every value here; rerun it after touching the spectral kernels
// or the dyadic partition.

/// Exponential-integrability budget: exp_integral is evaluated at
/// beta = gamma_hat / |omega|_inf.
inline constexpr double gamma_hat = 0.5;

/// Regression bound for exp_integral(u, gamma_hat/|omega|_inf) over the
/// corpus and all ladder snapshots.
inline constexpr double exp_integral_bound = 110.0;

/// Regression bound for |grad K[w]|_p / (p |w|_p) over the corpus,
/// p in {2, 4, 8, 16}. The p = 2 ratio is exactly 1/2 by Parseval, so the
/// bound can never drop below that.
inline constexpr double cz_ratio_bound = 0.55;

/// Partition-relative constant of the dyadic interpolation inequality
/// |f|_2 <= c |f|_{H^-1}^{s'/(1+s')} |f|_{B^s}^{1/(1+s')} at s' = s/2.
inline constexpr double besov_interp_constant = 2.0;

/// Decay rate of the tracked smoothness exponent s(t) = s exp(-c t |w0|_inf),
/// fitted on an inviscid calibration run.
inline constexpr double regularity_decay = 0.35;

/// Stability regression for the log-Lipschitz modulus on the corpus.
inline constexpr double log_lipschitz_bound = 10.0;

}  // namespace yudo::fitted
