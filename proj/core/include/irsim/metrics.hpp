// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#pragma once

#include "irsim/snr_moments.hpp"

namespace irsim {

struct MetricRequest {
    GammaFit fit;
    double gamma_th = 0.0; // linear-scale SNR threshold, >= 0
};

/// P[gamma <= gamma_th] under the fitted gamma distribution:
/// the regularized lower incomplete gamma P(k, gamma_th / theta).
double outage_probability(const MetricRequest& req);

/// E[log2(1 + X)] for X ~ Gamma(k, theta), bits per channel use.
/// Evaluated by generalized Gauss-Laguerre quadrature with the node count
/// doubled (from 64) until two successive evaluations differ by < 1e-9.
/// Two corners take over when that cannot deliver the accuracy contract:
///   LogSplit  - small shape with a large scale puts Gamma mass at the
///               ln(1+theta t) branch-point scale 1/theta, where polynomial
///               quadrature converges only algebraically; the exact
///               decomposition ln(theta) + psi(k) + E[ln(1+1/(theta T))]
///               is used instead.
///   GaussianApprox - shapes above 500 use a normal approximation of X
///               (1e-4 accuracy target).
enum class RateMethod { GaussLaguerre, LogSplit, GaussianApprox };

struct ErgodicRateResult {
    double bits = 0.0;
    int nodes = 0; // node count of the accepted Gauss evaluation (0 otherwise)
    RateMethod method = RateMethod::GaussLaguerre;

    bool gaussian_fallback() const { return method == RateMethod::GaussianApprox; }
};

ErgodicRateResult ergodic_rate_detail(const GammaFit& fit);

inline double ergodic_rate(const GammaFit& fit) { return ergodic_rate_detail(fit).bits; }

/// CDF of the fitted gamma distribution at x.
double gamma_cdf(const GammaFit& fit, double x);

} // namespace irsim
