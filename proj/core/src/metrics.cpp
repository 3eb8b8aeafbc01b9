// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#include "irsim/metrics.hpp"

#include <cmath>

#include "irsim/errors.hpp"
#include "irsim/quadrature.hpp"
#include "irsim/special.hpp"

namespace irsim {

namespace {

constexpr double kInvLn2 = 1.4426950408889634;

void check_fit(const GammaFit& fit) {
    if (!(fit.shape > 0.0) || !std::isfinite(fit.shape) || !(fit.scale > 0.0) ||
        !std::isfinite(fit.scale))
        throw DomainError("gamma fit parameters must be positive and finite");
}

double laguerre_rate(const GammaFit& fit, int n) {
    const QuadratureRule rule = gauss_gamma_rule(fit.shape, n);
    double bits = 0.0;
    for (int j = 0; j < n; ++j)
        bits += rule.weights[j] * std::log1p(fit.scale * rule.nodes[j]);
    return bits * kInvLn2;
}

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adapt(const F& f, double a, double b, double fa, double fm, double fb, double whole,
             double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adapt(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return adapt(f, a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 56);
}

// E[ln(1 + eps/T)] for T ~ Gamma(k, 1). Only exercised when the mass near
// the origin matters, so the small-shape substitution t = x^2 is the
// default; larger shapes integrate over the bulk window directly.
double log_remainder(double k, double eps) {
    const double log_gamma_k = log_gamma(k);
    if (k < 5.0) {
        const double t_hi = k + 40.0 * std::sqrt(k) + 60.0;
        auto f = [&](double x) {
            if (x <= 0.0) return 0.0;
            const double w = (2.0 * k - 1.0) * std::log(x) - x * x - log_gamma_k;
            return 2.0 * std::log1p(eps / (x * x)) * std::exp(w);
        };
        return adaptive_simpson(f, 0.0, std::sqrt(t_hi), 1e-11);
    }
    const double sd = std::sqrt(k);
    const double t_lo = std::max(1e-12, k - 14.0 * sd - 30.0);
    const double t_hi = k + 14.0 * sd + 60.0;
    auto f = [&](double t) {
        const double w = (k - 1.0) * std::log(t) - t - log_gamma_k;
        return std::log1p(eps / t) * std::exp(w);
    };
    return adaptive_simpson(f, t_lo, t_hi, 1e-11);
}

} // namespace

double outage_probability(const MetricRequest& req) {
    check_fit(req.fit);
    if (req.gamma_th < 0.0 || std::isnan(req.gamma_th))
        throw DomainError("outage_probability requires gamma_th >= 0");
    if (req.gamma_th == 0.0) return 0.0;
    return regularized_lower_gamma(req.fit.shape, req.gamma_th / req.fit.scale);
}

ErgodicRateResult ergodic_rate_detail(const GammaFit& fit) {
    check_fit(fit);
    ErgodicRateResult out;

    if (fit.shape > 500.0) {
        // X is sharply concentrated: treat it as N(k theta, k theta^2).
        // P[X < 0] is below e^{-k/2} here, so the integrand needs no guard
        // beyond clamping the argument of log1p away from -1.
        const QuadratureRule rule = gauss_normal_rule(64);
        const double mean = fit.mean();
        const double sd = std::sqrt(fit.variance());
        double bits = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double x = std::max(mean + sd * rule.nodes[j], -0.5);
            bits += rule.weights[j] * std::log1p(x);
        }
        out.bits = bits * kInvLn2;
        out.nodes = 64;
        out.method = RateMethod::GaussianApprox;
        return out;
    }

    int n = 64;
    double prev = laguerre_rate(fit, n);
    for (int pass = 0; pass < 5; ++pass) {
        n *= 2;
        const double next = laguerre_rate(fit, n);
        if (std::abs(next - prev) < 1e-9) {
            out.bits = next;
            out.nodes = n;
            return out;
        }
        prev = next;
    }

    // The node doubling stalled: Gamma mass sits at the branch-point scale
    // 1/theta. Split off the exact logarithmic part.
    out.bits = (std::log(fit.scale) + digamma(fit.shape) +
                log_remainder(fit.shape, 1.0 / fit.scale)) *
               kInvLn2;
    out.nodes = 0;
    out.method = RateMethod::LogSplit;
    return out;
}

double gamma_cdf(const GammaFit& fit, double x) {
    check_fit(fit);
    if (x <= 0.0) return 0.0;
    return regularized_lower_gamma(fit.shape, x / fit.scale);
}

} // namespace irsim
