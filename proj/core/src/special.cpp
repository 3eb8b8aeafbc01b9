// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#include "irsim/special.hpp"

#include <cmath>
#include <limits>

#include "irsim/errors.hpp"

namespace irsim {

namespace {

// Lanczos-class coefficients (g = 5.2421875, 14 terms).
constexpr double kLanczos[14] = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   0.339946499848118887e-4, 0.465236289270485756e-4,
    -0.983744753048795646e-4, 0.158088703224912494e-3, -0.210264441724104883e-3,
    0.217439618115212643e-3, -0.164318106536763890e-3, 0.844182239838527433e-4,
    -0.261908384015814087e-4, 0.368991826595316234e-5};

// Lower-tail series: P(k, x) = x^k e^{-x} / Gamma(k+1) * sum_n x^n / (k+1)...(k+n).
double lower_series(double k, double x) {
    double ap = k;
    double del = 1.0 / k;
    double sum = del;
    for (int i = 0; i < 10'000'000; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * std::numeric_limits<double>::epsilon())
            return sum * std::exp(-x + k * std::log(x) - log_gamma(k));
    }
    throw DomainError("regularized_lower_gamma: series failed to converge");
}

// Upper-tail Lentz continued fraction for Q(k, x).
double upper_cf(double k, double x) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double fpmin = std::numeric_limits<double>::min() / eps;
    double b = x + 1.0 - k;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10'000'000; ++i) {
        const double an = -i * (i - k);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) <= eps)
            return std::exp(-x + k * std::log(x) - log_gamma(k)) * h;
    }
    throw DomainError("regularized_upper_gamma: continued fraction failed to converge");
}

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
    double y = x;
    double tmp = x + 5.24218750000000000;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = 0.999999999999997092;
    for (double c : kLanczos) ser += c / ++y;
    return tmp + std::log(2.5066282746310005 * ser / x);
}

double regularized_lower_gamma(double k, double x) {
    if (!(k > 0.0) || std::isnan(x)) throw DomainError("regularized_lower_gamma requires k > 0");
    if (x < 0.0) throw DomainError("regularized_lower_gamma requires x >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    return x < k + 1.0 ? lower_series(k, x) : 1.0 - upper_cf(k, x);
}

double regularized_upper_gamma(double k, double x) {
    if (!(k > 0.0) || std::isnan(x)) throw DomainError("regularized_upper_gamma requires k > 0");
    if (x < 0.0) throw DomainError("regularized_upper_gamma requires x >= 0");
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    return x < k + 1.0 ? 1.0 - lower_series(k, x) : upper_cf(k, x);
}

double digamma(double x) {
    if (!(x > 0.0)) throw DomainError("digamma requires x > 0");
    double result = 0.0;
    while (x < 6.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // asymptotic expansion, |error| < 1e-14 for x >= 6
    result += std::log(x) - 0.5 * inv -
              inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 / 240)));
    return result;
}

} // namespace irsim
