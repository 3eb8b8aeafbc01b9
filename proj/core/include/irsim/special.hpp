// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#pragma once

namespace irsim {

/// log Gamma(x) for x > 0, Lanczos-class approximation, relative error
/// below 1e-10 over the full domain.
double log_gamma(double x);

/// Regularized lower incomplete gamma P(k, x) = gamma(k, x) / Gamma(k),
/// absolute accuracy <= 1e-10. Series expansion for x < k+1, Lentz
/// continued fraction otherwise. Requires k > 0, x >= 0.
double regularized_lower_gamma(double k, double x);

/// Q(k, x) = 1 - P(k, x).
double regularized_upper_gamma(double k, double x);

/// Digamma psi(x) for x > 0: upward recurrence into the asymptotic regime.
double digamma(double x);

} // namespace irsim
