// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#pragma once

#include <vector>

namespace irsim {

/// Nodes and weights of a Gauss rule against a probability measure
/// (weights sum to 1), so that E[f(X)] ~ sum_j w_j f(x_j).
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss rule for the Gamma(shape, 1) probability density
/// x^{shape-1} e^{-x} / Gamma(shape) on (0, inf); generalized
/// Gauss-Laguerre nodes via Golub-Welsch.
QuadratureRule gauss_gamma_rule(double shape, int n);

/// Gauss-Hermite rule for the standard normal N(0,1) probability density.
QuadratureRule gauss_normal_rule(int n);

} // namespace irsim
