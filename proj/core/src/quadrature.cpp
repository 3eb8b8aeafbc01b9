// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#include "irsim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "irsim/errors.hpp"

namespace irsim {

namespace {

// Golub-Welsch: eigenvalues of the symmetric tridiagonal Jacobi matrix are
// the Gauss nodes; the squared first eigenvector components are the weights
// of the (normalized) orthogonality measure. Implicit-shift QL iteration
// tracking only the first row of the accumulated transform.
QuadratureRule golub_welsch(std::vector<double> d, std::vector<double> e) {
    const int n = static_cast<int>(d.size());
    std::vector<double> z(n, 0.0);
    z[0] = 1.0;
    e.push_back(0.0); // e[i] couples d[i] and d[i+1]; sentinel simplifies loops

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == 64) throw DomainError("golub_welsch: QL iteration failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&d](int a, int b) { return d[a] < d[b]; });

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int j = 0; j < n; ++j) {
        rule.nodes[j] = d[order[j]];
        rule.weights[j] = z[order[j]] * z[order[j]];
    }
    return rule;
}

} // namespace

QuadratureRule gauss_gamma_rule(double shape, int n) {
    if (!(shape > 0.0)) throw DomainError("gauss_gamma_rule requires shape > 0");
    if (n < 1) throw DomainError("gauss_gamma_rule requires n >= 1");
    // Jacobi matrix of the generalized Laguerre polynomials with
    // alpha = shape - 1: a_i = 2i + shape, b_i = sqrt(i (i + shape - 1)).
    std::vector<double> diag(n), off(std::max(0, n - 1));
    for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + shape;
    for (int i = 1; i < n; ++i) off[i - 1] = std::sqrt(i * (i + shape - 1.0));
    return golub_welsch(std::move(diag), std::move(off));
}

QuadratureRule gauss_normal_rule(int n) {
    if (n < 1) throw DomainError("gauss_normal_rule requires n >= 1");
    // Probabilists' Hermite: a_i = 0, b_i = sqrt(i).
    std::vector<double> diag(n, 0.0), off(std::max(0, n - 1));
    for (int i = 1; i < n; ++i) off[i - 1] = std::sqrt(static_cast<double>(i));
    return golub_welsch(std::move(diag), std::move(off));
}

} // namespace irsim
