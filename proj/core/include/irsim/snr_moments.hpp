// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#pragma once

#include <complex>

#include "irsim/channel.hpp"
#include "irsim/phases.hpp"

namespace irsim {

/// Sums over the reflection coefficients nu_i = alpha * e^{j theta_i} that
/// appear in the closed-form SNR moments:
///   s1 = sum_i nu_i
///   s2 = sum_i sum_{k != i} conj(nu_i) nu_k               (real)
///   s3 = sum_i sum_{k != i} sum_{w != k} conj(nu_i) nu_w  (real)
///   s4 = sum_i sum_{k != i} sum_{v != i} nu_k conj(nu_v)  (real)
///   s5 = sum_i sum_{w != i} nu_w
/// Computed via the O(N) identities s2 = |s1|^2 - N alpha^2,
/// s3 = s4 = (N-2)|s1|^2 + N alpha^2, s5 = (N-1) s1; the defining nested
/// sums are kept as test oracles.
struct PhaseSums {
    cplx s1{};
    double s2 = 0.0;
    double s3 = 0.0;
    double s4 = 0.0;
    cplx s5{};
};

PhaseSums phase_sums(const PhaseVector& phases);

/// Expectations of the terms in the decomposition of the combined receive
/// power ||h_sd + H_sr diag(nu) h_rd||^2 = A + 2 Re(B) + alpha^2 C1 + C2,
/// where (j runs over antennas, i/k over IRS elements)
///   A  = sum_j |h_sd_j|^2
///   B  = sum_{j,i} conj(h_sd_j) h_sr_ji h_rd_i nu_i
///   C1 = sum_{j,i} |h_sr_ji|^2 |h_rd_i|^2
///   C2 = sum_j sum_i sum_{k != i} conj(h_sr_ji h_rd_i nu_i) h_sr_jk h_rd_k nu_k.
/// All values are exact under independent Rician fading with real means.
struct MomentTerms {
    // first-moment terms
    double a = 0.0;  // E[A]
    cplx b{};        // E[B]
    double c1 = 0.0; // E[C1]
    double c2 = 0.0; // E[C2]
    // second-moment terms
    double a_sq = 0.0;     // E[A^2]
    cplx b_sq{};           // E[B^2]
    double c1_sq = 0.0;    // E[C1^2]
    double c2_sq = 0.0;    // E[C2^2]
    cplx ab{};             // E[A B]
    double ac1 = 0.0;      // E[A C1]
    double ac2 = 0.0;      // E[A C2]
    double abs_b_sq = 0.0; // E[|B|^2]
    cplx bc1{};            // E[B C1]
    cplx bc2{};            // E[B C2]
    double c1c2 = 0.0;     // E[C1 C2]
};

MomentTerms moment_terms(const SystemConfig& config, const PhaseVector& phases);

/// First moment E[gamma] of the end-to-end SNR, linear scale.
double mean_snr(const SystemConfig& config, const PhaseVector& phases);

/// Second moment E[gamma^2], combining the terms of moment_terms() with the
/// coefficients of the squared decomposition.
double second_moment_snr(const SystemConfig& config, const PhaseVector& phases);

/// Gamma distribution fitted to (E[gamma], E[gamma^2]) by moment matching:
/// k = m1^2 / (m2 - m1^2), theta = (m2 - m1^2) / m1.
struct GammaFit {
    double shape = 1.0; // k_mom
    double scale = 1.0; // theta_mom, linear SNR units

    double mean() const { return shape * scale; }
    double variance() const { return shape * scale * scale; }
};

GammaFit gamma_fit(double m1, double m2);

/// Convenience chain: gamma_fit(mean_snr, second_moment_snr).
GammaFit fit_snr_distribution(const SystemConfig& config, const PhaseVector& phases);

} // namespace irsim
