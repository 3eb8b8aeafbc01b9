// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#include "irsim/snr_moments.hpp"

#include <cmath>

namespace irsim {

namespace {

// Scalar moments of x ~ CN(mu, sigma^2) with real mu:
//   E[|x|^2] = mu^2 + sigma^2
//   E[|x|^2 x] = mu (mu^2 + 2 sigma^2)
//   E[|x|^4] = mu^4 + 4 mu^2 sigma^2 + 2 sigma^4
struct LinkMoments {
    double mu;      // mean
    double var;     // sigma^2
    double omega;   // total power mu^2 + sigma^2
    double p;       // mu^2 + 2 sigma^2
    double m4;      // E[|x|^4]

    explicit LinkMoments(const LinkStats& s)
        : mu(s.mean),
          var(s.variance),
          omega(s.mean * s.mean + s.variance),
          p(s.mean * s.mean + 2.0 * s.variance),
          m4(std::pow(s.mean, 4) + 4.0 * s.mean * s.mean * s.variance +
             2.0 * s.variance * s.variance) {}

    double mu2() const { return mu * mu; }
    double mu4() const { return mu2() * mu2(); }
};

void check_dimensions(const SystemConfig& config, const PhaseVector& phases) {
    config.validate();
    if (phases.size() != config.elements)
        throw ConfigError("phase vector length " + std::to_string(phases.size()) +
                          " does not match element count " + std::to_string(config.elements));
}

} // namespace

PhaseSums phase_sums(const PhaseVector& phases) {
    const auto nu = phases.coefficients();
    const auto n = static_cast<double>(nu.size());
    const double alpha2 = phases.amplitude() * phases.amplitude();

    PhaseSums s;
    for (const cplx& v : nu) s.s1 += v;
    const double abs_s1_sq = std::norm(s.s1);
    const double sum_abs2 = n * alpha2;
    s.s2 = abs_s1_sq - sum_abs2;
    s.s3 = (n - 2.0) * abs_s1_sq + sum_abs2;
    s.s4 = s.s3;
    s.s5 = (n - 1.0) * s.s1;
    return s;
}

MomentTerms moment_terms(const SystemConfig& config, const PhaseVector& phases) {
    check_dimensions(config, phases);

    const LinkMoments h(config.sd); // BS <- user direct
    const LinkMoments g(config.sr); // BS <- IRS
    const LinkMoments r(config.rd); // IRS <- user

    const double m = config.antennas;
    const double n = config.elements;
    const double alpha2 = phases.amplitude() * phases.amplitude();
    const double alpha4 = alpha2 * alpha2;
    const PhaseSums s = phase_sums(phases);

    MomentTerms t;

    // First-moment terms.
    t.a = m * h.omega;
    t.b = m * h.mu * g.mu * r.mu * s.s1;
    t.c1 = m * n * g.omega * r.omega;
    t.c2 = m * g.mu2() * r.mu2() * s.s2;

    // E[A^2]: M iid |h|^2 terms.
    t.a_sq = m * h.m4 + m * (m - 1.0) * h.omega * h.omega;

    // E[B^2]: circular noise kills every second-order noise product, only the
    // means survive.
    const double mu_prod = h.mu * g.mu * r.mu;
    t.b_sq = m * m * mu_prod * mu_prod * s.s1 * s.s1;

    // E[C1^2]: split over shared antenna row / shared element column.
    t.c1_sq = m * n * g.m4 * r.m4 + m * n * (n - 1.0) * g.omega * g.omega * r.omega * r.omega +
              m * (m - 1.0) * n * g.omega * g.omega * r.m4 +
              m * (m - 1.0) * n * (n - 1.0) * g.omega * g.omega * r.omega * r.omega;

    // E[C2^2]: index-coincidence patterns between the two (i, k != i) pairs.
    //   swapped pair (i'=k, k'=i):   |nu_i|^2 |nu_k|^2 -> N(N-1) alpha^4
    //   one shared index (4 ways):   collapses to alpha^2 * s2 sums
    //   everything else:             means only, nu-sum s2^2 minus overlaps
    const double pair_count = n * (n - 1.0) * alpha4;
    const double shared_sum = 2.0 * (n - 2.0) * alpha2 * s.s2;
    t.c2_sq = m * m * g.mu4() * r.mu4() * (s.s2 * s.s2 - pair_count - shared_sum) +
              m * pair_count * r.omega * r.omega * (g.omega * g.omega + (m - 1.0) * g.mu4()) +
              m * shared_sum * r.mu2() * r.omega * g.mu2() * (g.omega + (m - 1.0) * g.mu2());

    // E[AB]: one antenna shares the |h|^2 factor with the conj(h) in B.
    t.ab = m * mu_prod * (m * h.omega + h.var) * s.s1;

    // A independent of C1 and of C2.
    t.ac1 = m * m * n * h.omega * g.omega * r.omega;
    t.ac2 = m * m * h.omega * g.mu2() * r.mu2() * s.s2;

    // E[|B|^2].
    t.abs_b_sq = m * n * alpha2 * r.omega * (h.omega * g.omega + (m - 1.0) * h.mu2() * g.mu2()) +
                 m * g.mu2() * r.mu2() * s.s2 * (h.var + m * h.mu2());

    // E[B C1].
    t.bc1 = m * mu_prod *
            (g.p * r.p + (n - 1.0) * g.omega * r.omega + (m - 1.0) * g.omega * r.p +
             (m - 1.0) * (n - 1.0) * g.omega * r.omega) *
            s.s1;

    // E[B C2]: the i=l collapse contributes alpha^2 s5, the rest rides on s1 s2.
    t.bc2 = m * mu_prod *
            ((g.var * r.omega + m * g.mu2() * r.var) * alpha2 * s.s5 +
             m * g.mu2() * r.mu2() * s.s1 * s.s2);

    // E[C1 C2]: the shared-row element of C1 can meet either side of the C2 pair.
    t.c1c2 = m * g.mu2() * r.mu2() * s.s2 *
             (2.0 * g.p * r.p + (n - 2.0) * g.omega * r.omega + 2.0 * (m - 1.0) * g.omega * r.p +
              (m - 1.0) * (n - 2.0) * g.omega * r.omega);

    return t;
}

double mean_snr(const SystemConfig& config, const PhaseVector& phases) {
    check_dimensions(config, phases);
    const MomentTerms t = moment_terms(config, phases);
    const double alpha2 = config.amplitude * config.amplitude;
    return config.transmit_snr * (t.a + 2.0 * t.b.real() + alpha2 * t.c1 + t.c2);
}

double second_moment_snr(const SystemConfig& config, const PhaseVector& phases) {
    check_dimensions(config, phases);
    const MomentTerms t = moment_terms(config, phases);
    const double alpha2 = config.amplitude * config.amplitude;
    const double alpha4 = alpha2 * alpha2;
    const double sum = t.a_sq + 2.0 * t.b_sq.real() + alpha4 * t.c1_sq + t.c2_sq +
                       4.0 * t.ab.real() + 2.0 * alpha2 * t.ac1 + 2.0 * t.ac2 +
                       2.0 * t.abs_b_sq + 4.0 * alpha2 * t.bc1.real() + 4.0 * t.bc2.real() +
                       2.0 * alpha2 * t.c1c2;
    return config.transmit_snr * config.transmit_snr * sum;
}

GammaFit gamma_fit(double m1, double m2) {
    if (!(m1 > 0.0) || !std::isfinite(m1) || !std::isfinite(m2))
        throw DomainError("gamma_fit requires a positive finite first moment");
    const double variance = m2 - m1 * m1;
    if (!(variance > 0.0))
        throw DegenerateVarianceError("gamma_fit: second moment " + std::to_string(m2) +
                                      " <= squared mean, distribution collapsed");
    return GammaFit{m1 * m1 / variance, variance / m1};
}

GammaFit fit_snr_distribution(const SystemConfig& config, const PhaseVector& phases) {
    return gamma_fit(mean_snr(config, phases), second_moment_snr(config, phases));
}

} // namespace irsim
