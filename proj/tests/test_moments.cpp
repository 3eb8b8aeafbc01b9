// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "irsim/rng.hpp"
#include "irsim/snr_moments.hpp"
#include "support/oracles.hpp"

using namespace irsim;

namespace {

PhaseVector random_phases(int n, int bits, std::uint64_t seed, double amplitude = 1.0) {
    rng::Engine eng(seed);
    std::vector<int> levels(static_cast<std::size_t>(n));
    for (int& l : levels) l = static_cast<int>(eng.uniform_int(1ull << bits));
    return PhaseVector::quantized(std::move(levels), bits, amplitude);
}

// |analytic - mc| within max(4 se, 3% relative)
void check_term(double analytic, const test::Estimate& mc, const char* name) {
    INFO(name, ": analytic=", analytic, " mc=", mc.mean, " se=", mc.se);
    const double diff = std::abs(analytic - mc.mean);
    const bool ok = diff <= 4.0 * mc.se || diff <= 0.03 * std::abs(analytic);
    CHECK(ok);
}

} // namespace

TEST_CASE("mean_snr closed form") {
    SUBCASE("Rayleigh mean is phase independent") {
        const SystemConfig cfg = test::rayleigh_config(2, 6);
        const double expected =
            cfg.transmit_snr * cfg.antennas *
            (cfg.sd.total_power() + cfg.elements * cfg.sr.total_power() * cfg.rd.total_power());
        for (std::uint64_t s = 0; s < 5; ++s) {
            const double m = mean_snr(cfg, random_phases(6, 3, s));
            CHECK(m == doctest::Approx(expected).epsilon(1e-12));
        }
    }
    SUBCASE("single element substitution") {
        SystemConfig cfg = test::reference_config(3, 1);
        const PhaseVector v = PhaseVector::quantized({1}, 2, 1.0); // theta = pi/2
        const double nu_re = 0.0;
        const double expected =
            cfg.transmit_snr * cfg.antennas *
            (cfg.sd.total_power() + 2.0 * cfg.sd.mean * cfg.sr.mean * cfg.rd.mean * nu_re +
             cfg.sr.total_power() * cfg.rd.total_power());
        CHECK(mean_snr(cfg, v) == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("dimension mismatch is rejected") {
        const SystemConfig cfg = test::reference_config(2, 4);
        CHECK_THROWS_AS(mean_snr(cfg, PhaseVector::zero_quantized(3, 3)), ConfigError);
    }
}

TEST_CASE("moment term spot values") {
    SUBCASE("E[A^2] for unit-power Rayleigh single antenna") {
        SystemConfig cfg = test::reference_config(1, 1);
        cfg.sd = link_stats({1.0, 4.0, 0.0});
        const MomentTerms t = moment_terms(cfg, PhaseVector::zero_quantized(1, 1));
        CHECK(t.a_sq == doctest::Approx(2.0).epsilon(1e-12)); // E[X^2] = 2 for X ~ Exp(1)
    }
    SUBCASE("E[A C1] factorizes by independence") {
        const SystemConfig cfg = test::reference_config(3, 7);
        const MomentTerms t = moment_terms(cfg, random_phases(7, 3, 4));
        const double m = cfg.antennas, n = cfg.elements;
        const double expected = m * m * n * cfg.sd.total_power() * cfg.sr.total_power() *
                                cfg.rd.total_power();
        CHECK(t.ac1 == doctest::Approx(expected).epsilon(1e-12));
        CHECK(t.ac1 == doctest::Approx(t.a * t.c1).epsilon(1e-12));
    }
    SUBCASE("Jensen: E[A^2] >= E[A]^2") {
        const SystemConfig cfg = test::reference_config(4, 9);
        const MomentTerms t = moment_terms(cfg, random_phases(9, 3, 5));
        CHECK(t.a_sq >= t.a * t.a);
        CHECK(t.c1_sq >= 0.0);
    }
}

TEST_CASE("every closed-form term matches its Monte Carlo estimate") {
    // reference setup, plus an amplitude < 1 variant to pin the alpha terms
    struct Case {
        SystemConfig cfg;
        double amplitude;
        std::size_t samples;
    };
    SystemConfig small = test::reference_config(3, 5);
    small.sd = link_stats({1.2, 1.0, 2.0});
    small.sr = link_stats({0.9, 1.0, 3.0});
    small.rd = link_stats({1.1, 1.0, 1.5});
    small.transmit_snr = 1.0;
    small.amplitude = 0.8;

    SystemConfig ref = test::reference_config(4, 20);

    for (const Case& c : {Case{ref, 1.0, 1'000'000}, Case{small, 0.8, 400'000}}) {
        SystemConfig cfg = c.cfg;
        cfg.amplitude = c.amplitude;
        const PhaseVector phases = random_phases(cfg.elements, cfg.bits, 12345, c.amplitude);
        const MomentTerms t = moment_terms(cfg, phases);
        const test::TermEstimates mc = test::estimate_terms(cfg, phases, c.samples, 777);

        check_term(t.a, mc.a, "E[A]");
        check_term(t.b.real(), mc.b_re, "Re E[B]");
        check_term(t.c1, mc.c1, "E[C1]");
        check_term(t.c2, mc.c2, "E[C2]");
        check_term(t.a_sq, mc.a_sq, "E[A^2]");
        check_term(t.b_sq.real(), mc.b_sq_re, "Re E[B^2]");
        check_term(t.c1_sq, mc.c1_sq, "E[C1^2]");
        check_term(t.c2_sq, mc.c2_sq, "E[C2^2]");
        check_term(t.ab.real(), mc.ab_re, "Re E[AB]");
        check_term(t.ac1, mc.ac1, "E[A C1]");
        check_term(t.ac2, mc.ac2, "E[A C2]");
        check_term(t.abs_b_sq, mc.abs_b_sq, "E[|B|^2]");
        check_term(t.bc1.real(), mc.bc1_re, "Re E[B C1]");
        check_term(t.bc2.real(), mc.bc2_re, "Re E[B C2]");
        check_term(t.c1c2, mc.c1c2, "E[C1 C2]");
        check_term(mean_snr(cfg, phases), mc.snr_mean, "E[gamma]");
        check_term(second_moment_snr(cfg, phases), mc.snr_sq, "E[gamma^2]");
    }
}

TEST_CASE("second moment dominates squared mean") {
    rng::Engine eng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 1 + static_cast<int>(eng.uniform_int(4));
        const int n = 1 + static_cast<int>(eng.uniform_int(24));
        SystemConfig cfg = test::reference_config(m, n);
        const PhaseVector phases = random_phases(n, 3, 100 + trial);
        const double m1 = mean_snr(cfg, phases);
        const double m2 = second_moment_snr(cfg, phases);
        CHECK(m2 >= m1 * m1);
    }
}

TEST_CASE("gamma_fit algebra and failure modes") {
    const GammaFit f1 = gamma_fit(2.0, 6.0);
    CHECK(f1.shape == doctest::Approx(2.0));
    CHECK(f1.scale == doctest::Approx(1.0));

    const GammaFit f2 = gamma_fit(1.0, 2.0);
    CHECK(f2.shape == doctest::Approx(1.0));
    CHECK(f2.scale == doctest::Approx(1.0));

    CHECK_THROWS_AS(gamma_fit(5.0, 25.0), DegenerateVarianceError);
    CHECK_THROWS_AS(gamma_fit(-1.0, 2.0), DomainError);
    CHECK_THROWS_AS(gamma_fit(0.0, 2.0), DomainError);
}

TEST_CASE("fit preserves the matched moments") {
    for (int n : {4, 16, 40}) {
        const SystemConfig cfg = test::reference_config(2, n);
        const PhaseVector phases = random_phases(n, 3, 55);
        const double m1 = mean_snr(cfg, phases);
        const double m2 = second_moment_snr(cfg, phases);
        const GammaFit fit = gamma_fit(m1, m2);
        CHECK(fit.mean() == doctest::Approx(m1).epsilon(1e-12));
        CHECK(fit.variance() == doctest::Approx(m2 - m1 * m1).epsilon(1e-12));
    }
}

TEST_CASE("global rotation only moves the Re(s1) coupling") {
    const SystemConfig cfg = test::reference_config(2, 8);
    std::vector<double> angles(8);
    rng::Engine eng(31);
    for (double& a : angles) a = eng.uniform(0.0, 2 * std::numbers::pi);

    const MomentTerms base = moment_terms(cfg, PhaseVector::continuous(angles, 1.0));
    std::vector<double> rotated = angles;
    for (double& a : rotated) a += 1.1;
    const MomentTerms rot = moment_terms(cfg, PhaseVector::continuous(rotated, 1.0));

    // s2-coupled (rotation invariant) terms stay put
    CHECK(rot.c2 == doctest::Approx(base.c2).epsilon(1e-10));
    CHECK(rot.ac2 == doctest::Approx(base.ac2).epsilon(1e-10));
    CHECK(rot.c1c2 == doctest::Approx(base.c1c2).epsilon(1e-10));
    CHECK(rot.c2_sq == doctest::Approx(base.c2_sq).epsilon(1e-10));
    // s1-coupled terms move
    CHECK(rot.b.real() != doctest::Approx(base.b.real()).epsilon(1e-12));
}
