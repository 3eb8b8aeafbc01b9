// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "irsim/phases.hpp"
#include "irsim/rng.hpp"
#include "irsim/snr_moments.hpp"
#include "support/oracles.hpp"

using namespace irsim;
constexpr double kPi = std::numbers::pi;

TEST_CASE("phase_set enumerates the quantized angles in order") {
    CHECK(phase_set(1) == std::vector<double>{0.0, kPi});
    const auto b2 = phase_set(2);
    REQUIRE(b2.size() == 4);
    CHECK(b2[1] == doctest::Approx(kPi / 2));
    CHECK(b2[3] == doctest::Approx(3 * kPi / 2));

    const auto b5 = phase_set(5);
    REQUIRE(b5.size() == 32);
    CHECK(b5.back() == doctest::Approx(31.0 * kPi / 16.0));
    for (std::size_t i = 1; i < b5.size(); ++i) CHECK(b5[i] > b5[i - 1]);

    CHECK_THROWS_AS(phase_set(0), DomainError);
}

TEST_CASE("PhaseVector level/angle round trips") {
    const PhaseVector q = PhaseVector::quantized({0, 1, 2, 3}, 2, 0.9);
    const auto angles = q.angles();
    CHECK(angles[1] == doctest::Approx(kPi / 2));
    const auto nu = q.coefficients();
    CHECK(std::abs(nu[3] - std::polar(0.9, 3 * kPi / 2)) < 1e-15);

    const PhaseVector c = PhaseVector::continuous({0.1, 5.2}, 1.0);
    CHECK_FALSE(c.is_quantized());
    CHECK_THROWS_AS(c.levels(), DomainError);
    const PhaseVector cq = c.quantize(3);
    CHECK(cq.levels()[0] == 0);           // 0.1 rad rounds to level 0
    CHECK(cq.levels()[1] == 7);           // 5.2 rad ~ 6.02 * (2pi/8)

    CHECK_THROWS_AS(PhaseVector::quantized({4}, 2), DomainError);
    CHECK_THROWS_AS(PhaseVector::quantized({-1}, 2), DomainError);
}

TEST_CASE("phase_sums identities on canonical cases") {
    SUBCASE("all-zero phases, N = 4") {
        const PhaseSums s = phase_sums(PhaseVector::zero_quantized(4, 3, 1.0));
        CHECK(s.s1 == std::complex<double>(4.0, 0.0));
        CHECK(s.s2 == doctest::Approx(12.0));
        CHECK(s.s3 == doctest::Approx(36.0));
        CHECK(s.s4 == doctest::Approx(36.0));
        CHECK(s.s5.real() == doctest::Approx(12.0));
    }
    SUBCASE("single element collapses the excluded-index sums") {
        const PhaseVector v = PhaseVector::quantized({3}, 2, 0.7);
        const PhaseSums s = phase_sums(v);
        CHECK(std::abs(s.s1 - v.coefficients()[0]) < 1e-15);
        CHECK(s.s2 == doctest::Approx(0.0));
        CHECK(s.s3 == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(s.s4 == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(std::abs(s.s5) < 1e-15);
    }
}

TEST_CASE("closed identities equal the defining nested sums") {
    rng::Engine eng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(eng.uniform_int(12));
        const double alpha = eng.uniform(0.3, 1.0);
        std::vector<double> angles(n);
        for (double& a : angles) a = eng.uniform(0.0, 2 * kPi);
        const PhaseVector v = PhaseVector::continuous(angles, alpha);

        const PhaseSums s = phase_sums(v);
        const test::BruteSums b = test::brute_phase_sums(v.coefficients());
        CHECK(std::abs(s.s1 - b.s1) < 1e-10);
        CHECK(std::abs(s.s2 - b.s2.real()) < 1e-10);
        CHECK(std::abs(b.s2.imag()) < 1e-10);
        CHECK(std::abs(s.s3 - b.s3.real()) < 1e-10);
        CHECK(std::abs(s.s4 - b.s4.real()) < 1e-10);
        CHECK(std::abs(s.s5 - b.s5) < 1e-10);
    }
}

TEST_CASE("global phase rotation leaves s2, s3, s4 unchanged") {
    rng::Engine eng(17);
    std::vector<double> angles(9);
    for (double& a : angles) a = eng.uniform(0.0, 2 * kPi);
    const PhaseSums base = phase_sums(PhaseVector::continuous(angles, 1.0));

    for (double shift : {0.3, 1.7, 4.9}) {
        std::vector<double> rotated = angles;
        for (double& a : rotated) a = std::fmod(a + shift, 2 * kPi);
        const PhaseSums s = phase_sums(PhaseVector::continuous(rotated, 1.0));
        CHECK(s.s2 == doctest::Approx(base.s2).epsilon(1e-10));
        CHECK(s.s3 == doctest::Approx(base.s3).epsilon(1e-10));
        CHECK(s.s4 == doctest::Approx(base.s4).epsilon(1e-10));
        CHECK(std::abs(s.s1) == doctest::Approx(std::abs(base.s1)).epsilon(1e-10));
        // only the argument of s1 moves
        CHECK(s.s1.real() != doctest::Approx(base.s1.real()).epsilon(1e-12));
    }
}
