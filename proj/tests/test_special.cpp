// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "irsim/special.hpp"
#include "irsim/errors.hpp"

using namespace irsim;

TEST_CASE("log_gamma tracks the standard library implementation") {
    for (double x : {1e-3, 0.1, 0.5, 1.0, 1.5, 2.0, 7.3, 42.0, 171.0, 1e4}) {
        CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-2.5), DomainError);
}

TEST_CASE("P(1, x) equals the exponential CDF") {
    for (double x : {0.5, 1.0, 2.0}) {
        CHECK(std::abs(regularized_lower_gamma(1.0, x) - (1.0 - std::exp(-x))) < 1e-10);
    }
}

TEST_CASE("P(k, 0) = 0 and limits") {
    for (double k : {0.3, 1.0, 7.0, 312.0}) {
        CHECK(regularized_lower_gamma(k, 0.0) == 0.0);
        CHECK(regularized_upper_gamma(k, 0.0) == 1.0);
    }
}

TEST_CASE("P(1/2, x) = erf(sqrt(x))") {
    CHECK(std::abs(regularized_lower_gamma(0.5, 1.0) - 0.842700792949715) < 1e-10);
    for (double x : {0.01, 0.2, 0.7, 1.0, 2.5, 9.0, 30.0}) {
        CHECK(std::abs(regularized_lower_gamma(0.5, x) - std::erf(std::sqrt(x))) < 1e-10);
    }
}

TEST_CASE("P and Q are complementary and monotone") {
    for (double k : {0.5, 1.7, 23.0, 400.0}) {
        double prev = -1.0;
        for (double x = 0.0; x < 4.0 * k + 20.0; x += 0.25 * k + 0.1) {
            const double p = regularized_lower_gamma(k, x);
            const double q = regularized_upper_gamma(k, x);
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
            CHECK(p + q == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(p >= prev);
            prev = p;
        }
    }
}

TEST_CASE("incomplete gamma rejects bad domains") {
    CHECK_THROWS_AS(regularized_lower_gamma(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(regularized_lower_gamma(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(regularized_lower_gamma(1.0, -0.5), DomainError);
}
