// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#include "irsim/rng.hpp"

#include <cmath>
#include <numbers>

namespace irsim::rng {

std::pair<double, double> Stream::normal_pair(std::uint64_t counter) const {
    const double u1 = uniform01(counter);
    const double u2 = uniform01(counter + 1);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

std::complex<double> Stream::complex_normal(std::uint64_t index) const {
    auto [a, b] = normal_pair(2 * index);
    // N(0,1) pair scaled so that E[|z|^2] = 1.
    constexpr double kInvSqrt2 = 0.70710678118654752440;
    return {a * kInvSqrt2, b * kInvSqrt2};
}

} // namespace irsim::rng
