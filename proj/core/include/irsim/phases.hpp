// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#pragma once

#include <complex>
#include <vector>

#include "irsim/errors.hpp"

namespace irsim {

/// The ordered set of angles available with b quantization bits:
/// {0, 2pi/2^b, ..., (2^b - 1) * 2pi / 2^b}.
std::vector<double> phase_set(int bits);

/// IRS reflection pattern. Quantized vectors store integer levels in
/// [0, 2^b - 1] (angle = level * 2pi / 2^b); continuous vectors store angles
/// in [0, 2pi). Every reflection coefficient is nu_i = alpha * e^{j theta_i}.
class PhaseVector {
public:
    PhaseVector() = default;

    static PhaseVector quantized(std::vector<int> levels, int bits, double amplitude = 1.0);
    static PhaseVector continuous(std::vector<double> angles, double amplitude = 1.0);

    /// All levels zero (theta = 0 everywhere).
    static PhaseVector zero_quantized(int n, int bits, double amplitude = 1.0);
    static PhaseVector zero_continuous(int n, double amplitude = 1.0);

    bool is_quantized() const { return bits_ > 0; }
    int bits() const { return bits_; }
    int size() const { return static_cast<int>(is_quantized() ? levels_.size() : angles_.size()); }
    double amplitude() const { return amplitude_; }

    const std::vector<int>& levels() const;
    std::vector<double> angles() const;

    /// Reflection coefficients nu_i = alpha * e^{j theta_i}.
    std::vector<std::complex<double>> coefficients() const;

    /// Nearest-level quantization of a continuous vector (angles reduced
    /// mod 2pi first). Quantized inputs are re-quantized to the new b.
    PhaseVector quantize(int bits) const;

    bool operator==(const PhaseVector&) const = default;

private:
    std::vector<int> levels_;
    std::vector<double> angles_;
    int bits_ = 0; // 0 means continuous
    double amplitude_ = 1.0;
};

} // namespace irsim
