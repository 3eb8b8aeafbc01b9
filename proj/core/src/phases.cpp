// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#include "irsim/phases.hpp"

#include <cmath>
#include <numbers>

namespace irsim {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::vector<double> phase_set(int bits) {
    if (bits < 1) throw DomainError("phase_set requires b >= 1");
    if (bits > 20) throw DomainError("phase_set: b > 20 is not supported");
    const int count = 1 << bits;
    std::vector<double> angles(count);
    for (int l = 0; l < count; ++l) angles[l] = kTwoPi * l / count;
    return angles;
}

PhaseVector PhaseVector::quantized(std::vector<int> levels, int bits, double amplitude) {
    if (bits < 1) throw DomainError("quantized phase vector requires b >= 1");
    if (!(amplitude >= 0.0 && amplitude <= 1.0)) throw DomainError("amplitude must be in [0,1]");
    const int max_level = (1 << bits) - 1;
    for (int l : levels)
        if (l < 0 || l > max_level)
            throw DomainError("phase level " + std::to_string(l) + " outside [0, " +
                              std::to_string(max_level) + "]");
    PhaseVector v;
    v.levels_ = std::move(levels);
    v.bits_ = bits;
    v.amplitude_ = amplitude;
    return v;
}

PhaseVector PhaseVector::continuous(std::vector<double> angles, double amplitude) {
    if (!(amplitude >= 0.0 && amplitude <= 1.0)) throw DomainError("amplitude must be in [0,1]");
    PhaseVector v;
    v.angles_ = std::move(angles);
    v.bits_ = 0;
    v.amplitude_ = amplitude;
    return v;
}

PhaseVector PhaseVector::zero_quantized(int n, int bits, double amplitude) {
    return quantized(std::vector<int>(static_cast<std::size_t>(n), 0), bits, amplitude);
}

PhaseVector PhaseVector::zero_continuous(int n, double amplitude) {
    return continuous(std::vector<double>(static_cast<std::size_t>(n), 0.0), amplitude);
}

const std::vector<int>& PhaseVector::levels() const {
    if (!is_quantized()) throw DomainError("continuous phase vector has no levels");
    return levels_;
}

std::vector<double> PhaseVector::angles() const {
    if (!is_quantized()) return angles_;
    std::vector<double> a(levels_.size());
    const double step = kTwoPi / (1 << bits_);
    for (std::size_t i = 0; i < levels_.size(); ++i) a[i] = step * levels_[i];
    return a;
}

std::vector<std::complex<double>> PhaseVector::coefficients() const {
    const std::vector<double> a = angles();
    std::vector<std::complex<double>> nu(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        nu[i] = std::polar(amplitude_, a[i]);
    return nu;
}

PhaseVector PhaseVector::quantize(int bits) const {
    if (bits < 1) throw DomainError("quantize requires b >= 1");
    const int count = 1 << bits;
    const std::vector<double> a = angles();
    std::vector<int> levels(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        double theta = std::fmod(a[i], kTwoPi);
        if (theta < 0.0) theta += kTwoPi;
        int level = static_cast<int>(std::lround(theta * count / kTwoPi)) % count;
        levels[i] = level;
    }
    return quantized(std::move(levels), bits, amplitude_);
}

} // namespace irsim
