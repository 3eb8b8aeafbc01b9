// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "irsim/errors.hpp"

namespace irsim {

using cplx = std::complex<double>;

/// Large-scale description of one link: distance in meters, path-loss
/// exponent and Rice factor (K = 0 is Rayleigh fading).
struct LinkGeometry {
    double distance = 1.0;
    double pathloss_exponent = 2.0;
    double rice_factor = 0.0;

    void validate() const;
};

/// Rician fading parameters of one link. Entries of the channel are
/// CN(mean, variance): the line-of-sight mean sits on the real axis and the
/// scattered variance splits equally between real and imaginary parts.
struct LinkStats {
    double mean = 0.0;     // mu_ab = d^(-beta/2) * sqrt(K/(K+1))
    double variance = 1.0; // sigma_ab^2 = d^(-beta) / (K+1)

    /// Total link power d^(-beta) = mean^2 + variance.
    double total_power() const { return mean * mean + variance; }

    /// Rice factor recovered from (mean, variance).
    double rice_factor() const { return mean * mean / variance; }
};

/// Converts geometry to Rician moments:
///   sigma^2 = d^(-beta) / (K+1),  mu = d^(-beta/2) * sqrt(K/(K+1)).
LinkStats link_stats(const LinkGeometry& geometry);

/// Full scenario: BS antennas M, IRS elements N, quantization bits b,
/// reflection amplitude alpha, transmit SNR gamma_s (linear scale) and the
/// three link statistics (direct SD, BS-to-IRS SR, IRS-to-user RD).
struct SystemConfig {
    int antennas = 1;        // M
    int elements = 1;        // N
    int bits = 1;            // b
    double amplitude = 1.0;  // alpha in (0,1]
    double transmit_snr = 1.0; // gamma_s, linear
    LinkStats sd, sr, rd;

    void validate() const;
};

/// One small-scale fading draw. h_sr is row-major M x N.
struct ChannelRealization {
    std::vector<cplx> h_sd;  // length M
    std::vector<cplx> h_sr;  // length M*N, [j*N + i]
    std::vector<cplx> h_rd;  // length N

    cplx sr(int j, int i, int n_elements) const { return h_sr[static_cast<std::size_t>(j) * n_elements + i]; }
};

/// Draws the channel at a given sample index of the seeded ensemble. Every
/// entry is a pure function of (seed, link, sample_index, element index), so
/// parallel samplers that partition sample indices reproduce serial output.
ChannelRealization sample_realization(const SystemConfig& config, std::uint64_t seed,
                                      std::uint64_t sample_index = 0);

} // namespace irsim
