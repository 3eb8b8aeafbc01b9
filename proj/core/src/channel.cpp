// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#include "irsim/channel.hpp"

#include <cmath>

#include "irsim/rng.hpp"

namespace irsim {

namespace {

// Stream tags for the three links; keeps per-link substreams disjoint.
constexpr std::uint64_t kStreamSd = 0x53445F4C494E4Bull; // "SD_LINK"
constexpr std::uint64_t kStreamSr = 0x53525F4C494E4Bull;
constexpr std::uint64_t kStreamRd = 0x52445F4C494E4Bull;

} // namespace

void LinkGeometry::validate() const {
    if (!(distance > 0.0) || !std::isfinite(distance))
        throw InvalidGeometryError("link distance must be positive, got " + std::to_string(distance));
    if (!(pathloss_exponent > 0.0) || !std::isfinite(pathloss_exponent))
        throw InvalidGeometryError("path-loss exponent must be positive, got " +
                                   std::to_string(pathloss_exponent));
    if (rice_factor < 0.0 || !std::isfinite(rice_factor))
        throw InvalidGeometryError("Rice factor must be nonnegative, got " + std::to_string(rice_factor));
}

LinkStats link_stats(const LinkGeometry& g) {
    g.validate();
    const double power = std::pow(g.distance, -g.pathloss_exponent);
    LinkStats s;
    s.variance = power / (g.rice_factor + 1.0);
    s.mean = std::sqrt(power) * std::sqrt(g.rice_factor / (g.rice_factor + 1.0));
    return s;
}

void SystemConfig::validate() const {
    detail::check(antennas >= 1, "antenna count M must be >= 1");
    detail::check(elements >= 1, "element count N must be >= 1");
    detail::check(bits >= 1, "quantization bits b must be >= 1");
    detail::check(amplitude > 0.0 && amplitude <= 1.0, "amplitude alpha must be in (0,1]");
    detail::check(transmit_snr > 0.0 && std::isfinite(transmit_snr),
                  "transmit SNR gamma_s must be positive");
    for (const LinkStats* l : {&sd, &sr, &rd})
        detail::check(l->variance > 0.0 && l->mean >= 0.0, "link stats require variance > 0, mean >= 0");
}

ChannelRealization sample_realization(const SystemConfig& config, std::uint64_t seed,
                                      std::uint64_t sample_index) {
    config.validate();
    const auto m = static_cast<std::size_t>(config.antennas);
    const auto n = static_cast<std::size_t>(config.elements);

    const rng::Stream sd(seed, kStreamSd);
    const rng::Stream sr(seed, kStreamSr);
    const rng::Stream rd(seed, kStreamRd);

    const double sd_scale = std::sqrt(config.sd.variance);
    const double sr_scale = std::sqrt(config.sr.variance);
    const double rd_scale = std::sqrt(config.rd.variance);

    ChannelRealization r;
    r.h_sd.resize(m);
    r.h_sr.resize(m * n);
    r.h_rd.resize(n);

    for (std::size_t j = 0; j < m; ++j)
        r.h_sd[j] = config.sd.mean + sd_scale * sd.complex_normal(sample_index * m + j);
    for (std::size_t e = 0; e < m * n; ++e)
        r.h_sr[e] = config.sr.mean + sr_scale * sr.complex_normal(sample_index * m * n + e);
    for (std::size_t i = 0; i < n; ++i)
        r.h_rd[i] = config.rd.mean + rd_scale * rd.complex_normal(sample_index * n + i);

    return r;
}

} // namespace irsim
