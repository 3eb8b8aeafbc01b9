// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "irsim/channel.hpp"
#include "irsim/phases.hpp"

namespace irsim {

/// Instantaneous end-to-end SNR gamma_s * ||h_sd + H_sr diag(nu) h_rd||^2.
/// The MRC combiner f = v / ||v|| is implicit in the squared norm.
double instantaneous_snr(const ChannelRealization& realization, const PhaseVector& phases,
                         double transmit_snr);

/// A batch of i.i.d. SNR draws plus the provenance needed to reproduce it.
struct SnrSampleSet {
    std::vector<double> samples; // linear scale, all >= 0
    std::uint64_t seed = 0;
    std::uint64_t config_fingerprint = 0;

    std::size_t count() const { return samples.size(); }
};

/// FNV-1a hash over the numeric content of a config; identifies the scenario
/// in sample sets and CSV provenance headers.
std::uint64_t config_fingerprint(const SystemConfig& config);

/// n i.i.d. draws of instantaneous_snr over fresh channel realizations.
/// Deterministic per (config, phases, seed) for any worker count: sampling
/// partitions the sample-index space and reduces in index order.
SnrSampleSet simulate_snr(const SystemConfig& config, const PhaseVector& phases, std::size_t n,
                          std::uint64_t seed, int jobs = 1);

/// Streaming moment accumulation; holds O(1) memory per worker chunk.
struct McMoments {
    double mean = 0.0;
    double second_moment = 0.0;
    double mean_stderr = 0.0;
    double second_moment_stderr = 0.0;
    std::size_t count = 0;
};

McMoments simulate_moments(const SystemConfig& config, const PhaseVector& phases, std::size_t n,
                           std::uint64_t seed, int jobs = 1);

/// Streaming outage/rate evaluation for one phase design.
struct McMetrics {
    double outage = 0.0;
    double outage_stderr = 0.0;
    double rate = 0.0;
    double rate_stderr = 0.0;
    double mean_snr = 0.0;
    std::size_t count = 0;
};

McMetrics simulate_metrics(const SystemConfig& config, const PhaseVector& phases, std::size_t n,
                           std::uint64_t seed, double gamma_th, int jobs = 1);

/// Fraction of samples <= gamma_th.
double empirical_outage(const SnrSampleSet& samples, double gamma_th);

/// Sample mean of log2(1 + gamma), bits per channel use.
double empirical_rate(const SnrSampleSet& samples);

/// Kolmogorov-Smirnov distance between the empirical CDF of the samples and
/// a reference CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Greedy per-realization phase design: cycle the elements, setting each one
/// to the candidate angle (phase_set(bits), or a 256-point grid when bits == 0)
/// that maximizes the instantaneous SNR with the others held fixed; repeat
/// until a full pass yields no improvement. Starts from the all-zero vector.
struct BaselineResult {
    PhaseVector phases;
    double snr = 0.0;
};

BaselineResult instantaneous_baseline(const ChannelRealization& realization, int bits,
                                      double transmit_snr, double amplitude = 1.0);

/// Streaming metrics of the greedy baseline over n fresh realizations.
McMetrics simulate_baseline_metrics(const SystemConfig& config, int bits, std::size_t n,
                                    std::uint64_t seed, double gamma_th, int jobs = 1);

/// Raw-sample dump: 16-byte header (magic "IRSSNR01", u32 count, u32
/// reserved) followed by count little-endian IEEE-754 doubles.
void write_sample_dump(const std::string& path, const std::vector<double>& samples);
std::vector<double> read_sample_dump(const std::string& path);

} // namespace irsim
