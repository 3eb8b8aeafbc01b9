// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#include "irsim/montecarlo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <thread>

#include "irsim/rng.hpp"

static_assert(std::endian::native == std::endian::little,
              "sample dump format assumes a little-endian host");

namespace irsim {

namespace {

constexpr std::uint64_t kStreamSd = 0x53445F4C494E4Bull;
constexpr std::uint64_t kStreamSr = 0x53525F4C494E4Bull;
constexpr std::uint64_t kStreamRd = 0x52445F4C494E4Bull;

// Kahan-compensated accumulator; keeps chunked reductions order-stable.
struct Kahan {
    double sum = 0.0;
    double c = 0.0;

    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

// Hot-path sampler: draws the channel for one sample index directly into
// scratch buffers (same stream layout as sample_realization) and returns the
// combined receive vector v_j = h_sd_j + sum_i g_ji nu_i r_i.
class SampleEngine {
public:
    SampleEngine(const SystemConfig& config, const PhaseVector& phases, std::uint64_t seed)
        : m_(static_cast<std::size_t>(config.antennas)),
          n_(static_cast<std::size_t>(config.elements)),
          sd_(seed, kStreamSd),
          sr_(seed, kStreamSr),
          rd_(seed, kStreamRd),
          mu_sd_(config.sd.mean),
          mu_sr_(config.sr.mean),
          mu_rd_(config.rd.mean),
          sc_sd_(std::sqrt(config.sd.variance)),
          sc_sr_(std::sqrt(config.sr.variance)),
          sc_rd_(std::sqrt(config.rd.variance)),
          nu_(phases.coefficients()),
          weighted_rd_(n_) {}

    // ||v||^2 for sample index s (SNR is transmit_snr times this).
    double combined_power(std::uint64_t s) {
        for (std::size_t i = 0; i < n_; ++i) {
            const cplx r = mu_rd_ + sc_rd_ * rd_.complex_normal(s * n_ + i);
            weighted_rd_[i] = nu_[i] * r;
        }
        double power = 0.0;
        for (std::size_t j = 0; j < m_; ++j) {
            cplx v = mu_sd_ + sc_sd_ * sd_.complex_normal(s * m_ + j);
            const std::uint64_t row = s * m_ * n_ + j * n_;
            for (std::size_t i = 0; i < n_; ++i) {
                const cplx g = mu_sr_ + sc_sr_ * sr_.complex_normal(row + i);
                v += g * weighted_rd_[i];
            }
            power += std::norm(v);
        }
        return power;
    }

private:
    std::size_t m_, n_;
    rng::Stream sd_, sr_, rd_;
    double mu_sd_, mu_sr_, mu_rd_;
    double sc_sd_, sc_sr_, sc_rd_;
    std::vector<cplx> nu_;
    std::vector<cplx> weighted_rd_;
};

// Runs fn(chunk_index, begin, end) over jobs workers; chunk boundaries depend
// only on (n, jobs), so any reduction that combines chunks in index order is
// deterministic.
void run_chunked(std::size_t n, int jobs, const std::function<void(int, std::size_t, std::size_t)>& fn) {
    jobs = std::max(1, jobs);
    const auto chunks = static_cast<std::size_t>(jobs);
    if (jobs == 1 || n < 2 * chunks) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    const std::size_t per = (n + chunks - 1) / chunks;
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t begin = c * per;
        const std::size_t end = std::min(n, begin + per);
        if (begin >= end) break;
        workers.emplace_back([&fn, c, begin, end] { fn(static_cast<int>(c), begin, end); });
    }
    for (auto& w : workers) w.join();
}

} // namespace

double instantaneous_snr(const ChannelRealization& realization, const PhaseVector& phases,
                         double transmit_snr) {
    const auto m = realization.h_sd.size();
    const auto n = realization.h_rd.size();
    if (static_cast<std::size_t>(phases.size()) != n ||
        realization.h_sr.size() != m * n)
        throw ConfigError("instantaneous_snr: dimension mismatch between realization and phases");

    const auto nu = phases.coefficients();
    double power = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        cplx v = realization.h_sd[j];
        for (std::size_t i = 0; i < n; ++i)
            v += realization.h_sr[j * n + i] * nu[i] * realization.h_rd[i];
        power += std::norm(v);
    }
    return transmit_snr * power;
}

std::uint64_t config_fingerprint(const SystemConfig& config) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto fold = [&h](double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    fold(config.antennas);
    fold(config.elements);
    fold(config.bits);
    fold(config.amplitude);
    fold(config.transmit_snr);
    for (const LinkStats* l : {&config.sd, &config.sr, &config.rd}) {
        fold(l->mean);
        fold(l->variance);
    }
    return h;
}

SnrSampleSet simulate_snr(const SystemConfig& config, const PhaseVector& phases, std::size_t n,
                          std::uint64_t seed, int jobs) {
    config.validate();
    if (n < 1) throw ConfigError("simulate_snr requires n >= 1");
    if (phases.size() != config.elements)
        throw ConfigError("simulate_snr: phase vector length does not match N");

    SnrSampleSet set;
    set.seed = seed;
    set.config_fingerprint = config_fingerprint(config);
    set.samples.resize(n);

    const double gamma_s = config.transmit_snr;
    run_chunked(n, jobs, [&](int, std::size_t begin, std::size_t end) {
        SampleEngine engine(config, phases, seed);
        for (std::size_t s = begin; s < end; ++s)
            set.samples[s] = gamma_s * engine.combined_power(s);
    });
    return set;
}

McMoments simulate_moments(const SystemConfig& config, const PhaseVector& phases, std::size_t n,
                           std::uint64_t seed, int jobs) {
    config.validate();
    if (n < 1) throw ConfigError("simulate_moments requires n >= 1");

    jobs = std::max(1, jobs);
    std::vector<Kahan> m1(jobs), m2(jobs), m3(jobs), m4(jobs);
    const double gamma_s = config.transmit_snr;
    run_chunked(n, jobs, [&](int c, std::size_t begin, std::size_t end) {
        SampleEngine engine(config, phases, seed);
        for (std::size_t s = begin; s < end; ++s) {
            const double g = gamma_s * engine.combined_power(s);
            const double g2 = g * g;
            m1[c].add(g);
            m2[c].add(g2);
            m3[c].add(g2 * g);
            m4[c].add(g2 * g2);
        }
    });

    Kahan s1, s2, s3, s4;
    for (int c = 0; c < jobs; ++c) {
        s1.add(m1[c].sum);
        s2.add(m2[c].sum);
        s3.add(m3[c].sum);
        s4.add(m4[c].sum);
    }
    const double dn = static_cast<double>(n);
    McMoments out;
    out.count = n;
    out.mean = s1.sum / dn;
    out.second_moment = s2.sum / dn;
    const double var1 = std::max(0.0, s2.sum / dn - out.mean * out.mean);
    const double var2 = std::max(0.0, s4.sum / dn - out.second_moment * out.second_moment);
    out.mean_stderr = std::sqrt(var1 / dn);
    out.second_moment_stderr = std::sqrt(var2 / dn);
    return out;
}

McMetrics simulate_metrics(const SystemConfig& config, const PhaseVector& phases, std::size_t n,
                           std::uint64_t seed, double gamma_th, int jobs) {
    config.validate();
    if (n < 1) throw ConfigError("simulate_metrics requires n >= 1");
    if (gamma_th < 0.0) throw DomainError("simulate_metrics requires gamma_th >= 0");

    jobs = std::max(1, jobs);
    std::vector<std::size_t> below(jobs, 0);
    std::vector<Kahan> rate(jobs), rate_sq(jobs), snr(jobs);
    const double gamma_s = config.transmit_snr;
    constexpr double kInvLn2 = 1.4426950408889634;

    run_chunked(n, jobs, [&](int c, std::size_t begin, std::size_t end) {
        SampleEngine engine(config, phases, seed);
        for (std::size_t s = begin; s < end; ++s) {
            const double g = gamma_s * engine.combined_power(s);
            if (g <= gamma_th) ++below[c];
            const double bits = std::log1p(g) * kInvLn2;
            rate[c].add(bits);
            rate_sq[c].add(bits * bits);
            snr[c].add(g);
        }
    });

    std::size_t total_below = 0;
    Kahan rate_sum, rate_sq_sum, snr_sum;
    for (int c = 0; c < jobs; ++c) {
        total_below += below[c];
        rate_sum.add(rate[c].sum);
        rate_sq_sum.add(rate_sq[c].sum);
        snr_sum.add(snr[c].sum);
    }

    const double dn = static_cast<double>(n);
    McMetrics out;
    out.count = n;
    out.outage = static_cast<double>(total_below) / dn;
    // Agresti-style floor keeps the stderr positive when no sample falls
    // below the threshold, so downstream z-tests stay meaningful.
    const double p_floor = (static_cast<double>(total_below) + 1.0) / (dn + 2.0);
    const double p_var = std::max(out.outage * (1.0 - out.outage), p_floor * (1.0 - p_floor));
    out.outage_stderr = std::sqrt(p_var / dn);
    out.rate = rate_sum.sum / dn;
    const double rate_var = std::max(0.0, rate_sq_sum.sum / dn - out.rate * out.rate);
    out.rate_stderr = std::sqrt(rate_var / dn);
    out.mean_snr = snr_sum.sum / dn;
    return out;
}

double empirical_outage(const SnrSampleSet& set, double gamma_th) {
    if (set.samples.empty()) throw ConfigError("empirical_outage requires at least one sample");
    std::size_t below = 0;
    for (double s : set.samples)
        if (s <= gamma_th) ++below;
    return static_cast<double>(below) / static_cast<double>(set.samples.size());
}

double empirical_rate(const SnrSampleSet& set) {
    if (set.samples.empty()) throw ConfigError("empirical_rate requires at least one sample");
    constexpr double kInvLn2 = 1.4426950408889634;
    Kahan sum;
    for (double s : set.samples) sum.add(std::log1p(s) * kInvLn2);
    return sum.sum / static_cast<double>(set.samples.size());
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw ConfigError("ks_statistic requires at least one sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        ks = std::max(ks, std::abs((static_cast<double>(i) + 1.0) / n - f));
        ks = std::max(ks, std::abs(static_cast<double>(i) / n - f));
    }
    return ks;
}

BaselineResult instantaneous_baseline(const ChannelRealization& realization, int bits,
                                      double transmit_snr, double amplitude) {
    const auto m = realization.h_sd.size();
    const auto n = realization.h_rd.size();
    if (realization.h_sr.size() != m * n)
        throw ConfigError("instantaneous_baseline: inconsistent realization dimensions");
    if (bits < 0) throw DomainError("instantaneous_baseline: bits must be >= 0 (0 = continuous grid)");

    // Candidate angles: the quantized set, or a fixed 256-point grid.
    std::vector<double> candidates;
    if (bits >= 1) {
        candidates = phase_set(bits);
    } else {
        candidates.resize(256);
        for (int i = 0; i < 256; ++i) candidates[i] = 2.0 * std::numbers::pi * i / 256.0;
    }

    std::vector<int> choice(n, 0);
    std::vector<cplx> cascade(m * n); // g_ji * r_i, fixed over the search
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i)
            cascade[j * n + i] = realization.h_sr[j * n + i] * realization.h_rd[i];

    std::vector<cplx> nu(candidates.size());
    for (std::size_t c = 0; c < candidates.size(); ++c) nu[c] = std::polar(amplitude, candidates[c]);

    // v_j for the current choice vector.
    std::vector<cplx> v(m);
    for (std::size_t j = 0; j < m; ++j) {
        v[j] = realization.h_sd[j];
        for (std::size_t i = 0; i < n; ++i) v[j] += cascade[j * n + i] * nu[choice[i]];
    }

    auto total_power = [&v]() {
        double p = 0.0;
        for (const cplx& x : v) p += std::norm(x);
        return p;
    };

    double best_power = total_power();
    std::vector<cplx> stripped(m);
    const int max_passes = 64;
    for (int pass = 0; pass < max_passes; ++pass) {
        bool improved = false;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m; ++j) stripped[j] = v[j] - cascade[j * n + i] * nu[choice[i]];
            int best_c = choice[i];
            double best_p = best_power;
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                double p = 0.0;
                for (std::size_t j = 0; j < m; ++j) p += std::norm(stripped[j] + cascade[j * n + i] * nu[c]);
                if (p > best_p) {
                    best_p = p;
                    best_c = static_cast<int>(c);
                }
            }
            if (best_c != choice[i]) {
                for (std::size_t j = 0; j < m; ++j) v[j] = stripped[j] + cascade[j * n + i] * nu[best_c];
                choice[i] = best_c;
                best_power = best_p;
                improved = true;
            }
        }
        if (!improved) break;
    }

    BaselineResult out;
    if (bits >= 1) {
        out.phases = PhaseVector::quantized(choice, bits, amplitude);
    } else {
        std::vector<double> angles(n);
        for (std::size_t i = 0; i < n; ++i) angles[i] = candidates[choice[i]];
        out.phases = PhaseVector::continuous(std::move(angles), amplitude);
    }
    out.snr = transmit_snr * best_power;
    return out;
}

McMetrics simulate_baseline_metrics(const SystemConfig& config, int bits, std::size_t n,
                                    std::uint64_t seed, double gamma_th, int jobs) {
    config.validate();
    if (n < 1) throw ConfigError("simulate_baseline_metrics requires n >= 1");

    jobs = std::max(1, jobs);
    std::vector<std::size_t> below(jobs, 0);
    std::vector<Kahan> rate(jobs), rate_sq(jobs), snr(jobs);
    constexpr double kInvLn2 = 1.4426950408889634;

    run_chunked(n, jobs, [&](int c, std::size_t begin, std::size_t end) {
        for (std::size_t s = begin; s < end; ++s) {
            const ChannelRealization r = sample_realization(config, seed, s);
            const BaselineResult b = instantaneous_baseline(r, bits, config.transmit_snr,
                                                            config.amplitude);
            if (b.snr <= gamma_th) ++below[c];
            const double bits_cu = std::log1p(b.snr) * kInvLn2;
            rate[c].add(bits_cu);
            rate_sq[c].add(bits_cu * bits_cu);
            snr[c].add(b.snr);
        }
    });

    std::size_t total_below = 0;
    Kahan rate_sum, rate_sq_sum, snr_sum;
    for (int c = 0; c < jobs; ++c) {
        total_below += below[c];
        rate_sum.add(rate[c].sum);
        rate_sq_sum.add(rate_sq[c].sum);
        snr_sum.add(snr[c].sum);
    }

    const double dn = static_cast<double>(n);
    McMetrics out;
    out.count = n;
    out.outage = static_cast<double>(total_below) / dn;
    const double p_floor = (static_cast<double>(total_below) + 1.0) / (dn + 2.0);
    const double p_var = std::max(out.outage * (1.0 - out.outage), p_floor * (1.0 - p_floor));
    out.outage_stderr = std::sqrt(p_var / dn);
    out.rate = rate_sum.sum / dn;
    const double rate_var = std::max(0.0, rate_sq_sum.sum / dn - out.rate * out.rate);
    out.rate_stderr = std::sqrt(rate_var / dn);
    out.mean_snr = snr_sum.sum / dn;
    return out;
}

void write_sample_dump(const std::string& path, const std::vector<double>& samples) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open sample dump for writing: " + path);
    const char magic[8] = {'I', 'R', 'S', 'S', 'N', 'R', '0', '1'};
    out.write(magic, sizeof magic);
    const auto count = static_cast<std::uint32_t>(samples.size());
    const std::uint32_t reserved = 0;
    out.write(reinterpret_cast<const char*>(&count), sizeof count);
    out.write(reinterpret_cast<const char*>(&reserved), sizeof reserved);
    out.write(reinterpret_cast<const char*>(samples.data()),
              static_cast<std::streamsize>(samples.size() * sizeof(double)));
    if (!out) throw IoError("short write on sample dump: " + path);
}

std::vector<double> read_sample_dump(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open sample dump: " + path);
    char magic[8];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, "IRSSNR01", 8) != 0)
        throw IoError("bad sample dump magic in " + path);
    std::uint32_t count = 0, reserved = 0;
    in.read(reinterpret_cast<char*>(&count), sizeof count);
    in.read(reinterpret_cast<char*>(&reserved), sizeof reserved);
    std::vector<double> samples(count);
    in.read(reinterpret_cast<char*>(samples.data()),
            static_cast<std::streamsize>(samples.size() * sizeof(double)));
    if (!in) throw IoError("truncated sample dump: " + path);
    return samples;
}

} // namespace irsim
