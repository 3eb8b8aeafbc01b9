// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#include <benchmark/benchmark.h>

#include <cmath>

#include "irsim/channel.hpp"
#include "irsim/metrics.hpp"
#include "irsim/rng.hpp"
#include "irsim/snr_moments.hpp"

using namespace irsim;

namespace {

SystemConfig reference(int m, int n) {
    SystemConfig c;
    c.antennas = m;
    c.elements = n;
    c.bits = 3;
    c.transmit_snr = std::pow(10.0, 7.3);
    c.sd = link_stats({90.0, 4.0, 5.0});
    c.sr = link_stats({10.0, 4.0, 10.0});
    c.rd = link_stats({std::sqrt(8200.0), 4.0, 20.0});
    return c;
}

PhaseVector phases(int n, std::uint64_t seed = 1) {
    rng::Engine eng(seed);
    std::vector<int> levels(static_cast<std::size_t>(n));
    for (int& l : levels) l = static_cast<int>(eng.uniform_int(8));
    return PhaseVector::quantized(std::move(levels), 3, 1.0);
}

} // namespace

static void BM_MomentTerms(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SystemConfig cfg = reference(4, n);
    const PhaseVector pv = phases(n);
    for (auto _ : state) benchmark::DoNotOptimize(moment_terms(cfg, pv));
}
BENCHMARK(BM_MomentTerms)->Arg(16)->Arg(64)->Arg(256);

static void BM_OutageObjectiveEval(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SystemConfig cfg = reference(4, n);
    const PhaseVector pv = phases(n);
    for (auto _ : state) {
        const GammaFit fit = fit_snr_distribution(cfg, pv);
        benchmark::DoNotOptimize(outage_probability({fit, 1.0}));
    }
}
BENCHMARK(BM_OutageObjectiveEval)->Arg(16)->Arg(64)->Arg(256);

static void BM_ErgodicRate(benchmark::State& state) {
    const SystemConfig cfg = reference(4, static_cast<int>(state.range(0)));
    const PhaseVector pv = phases(static_cast<int>(state.range(0)));
    const GammaFit fit = fit_snr_distribution(cfg, pv);
    for (auto _ : state) benchmark::DoNotOptimize(ergodic_rate(fit));
}
BENCHMARK(BM_ErgodicRate)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
