// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#include <benchmark/benchmark.h>

#include <cmath>

#include "irsim/channel.hpp"
#include "irsim/montecarlo.hpp"
#include "irsim/rng.hpp"

using namespace irsim;

namespace {

SystemConfig reference(int m, int n) {
    SystemConfig c;
    c.antennas = m;
    c.elements = n;
    c.bits = 5;
    c.transmit_snr = std::pow(10.0, 7.3);
    c.sd = link_stats({90.0, 4.0, 5.0});
    c.sr = link_stats({10.0, 4.0, 10.0});
    c.rd = link_stats({std::sqrt(8200.0), 4.0, 20.0});
    return c;
}

} // namespace

static void BM_SimulateSnr(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SystemConfig cfg = reference(4, n);
    const PhaseVector pv = PhaseVector::zero_quantized(n, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_moments(cfg, pv, 10'000, 1, 1));
    }
    state.SetItemsProcessed(state.iterations() * 10'000);
}
BENCHMARK(BM_SimulateSnr)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_GreedyBaseline(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SystemConfig cfg = reference(4, n);
    std::uint64_t idx = 0;
    for (auto _ : state) {
        const ChannelRealization r = sample_realization(cfg, 3, idx++);
        benchmark::DoNotOptimize(instantaneous_baseline(r, 5, cfg.transmit_snr));
    }
}
BENCHMARK(BM_GreedyBaseline)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
