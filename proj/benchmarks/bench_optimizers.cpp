// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#include <benchmark/benchmark.h>

#include <cmath>

#include "irsim/channel.hpp"
#include "irsim/optimize.hpp"

using namespace irsim;

namespace {

SystemConfig reference(int n) {
    SystemConfig c;
    c.antennas = 4;
    c.elements = n;
    c.bits = 5;
    c.transmit_snr = std::pow(10.0, 7.3);
    c.sd = link_stats({90.0, 4.0, 5.0});
    c.sr = link_stats({10.0, 4.0, 10.0});
    c.rd = link_stats({std::sqrt(8200.0), 4.0, 20.0});
    return c;
}

} // namespace

static void BM_MpsoOutage(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Objective obj = build_op_objective(reference(n), 1.0);
    OptimizerSettings s;
    s.particles = 50;
    s.max_iterations = 20;
    for (auto _ : state) {
        s.seed++;
        benchmark::DoNotOptimize(mpso_optimize(obj, n, 5, s));
    }
}
BENCHMARK(BM_MpsoOutage)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_PsoOutage(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Objective obj = build_op_objective(reference(n), 1.0);
    OptimizerSettings s;
    s.particles = 50;
    s.max_iterations = 20;
    for (auto _ : state) {
        s.seed++;
        benchmark::DoNotOptimize(pso_optimize(obj, n, s));
    }
}
BENCHMARK(BM_PsoOutage)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
