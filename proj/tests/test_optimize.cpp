// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "irsim/optimize.hpp"
#include "irsim/rng.hpp"
#include "support/oracles.hpp"

using namespace irsim;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

namespace {

// Synthetic smooth objective with a controllable interior optimum:
// minimize sum_i w_i (1 - cos(theta_i - tau_i)).
Objective target_objective(const std::vector<double>& targets, std::uint64_t weight_seed = 99) {
    rng::Engine eng(weight_seed);
    std::vector<double> weights(targets.size());
    for (double& w : weights) w = eng.uniform(0.5, 2.0);
    Objective obj;
    obj.name = "target-matching";
    obj.sense = Sense::Minimize;
    obj.eval = [targets, weights](const PhaseVector& v) {
        const auto angles = v.angles();
        double sum = 0.0;
        for (std::size_t i = 0; i < angles.size(); ++i)
            sum += weights[i] * (1.0 - std::cos(angles[i] - targets[i]));
        return sum;
    };
    return obj;
}

Objective constant_objective(double value) {
    return Objective{[value](const PhaseVector&) { return value; }, "constant", Sense::Minimize};
}

bool trace_monotone(const std::vector<double>& trace, Sense sense) {
    for (std::size_t i = 1; i < trace.size(); ++i) {
        if (sense == Sense::Minimize && trace[i] > trace[i - 1] + 1e-15) return false;
        if (sense == Sense::Maximize && trace[i] < trace[i - 1] - 1e-15) return false;
    }
    return true;
}

} // namespace

TEST_CASE("objectives compose the analytic chain") {
    const SystemConfig cfg = test::reference_config(4, 6);
    const Objective op = build_op_objective(cfg, 1.0);
    const Objective rate = build_rate_objective(cfg);
    CHECK(op.sense == Sense::Minimize);
    CHECK(rate.sense == Sense::Maximize);

    const PhaseVector zero = PhaseVector::zero_quantized(6, 3);
    const GammaFit fit = fit_snr_distribution(cfg, zero);
    CHECK(op.eval(zero) == doctest::Approx(outage_probability({fit, 1.0})).epsilon(1e-12));
    CHECK(rate.eval(zero) == doctest::Approx(ergodic_rate(fit)).epsilon(1e-12));
    CHECK(op.eval(zero) >= 0.0);
    CHECK(op.eval(zero) <= 1.0);

    CHECK_THROWS_AS(build_op_objective(cfg, -0.1), DomainError);
}

TEST_CASE("Rayleigh objectives are phase independent") {
    const SystemConfig cfg = test::rayleigh_config(2, 5);
    const Objective op = build_op_objective(cfg, 1.0);
    const Objective rate = build_rate_objective(cfg);
    rng::Engine eng(1);
    const double op0 = op.eval(PhaseVector::zero_quantized(5, 3));
    const double rate0 = rate.eval(PhaseVector::zero_quantized(5, 3));
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> levels(5);
        for (int& l : levels) l = static_cast<int>(eng.uniform_int(8));
        const PhaseVector v = PhaseVector::quantized(levels, 3);
        CHECK(std::abs(op.eval(v) - op0) < 1e-12);
        CHECK(std::abs(rate.eval(v) - rate0) < 1e-12);
    }
}

TEST_CASE("brute force enumerates the exact optimum") {
    SUBCASE("N = 1, b = 1 picks the better of {0, pi}") {
        const Objective obj = target_objective({0.4});
        const OptimizeResult r = brute_force(obj, 1, 1);
        CHECK(r.best.levels()[0] == 0); // 0 is closer to 0.4 than pi
    }
    SUBCASE("constant objective returns the constant") {
        const OptimizeResult r = brute_force(constant_objective(3.5), 3, 2);
        CHECK(r.value == doctest::Approx(3.5));
    }
    SUBCASE("guard rejects oversized instances") {
        CHECK_THROWS_AS(brute_force(constant_objective(0.0), 30, 5), GuardError);
    }
    SUBCASE("self-consistency against a reversed enumeration order") {
        const Objective obj = target_objective({0.3, 2.9, 4.4});
        const OptimizeResult fwd = brute_force(obj, 3, 2);
        // independent enumeration, reversed digit order
        double best = 1e300;
        std::vector<int> best_lv;
        for (int l2 = 3; l2 >= 0; --l2)
            for (int l1 = 3; l1 >= 0; --l1)
                for (int l0 = 3; l0 >= 0; --l0) {
                    const double v = obj.eval(PhaseVector::quantized({l0, l1, l2}, 2));
                    if (v < best) {
                        best = v;
                        best_lv = {l0, l1, l2};
                    }
                }
        CHECK(fwd.value == doctest::Approx(best).epsilon(1e-14));
        CHECK(fwd.best.levels() == best_lv);
    }
}

TEST_CASE("objective evaluation agrees with a hand-chained enumeration at N = 2, b = 1") {
    const SystemConfig cfg = test::reference_config(2, 2, 70.0, 1);
    const Objective op = build_op_objective(cfg, 1.0);
    const Objective rate = build_rate_objective(cfg);
    const OptimizeResult r_op = brute_force(op, 2, 1);
    const OptimizeResult r_rate = brute_force(rate, 2, 1);
    double best_op = 2.0;
    double best_rate = 0.0;
    for (int l0 : {0, 1})
        for (int l1 : {0, 1}) {
            const PhaseVector v = PhaseVector::quantized({l0, l1}, 1);
            const GammaFit fit = gamma_fit(mean_snr(cfg, v), second_moment_snr(cfg, v));
            best_op = std::min(best_op, outage_probability({fit, 1.0}));
            best_rate = std::max(best_rate, ergodic_rate(fit));
        }
    CHECK(r_op.value == doctest::Approx(best_op).epsilon(1e-14));
    CHECK(r_rate.value == doctest::Approx(best_rate).epsilon(1e-14));
}

TEST_CASE("rate at the outage-optimal design never exceeds the rate optimum") {
    const SystemConfig cfg = test::reference_config(2, 4, 71.0, 1);
    const Objective op = build_op_objective(cfg, 1.0);
    const Objective rate = build_rate_objective(cfg);
    const OptimizeResult op_best = brute_force(op, 4, 1);
    const OptimizeResult rate_best = brute_force(rate, 4, 1);
    CHECK(rate.eval(op_best.best) <= rate_best.value + 1e-15);
}

TEST_CASE("MPSO basics") {
    OptimizerSettings s;
    s.particles = 40;
    s.max_iterations = 30;
    s.seed = 5;

    SUBCASE("constant objective gives a flat trace of full length") {
        const OptimizeResult r = mpso_optimize(constant_objective(2.0), 6, 3, s);
        CHECK(r.trace.size() == 30);
        for (double v : r.trace) CHECK(v == doctest::Approx(2.0));
        CHECK(r.value == doctest::Approx(2.0));
    }
    SUBCASE("trace is monotone and the result is feasible") {
        const Objective obj = target_objective({1.0, 2.0, 3.0, 4.0, 5.0, 0.5});
        const OptimizeResult r = mpso_optimize(obj, 6, 3, s);
        CHECK(trace_monotone(r.trace, Sense::Minimize));
        CHECK(r.best.bits() == 3);
        for (int l : r.best.levels()) {
            CHECK(l >= 0);
            CHECK(l <= 7);
        }
        CHECK(r.value == doctest::Approx(r.trace.back()));
    }
    SUBCASE("determinism in the seed") {
        const Objective obj = target_objective({2.2, 0.1, 5.5, 3.3});
        const OptimizeResult a = mpso_optimize(obj, 4, 2, s);
        const OptimizeResult b = mpso_optimize(obj, 4, 2, s);
        CHECK(a.best.levels() == b.best.levels());
        CHECK(a.trace == b.trace);
        OptimizerSettings s2 = s;
        s2.seed = 6;
        const OptimizeResult c = mpso_optimize(obj, 4, 2, s2);
        CHECK(a.trace != c.trace);
    }
}

TEST_CASE("MPSO reaches the brute-force optimum at desk scale") {
    const SystemConfig cfg = test::reference_config(4, 4, 73.0, 2);
    const Objective op = build_op_objective(cfg, 1.0);
    const OptimizeResult exact = brute_force(op, 4, 2);

    OptimizerSettings s; // stock settings: T = 200, I_max = 100
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        s.seed = seed;
        const OptimizeResult r = mpso_optimize(op, 4, 2, s);
        CHECK(r.value >= exact.value - 1e-15);
        if (r.value <= exact.value * 1.005) ++hits;
    }
    CHECK(hits >= 8);
}

TEST_CASE("MPSO never ends worse than its best initial particle") {
    const Objective obj = target_objective({0.7, 1.9, 3.1, 4.3, 5.9});
    OptimizerSettings s;
    s.particles = 30;
    s.max_iterations = 25;
    s.seed = 123;
    double first_iteration_best = 0.0;
    bool got_first = false;
    const SwarmObserver observer = [&](const SwarmState& state) {
        if (!got_first) {
            first_iteration_best = state.global_best_value;
            got_first = true;
        }
        // global best is the running extremum of the personal bests
        double best = state.personal_best_value.front();
        for (double v : state.personal_best_value) best = std::min(best, v);
        CHECK(state.global_best_value <= best + 1e-15);
    };
    const OptimizeResult r = mpso_optimize(obj, 5, 3, s, 1.0, observer);
    REQUIRE(got_first);
    CHECK(r.value <= first_iteration_best);
}

TEST_CASE("PSO basics") {
    OptimizerSettings s;
    s.particles = 50;
    s.max_iterations = 40;
    s.seed = 7;

    SUBCASE("constant objective gives a flat trace") {
        const OptimizeResult r = pso_optimize(constant_objective(-1.0), 4, s);
        for (double v : r.trace) CHECK(v == doctest::Approx(-1.0));
    }
    SUBCASE("angles stay in the box") {
        const Objective obj = target_objective({0.2, 3.0, 6.0});
        const OptimizeResult r = pso_optimize(obj, 3, s);
        for (double a : r.best.angles()) {
            CHECK(a >= 0.0);
            CHECK(a <= kTwoPi);
        }
        CHECK(trace_monotone(r.trace, Sense::Minimize));
    }
    SUBCASE("determinism in the seed") {
        const Objective obj = target_objective({1.0, 4.0});
        const OptimizeResult a = pso_optimize(obj, 2, s);
        const OptimizeResult b = pso_optimize(obj, 2, s);
        CHECK(a.best.angles() == b.best.angles());
        CHECK(a.trace == b.trace);
    }
}

TEST_CASE("single-element PSO matches a dense grid search") {
    const SystemConfig cfg = test::reference_config(2, 1, 70.0, 3);
    const Objective op = build_op_objective(cfg, 1.0);

    double grid_best = 2.0;
    double grid_arg = 0.0;
    for (int i = 0; i < 10'000; ++i) {
        const double theta = kTwoPi * i / 10'000;
        const double v = op.eval(PhaseVector::continuous({theta}, 1.0));
        if (v < grid_best) {
            grid_best = v;
            grid_arg = theta;
        }
    }
    OptimizerSettings s;
    s.seed = 3;
    const OptimizeResult r = pso_optimize(op, 1, s);
    CHECK(r.value <= grid_best + 1e-12); // grid resolution bounds the PSO value
    const double wrap_dist =
        std::min(std::abs(r.best.angles()[0] - grid_arg),
                 kTwoPi - std::abs(r.best.angles()[0] - grid_arg));
    CHECK(wrap_dist < kTwoPi / 1000.0);
}

TEST_CASE("failing objective maps to worst fitness and the run continues") {
    int calls = 0;
    Objective obj;
    obj.sense = Sense::Minimize;
    obj.name = "partially-broken";
    obj.eval = [&calls](const PhaseVector& v) {
        ++calls;
        if (v.levels()[0] == 0) throw DegenerateVarianceError("synthetic failure");
        return static_cast<double>(v.levels()[0]);
    };
    OptimizerSettings s;
    s.particles = 20;
    s.max_iterations = 10;
    s.seed = 2;
    const OptimizeResult r = mpso_optimize(obj, 1, 2, s);
    CHECK(calls == 20 * 10);
    CHECK(r.value == doctest::Approx(1.0)); // best non-failing level
}

TEST_CASE("quantization nesting: continuous <= fine <= coarse (minimization medians)") {
    const SystemConfig cfg = test::reference_config(4, 4, 72.0, 1);
    const Objective op = build_op_objective(cfg, 1.0);
    OptimizerSettings s;
    std::vector<double> v1, v5, vp;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        s.seed = seed;
        v1.push_back(mpso_optimize(op, 4, 1, s).value);
        v5.push_back(mpso_optimize(op, 4, 5, s).value);
        vp.push_back(pso_optimize(op, 4, s).value);
    }
    const double m1 = test::median(v1), m5 = test::median(v5), mp = test::median(vp);
    CHECK(mp <= m5 + 1e-6);
    CHECK(m5 <= m1 + 1e-6);
}

TEST_CASE("median MPSO value improves weakly with bit depth on the reference setup") {
    const SystemConfig cfg = test::reference_config(4, 20, 73.0, 1);
    const Objective op = build_op_objective(cfg, 1.0);
    OptimizerSettings s;
    double prev = 2.0;
    for (int bits : {1, 2, 3, 4, 5}) {
        std::vector<double> values;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            s.seed = seed;
            values.push_back(mpso_optimize(op, 20, bits, s).value);
        }
        const double med = test::median(values);
        CHECK(med <= prev + 1e-9);
        prev = med;
    }
}
