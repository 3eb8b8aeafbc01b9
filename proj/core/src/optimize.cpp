// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#include "irsim/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "irsim/rng.hpp"

namespace irsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double worst_value(Sense sense) {
    return sense == Sense::Minimize ? std::numeric_limits<double>::infinity()
                                    : -std::numeric_limits<double>::infinity();
}

bool better(Sense sense, double a, double b) {
    return sense == Sense::Minimize ? a < b : a > b;
}

// Objective evaluation with the failure-to-worst-fitness policy.
double evaluate(const Objective& objective, const PhaseVector& phases) {
    try {
        const double v = objective.eval(phases);
        if (std::isnan(v)) return worst_value(objective.sense);
        return v;
    } catch (const Error&) {
        return worst_value(objective.sense);
    }
}

} // namespace

void OptimizerSettings::validate() const {
    detail::check(particles >= 2, "optimizer needs at least 2 particles");
    detail::check(max_iterations >= 1, "optimizer needs at least 1 iteration");
    detail::check(mpso_spread > 0.0, "mpso_spread must be positive");
    detail::check(pso_accel_local > 0.0 && pso_accel_global > 0.0,
                  "acceleration factors must be positive");
    detail::check(pso_velocity_clamp > 0.0, "velocity clamp must be positive");
}

Objective build_op_objective(const SystemConfig& config, double gamma_th) {
    config.validate();
    if (gamma_th < 0.0) throw DomainError("build_op_objective requires gamma_th >= 0");
    Objective obj;
    obj.name = "outage-probability";
    obj.sense = Sense::Minimize;
    obj.eval = [config, gamma_th](const PhaseVector& phases) {
        return outage_probability({fit_snr_distribution(config, phases), gamma_th});
    };
    return obj;
}

Objective build_rate_objective(const SystemConfig& config) {
    config.validate();
    Objective obj;
    obj.name = "ergodic-rate";
    obj.sense = Sense::Maximize;
    obj.eval = [config](const PhaseVector& phases) {
        return ergodic_rate(fit_snr_distribution(config, phases));
    };
    return obj;
}

OptimizeResult mpso_optimize(const Objective& objective, int n_elements, int bits,
                             const OptimizerSettings& settings, double amplitude,
                             const SwarmObserver& observer) {
    settings.validate();
    if (n_elements < 1) throw ConfigError("mpso_optimize requires N >= 1");
    if (bits < 1) throw DomainError("mpso_optimize requires b >= 1");

    const int t = settings.particles;
    const int n = n_elements;
    const int levels = 1 << bits;
    const double level_max = levels - 1;
    rng::Engine eng(settings.seed, 0x4D50534Full); // "MPSO"

    // Positions in level space; velocities real.
    std::vector<std::vector<int>> pos(t, std::vector<int>(n));
    std::vector<std::vector<double>> vel(t, std::vector<double>(n, 0.0));
    for (auto& p : pos)
        for (int& l : p) l = static_cast<int>(eng.uniform_int(levels));

    std::vector<std::vector<int>> local_best = pos;
    std::vector<double> local_value(t, worst_value(objective.sense));
    std::vector<int> global_best = pos[0];
    double global_value = worst_value(objective.sense);

    auto as_phase = [&](const std::vector<int>& lv) {
        return PhaseVector::quantized(lv, bits, amplitude);
    };

    OptimizeResult result;
    result.trace.reserve(settings.max_iterations);

    for (int iter = 1; iter <= settings.max_iterations; ++iter) {
        for (int j = 0; j < t; ++j) {
            const double v = evaluate(objective, as_phase(pos[j]));
            if (better(objective.sense, v, local_value[j])) {
                local_value[j] = v;
                local_best[j] = pos[j];
            }
            if (better(objective.sense, v, global_value)) {
                global_value = v;
                global_best = pos[j];
            }
        }
        result.trace.push_back(global_value);

        if (observer) {
            SwarmState state;
            state.iteration = iter;
            state.global_best = as_phase(global_best);
            state.global_best_value = global_value;
            state.personal_best_value = local_value;
            for (int j = 0; j < t; ++j) {
                state.positions.push_back(as_phase(pos[j]));
                state.personal_best.push_back(as_phase(local_best[j]));
            }
            state.velocities = vel;
            observer(state);
        }

        // Signed level difference; shortest way around the circle when the
        // wrapped topology is on.
        auto level_diff = [&](int a, int b) {
            double d = a - b;
            if (settings.mpso_wrap_levels) {
                if (d > levels / 2.0) d -= levels;
                if (d < -levels / 2.0) d += levels;
            }
            return d;
        };

        // Inertia schedule fixed by the algorithm: 0.9 - i(0.9 - 0.2)/I_max.
        const double inertia = 0.9 - iter * (0.9 - 0.2) / settings.max_iterations;
        for (int j = 0; j < t; ++j) {
            double psi1 = eng.uniform(0.0, 2.0);
            double psi2 = eng.uniform(0.0, 2.0);
            for (int i = 0; i < n; ++i) {
                if (settings.per_dimension_draws && i > 0) {
                    psi1 = eng.uniform(0.0, 2.0);
                    psi2 = eng.uniform(0.0, 2.0);
                }
                const double v = inertia * vel[j][i] + psi1 * level_diff(local_best[j][i], pos[j][i]) +
                                 psi2 * level_diff(global_best[i], pos[j][i]);
                vel[j][i] = v;
                double mean;
                double noise_sd;
                if (settings.mpso_update == MpsoUpdate::Displacement) {
                    // Sigmoid-saturated move on the level circle: unit slope
                    // for small velocities (one level per level of velocity),
                    // saturating at half the circle. The input rescaling by
                    // 4/levels keeps the dynamics identical in angle units
                    // for every bit depth.
                    const double sig = 1.0 / (1.0 + std::exp(-4.0 * v / levels));
                    mean = pos[j][i] + (levels / 2.0) * (2.0 * sig - 1.0);
                    noise_sd = settings.mpso_spread; // in levels
                } else {
                    // Verbatim published map; kept for side-by-side runs.
                    const double sig = 1.0 / (1.0 + std::exp(-v));
                    mean = level_max * sig;
                    noise_sd = settings.mpso_spread * level_max;
                }
                const double proposal = std::round(mean + noise_sd * eng.normal());
                if (settings.mpso_wrap_levels && settings.mpso_update == MpsoUpdate::Displacement) {
                    const auto wrapped = static_cast<long long>(proposal) % levels;
                    pos[j][i] = static_cast<int>(wrapped < 0 ? wrapped + levels : wrapped);
                } else {
                    pos[j][i] = static_cast<int>(std::clamp(proposal, 0.0, level_max));
                }
            }
        }
    }

    result.best = as_phase(global_best);
    result.value = global_value;
    return result;
}

OptimizeResult pso_optimize(const Objective& objective, int n_elements,
                            const OptimizerSettings& settings, double amplitude,
                            const SwarmObserver& observer) {
    settings.validate();
    if (n_elements < 1) throw ConfigError("pso_optimize requires N >= 1");

    const int t = settings.particles;
    const int n = n_elements;
    const double v_max = settings.pso_velocity_clamp * kTwoPi;
    rng::Engine eng(settings.seed, 0x50534Full); // "PSO"

    std::vector<std::vector<double>> pos(t, std::vector<double>(n));
    std::vector<std::vector<double>> vel(t, std::vector<double>(n, 0.0));
    for (auto& p : pos)
        for (double& theta : p) theta = eng.uniform(0.0, kTwoPi);

    std::vector<std::vector<double>> local_best = pos;
    std::vector<double> local_value(t, worst_value(objective.sense));
    std::vector<double> global_best = pos[0];
    double global_value = worst_value(objective.sense);

    auto as_phase = [&](const std::vector<double>& angles) {
        return PhaseVector::continuous(angles, amplitude);
    };

    OptimizeResult result;
    result.trace.reserve(settings.max_iterations);

    for (int iter = 1; iter <= settings.max_iterations; ++iter) {
        for (int j = 0; j < t; ++j) {
            const double v = evaluate(objective, as_phase(pos[j]));
            if (better(objective.sense, v, local_value[j])) {
                local_value[j] = v;
                local_best[j] = pos[j];
            }
            if (better(objective.sense, v, global_value)) {
                global_value = v;
                global_best = pos[j];
            }
        }
        result.trace.push_back(global_value);

        if (observer) {
            SwarmState state;
            state.iteration = iter;
            state.global_best = as_phase(global_best);
            state.global_best_value = global_value;
            state.personal_best_value = local_value;
            for (int j = 0; j < t; ++j) {
                state.positions.push_back(as_phase(pos[j]));
                state.personal_best.push_back(as_phase(local_best[j]));
            }
            state.velocities = vel;
            observer(state);
        }

        const double inertia =
            settings.pso_inertia_start -
            iter * (settings.pso_inertia_start - settings.pso_inertia_end) / settings.max_iterations;
        for (int j = 0; j < t; ++j) {
            double r1 = eng.uniform01();
            double r2 = eng.uniform01();
            for (int i = 0; i < n; ++i) {
                if (settings.per_dimension_draws && i > 0) {
                    r1 = eng.uniform01();
                    r2 = eng.uniform01();
                }
                double v = inertia * vel[j][i] +
                           settings.pso_accel_local * r1 * (local_best[j][i] - pos[j][i]) +
                           settings.pso_accel_global * r2 * (global_best[i] - pos[j][i]);
                v = std::clamp(v, -v_max, v_max);
                vel[j][i] = v;
                double theta = pos[j][i] + v;
                if (settings.pso_wrap_angles) {
                    theta = std::fmod(theta, kTwoPi);
                    if (theta < 0.0) theta += kTwoPi;
                } else {
                    theta = std::clamp(theta, 0.0, kTwoPi);
                }
                pos[j][i] = theta;
            }
        }
    }

    result.best = as_phase(global_best);
    result.value = global_value;
    return result;
}

OptimizeResult brute_force(const Objective& objective, int n_elements, int bits,
                           double amplitude) {
    if (n_elements < 1) throw ConfigError("brute_force requires N >= 1");
    if (bits < 1) throw DomainError("brute_force requires b >= 1");
    const double log2_candidates = static_cast<double>(bits) * n_elements;
    if (log2_candidates > 20.0)
        throw GuardError("brute_force instance too large: 2^(bN) = 2^" +
                         std::to_string(static_cast<int>(log2_candidates)) + " > 2^20");

    const int levels = 1 << bits;
    std::vector<int> current(n_elements, 0);
    std::vector<int> best = current;
    double best_value = worst_value(objective.sense);

    const std::uint64_t total = 1ull << static_cast<std::uint64_t>(log2_candidates);
    for (std::uint64_t idx = 0;; ++idx) {
        const double v = evaluate(objective, PhaseVector::quantized(current, bits, amplitude));
        if (better(objective.sense, v, best_value)) {
            best_value = v;
            best = current;
        }
        if (idx + 1 == total) break;
        // mixed-radix increment
        for (int i = 0; i < n_elements; ++i) {
            if (++current[i] < levels) break;
            current[i] = 0;
        }
    }

    OptimizeResult result;
    result.best = PhaseVector::quantized(best, bits, amplitude);
    result.value = best_value;
    result.trace = {best_value};
    return result;
}

} // namespace irsim
