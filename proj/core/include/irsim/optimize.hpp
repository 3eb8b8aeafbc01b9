// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "irsim/channel.hpp"
#include "irsim/metrics.hpp"
#include "irsim/phases.hpp"

namespace irsim {

enum class Sense { Minimize, Maximize };

/// Deterministic evaluation contract mapping a phase vector to a scalar
/// fitness. Evaluation may throw (e.g. a degenerate gamma fit); optimizers
/// treat a throwing particle as worst fitness and keep running.
struct Objective {
    std::function<double(const PhaseVector&)> eval;
    std::string name;
    Sense sense = Sense::Minimize;
};

/// Outage probability of the moment-matched gamma fit as a function of the
/// phases; sense = minimize.
Objective build_op_objective(const SystemConfig& config, double gamma_th);

/// Ergodic rate of the fit; sense = maximize.
Objective build_rate_objective(const SystemConfig& config);

/// How the sigmoid-mapped velocity proposes the next level.
///   Displacement: level + (2^b - 1)(2 sigmoid(V) - 1), so V = 0 keeps the
///     particle in place and swarm convergence mirrors continuous PSO.
///   Absolute: (2^b - 1) sigmoid(V) taken as the level itself; V = 0 maps to
///     the centre of the range, which biases the swarm away from range-edge
///     optima and keeps converged particles churning. Kept selectable for
///     comparison experiments.
enum class MpsoUpdate { Displacement, Absolute };

struct OptimizerSettings {
    int particles = 200;     // T
    int max_iterations = 100; // I_max
    double mpso_spread = 0.2; // sigma of the rounding noise, in units of 2^b - 1
    MpsoUpdate mpso_update = MpsoUpdate::Displacement;
    double pso_inertia_start = 0.9;
    double pso_inertia_end = 0.4;
    double pso_accel_local = 2.0;  // c1
    double pso_accel_global = 2.0; // c2
    double pso_velocity_clamp = 0.5; // |V| <= clamp * range per dimension
    bool pso_wrap_angles = false;    // default clamps to [0, 2pi] instead of wrapping
    // Levels are phases, so 0 and 2^b - 1 are neighbours on the circle. With
    // the circular topology the attraction kicks use the shortest wrapped
    // level distance and the projection wraps mod 2^b; switching it off
    // clamps to [0, 2^b - 1] instead, which strands particles at whichever
    // range edge the early global best happened to pick.
    bool mpso_wrap_levels = true;
    bool per_dimension_draws = false; // redraw psi_1, psi_2 per dimension instead of per particle
    std::uint64_t seed = 1;

    void validate() const;
};

/// Swarm bookkeeping exposed to observers: positions and fitness state at
/// the end of an iteration. global_best_value is the extremum over all
/// personal bests; personal bests are extrema over each particle's history.
struct SwarmState {
    int iteration = 0;
    std::vector<PhaseVector> positions;
    std::vector<std::vector<double>> velocities;
    std::vector<PhaseVector> personal_best;
    std::vector<double> personal_best_value;
    PhaseVector global_best;
    double global_best_value = 0.0;
};

using SwarmObserver = std::function<void(const SwarmState&)>;

struct OptimizeResult {
    PhaseVector best;
    double value = 0.0;
    std::vector<double> trace; // best-ever objective value after each iteration
};

/// Multi-valued PSO over integer level vectors in [0, 2^b - 1]^N.
/// Velocity update with inertia 0.9 - i(0.9 - 0.2)/I_max and uniform [0,2]
/// attraction draws, sigmoid map S = (2^b - 1) / (1 + e^{-V}), position
/// update round(Normal(S, sigma (2^b - 1))) clamped to the level range.
OptimizeResult mpso_optimize(const Objective& objective, int n_elements, int bits,
                             const OptimizerSettings& settings, double amplitude = 1.0,
                             const SwarmObserver& observer = nullptr);

/// Continuous PSO over [0, 2pi]^N with linearly decreasing inertia and
/// c1 r1 / c2 r2 attraction; positions clamp to the angle box by default.
OptimizeResult pso_optimize(const Objective& objective, int n_elements,
                            const OptimizerSettings& settings, double amplitude = 1.0,
                            const SwarmObserver& observer = nullptr);

/// Exact optimum by enumeration of all 2^(bN) level vectors.
/// Guarded: throws GuardError when 2^(bN) > 2^20.
OptimizeResult brute_force(const Objective& objective, int n_elements, int bits,
                           double amplitude = 1.0);

} // namespace irsim
