// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "irsim/channel.hpp"
#include "irsim/montecarlo.hpp"
#include "irsim/optimize.hpp"
#include "irsim/phases.hpp"

namespace irsim::experiments {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

struct Point2 {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Point2&) const = default;
};

double distance(const Point2& a, const Point2& b);

/// Scenario in terms of 2-D placements and per-link large-scale parameters.
/// dB-suffixed fields are dB; everything becomes linear inside
/// system_config().
struct Scenario {
    Point2 bs{0.0, 0.0};
    Point2 irs{0.0, 10.0};
    Point2 user{90.0, 0.0};
    double pathloss_sd = 4.0, pathloss_sr = 4.0, pathloss_rd = 4.0;
    double rice_sd = 5.0, rice_sr = 10.0, rice_rd = 20.0;
    double amplitude = 1.0;
    int antennas = 4;
    int elements = 40;
    int bits = 5;
    double transmit_snr_db = 73.0;
    double threshold_db = 0.0;

    SystemConfig system_config() const;
    double threshold_linear() const { return db_to_linear(threshold_db); }
    bool operator==(const Scenario&) const = default;
};

enum class Metric { Outage, Rate };

std::string to_string(Metric m);
Metric metric_from_string(const std::string& s);

enum class MethodKind { Mpso, Pso, Random, ZeroPhase, InstantaneousGreedy, Fixed };

/// A named phase-design method. Accepted spellings: "mpso" (cell bits),
/// "mpso-b<K>", "pso", "random", "zero-phase", "instantaneous-greedy",
/// "fixed".
struct Method {
    MethodKind kind = MethodKind::ZeroPhase;
    int bits = 0; // 0: use the cell's bits (or continuous for pso/greedy)
    std::string label;

    static Method parse(const std::string& name);
    bool operator==(const Method&) const = default;
};

enum class SweepAxis { TransmitSnrDb, Elements, Antennas, ThresholdDb, Bits };

std::string to_string(SweepAxis a);
SweepAxis axis_from_string(const std::string& s);

struct SweepSpec {
    SweepAxis axis = SweepAxis::TransmitSnrDb;
    std::vector<double> values;
    bool operator==(const SweepSpec&) const = default;
};

struct OptimizerConfig {
    int particles = 200;
    int iterations = 100;
    double mpso_spread = 0.2;
    double inertia_start = 0.9;
    double inertia_end = 0.4;
    double accel_local = 2.0;
    double accel_global = 2.0;
    std::uint64_t seed = 1;

    OptimizerSettings settings() const;
    bool operator==(const OptimizerConfig&) const = default;
};

struct MonteCarloConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t baseline_samples = 20'000; // per-realization greedy is costly
    std::uint64_t seed = 1;
    bool dump_samples = false; // validate also writes raw SNR dumps
    bool operator==(const MonteCarloConfig&) const = default;
};

/// Analytic-vs-MC agreement gate. The binomial-stderr band is widened by an
/// absolute floor covering the irreducible moment-matching model error
/// (the fitted CDF tracks the empirical one to ~1e-2, which at n = 10^6
/// is far coarser than the sampling noise).
struct GateConfig {
    double op_abs_tol = 0.01;
    double rate_abs_tol = 0.03;
    bool operator==(const GateConfig&) const = default;
};

struct ExperimentConfig {
    Scenario scenario;
    Metric metric = Metric::Outage;
    SweepSpec sweep;
    std::vector<Method> methods;
    OptimizerConfig optimizer;
    MonteCarloConfig monte_carlo;
    GateConfig gate;
    std::vector<int> validate_elements; // N list for the validate command
    std::vector<double> overhead_x;     // coherence-interval counts for overhead
    std::string fixed_phase_file;       // for the "fixed" method
    std::string output_dir = "out";

    void validate() const;
    bool operator==(const ExperimentConfig&) const = default;
};

nlohmann::json to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config_file(const std::string& path);

/// Figure-reproduction bundles: fig1, fig2a, fig2b, fig3a, fig3b, fig4a,
/// fig4b, table2.
std::vector<std::string> preset_names();
ExperimentConfig preset(const std::string& name);

/// FNV-1a over the canonical JSON serialization; stamped into CSV headers.
std::uint64_t experiment_fingerprint(const ExperimentConfig& config);

// ---------------------------------------------------------------------------
// Runners

struct RunOptions {
    int jobs = 1;
};

struct ValidateRow {
    int elements = 0;
    double ks = 0.0;
    std::uint64_t samples = 0;
    bool low_sample_warning = false;
    std::string csv_path;
};

struct ValidateResult {
    std::vector<ValidateRow> rows;
    std::string summary_path;
};

ValidateResult run_validate(const ExperimentConfig& config, const RunOptions& opts);

struct SweepCell {
    double axis_value = 0.0;
    std::string method;
    double analytic = std::numeric_limits<double>::quiet_NaN();
    double mc = std::numeric_limits<double>::quiet_NaN();
    double mc_stderr = std::numeric_limits<double>::quiet_NaN();
    std::string status = "ok"; // "ok", "mc-only", or "error: ..."
    bool gate_pass = true;
};

struct SweepResult {
    std::vector<SweepCell> cells;
    std::string csv_path;
    bool gate_ok = true;
};

SweepResult run_sweep(const ExperimentConfig& config, const RunOptions& opts);

struct OptimizeRunResult {
    PhaseVector best;
    double objective_value = 0.0;
    McMetrics mc;
    bool phase_independent = false; // flat convergence trace
    std::string phases_path;
    std::string trace_path;
    std::string report_path;
};

OptimizeRunResult run_optimize(const ExperimentConfig& config, const RunOptions& opts);

struct OverheadRow {
    double coherence_intervals = 0.0;   // x
    double bits_instantaneous = 0.0;    // per element: 32 x
    double bits_statistical = 0.0;      // per element: b
    double reduction_pct = 0.0;         // rounded to two decimals
};

struct OverheadReport {
    std::vector<OverheadRow> rows;
    int bits = 5;
    double continuous_bits = 32.0;
    std::string csv_path;
};

OverheadReport run_overhead(const std::vector<double>& x_list, int bits,
                            double continuous_bits = 32.0, const std::string& out_dir = "");

/// Serialization of a designed phase vector (consumed by the "fixed" method).
void write_phase_file(const std::string& path, const PhaseVector& phases,
                      const std::string& objective_name, double value);
PhaseVector read_phase_file(const std::string& path);

} // namespace irsim::experiments
