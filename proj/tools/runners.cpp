// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "experiment.hpp"
#include "irsim/metrics.hpp"
#include "irsim/rng.hpp"
#include "irsim/snr_moments.hpp"
#include "logging.hpp"

namespace fs = std::filesystem;

namespace irsim::experiments {

namespace {

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_hex(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
    return buf;
}

void ensure_dir(const std::string& dir) {
    if (dir.empty()) return;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file: " + path);
    return out;
}

Scenario cell_scenario(const Scenario& base, SweepAxis axis, double value) {
    Scenario s = base;
    switch (axis) {
        case SweepAxis::TransmitSnrDb: s.transmit_snr_db = value; break;
        case SweepAxis::Elements: s.elements = static_cast<int>(std::llround(value)); break;
        case SweepAxis::Antennas: s.antennas = static_cast<int>(std::llround(value)); break;
        case SweepAxis::ThresholdDb: s.threshold_db = value; break;
        case SweepAxis::Bits: s.bits = static_cast<int>(std::llround(value)); break;
    }
    return s;
}

Objective make_objective(const ExperimentConfig& config, const Scenario& scen) {
    const SystemConfig sys = scen.system_config();
    return config.metric == Metric::Outage ? build_op_objective(sys, scen.threshold_linear())
                                           : build_rate_objective(sys);
}

struct Design {
    PhaseVector phases;
    double analytic = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> trace;
    std::string error;
};

Design design_phases(const ExperimentConfig& config, const Scenario& scen, const Method& method,
                     std::uint64_t seed) {
    Design d;
    try {
        const Objective objective = make_objective(config, scen);
        OptimizerSettings settings = config.optimizer.settings();
        settings.seed = seed;
        switch (method.kind) {
            case MethodKind::Mpso: {
                const int bits = method.bits > 0 ? method.bits : scen.bits;
                OptimizeResult r =
                    mpso_optimize(objective, scen.elements, bits, settings, scen.amplitude);
                d.phases = r.best;
                d.analytic = r.value;
                d.trace = std::move(r.trace);
                return d;
            }
            case MethodKind::Pso: {
                OptimizeResult r = pso_optimize(objective, scen.elements, settings, scen.amplitude);
                d.phases = r.best;
                d.analytic = r.value;
                d.trace = std::move(r.trace);
                return d;
            }
            case MethodKind::Random: {
                rng::Engine eng(seed, 0x52414E44ull);
                std::vector<int> levels(static_cast<std::size_t>(scen.elements));
                for (int& l : levels) l = static_cast<int>(eng.uniform_int(1ull << scen.bits));
                d.phases = PhaseVector::quantized(std::move(levels), scen.bits, scen.amplitude);
                break;
            }
            case MethodKind::ZeroPhase:
                d.phases = PhaseVector::zero_quantized(scen.elements, scen.bits, scen.amplitude);
                break;
            case MethodKind::Fixed:
                d.phases = read_phase_file(config.fixed_phase_file);
                if (d.phases.size() != scen.elements)
                    throw ConfigError("fixed phase file has " + std::to_string(d.phases.size()) +
                                      " elements, cell needs " + std::to_string(scen.elements));
                break;
            case MethodKind::InstantaneousGreedy:
                throw ConfigError("instantaneous-greedy has no statistical design");
        }
        d.analytic = objective.eval(d.phases);
        return d;
    } catch (const Error& e) {
        d.error = e.what();
        return d;
    }
}

std::uint64_t cell_seed(std::uint64_t master, std::size_t axis_idx, std::size_t method_idx) {
    return rng::mix64(master ^ rng::mix64(0x9E37ull + axis_idx * 131 + method_idx * 65537));
}

} // namespace

void write_phase_file(const std::string& path, const PhaseVector& phases,
                      const std::string& objective_name, double value) {
    nlohmann::json j;
    j["amplitude"] = phases.amplitude();
    j["objective"] = objective_name;
    j["value"] = value;
    if (phases.is_quantized()) {
        j["type"] = "quantized";
        j["bits"] = phases.bits();
        j["levels"] = phases.levels();
    } else {
        j["type"] = "continuous";
        j["angles"] = phases.angles();
    }
    auto out = open_output(path);
    out << j.dump(2) << "\n";
    if (!out) throw IoError("short write on phase file: " + path);
}

PhaseVector read_phase_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open phase file: " + path);
    nlohmann::json j;
    try {
        in >> j;
        const double amplitude = j.value("amplitude", 1.0);
        if (j.at("type") == "quantized")
            return PhaseVector::quantized(j.at("levels").get<std::vector<int>>(),
                                          j.at("bits").get<int>(), amplitude);
        return PhaseVector::continuous(j.at("angles").get<std::vector<double>>(), amplitude);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed phase file " + path + ": " + e.what());
    }
}

ValidateResult run_validate(const ExperimentConfig& config, const RunOptions& opts) {
    config.validate();
    if (config.validate_elements.empty())
        throw ConfigError("validate requires a validate.elements list");
    ensure_dir(config.output_dir);

    const std::uint64_t fp = experiment_fingerprint(config);
    ValidateResult result;

    for (std::size_t idx = 0; idx < config.validate_elements.size(); ++idx) {
        const int n_elements = config.validate_elements[idx];
        Scenario scen = config.scenario;
        scen.elements = n_elements;
        const SystemConfig sys = scen.system_config();

        // Reference CDF is checked under a generic (seeded random) design.
        const std::uint64_t seed = cell_seed(config.monte_carlo.seed, idx, 0);
        rng::Engine eng(seed, 0x56414Cull);
        std::vector<int> levels(static_cast<std::size_t>(n_elements));
        for (int& l : levels) l = static_cast<int>(eng.uniform_int(1ull << scen.bits));
        const PhaseVector phases = PhaseVector::quantized(levels, scen.bits, scen.amplitude);

        const GammaFit fit = fit_snr_distribution(sys, phases);
        SnrSampleSet set = simulate_snr(sys, phases, config.monte_carlo.samples, seed, opts.jobs);
        const double ks = ks_statistic(set.samples, [&fit](double x) { return gamma_cdf(fit, x); });

        if (config.monte_carlo.dump_samples)
            write_sample_dump(config.output_dir + "/samples_N" + std::to_string(n_elements) + ".bin",
                              set.samples);

        std::sort(set.samples.begin(), set.samples.end());
        const std::string csv_path =
            config.output_dir + "/validate_N" + std::to_string(n_elements) + ".csv";
        auto out = open_output(csv_path);
        out << "# irsim validate v1 fingerprint=" << fmt_hex(fp) << " seed=" << seed
            << " elements=" << n_elements << " samples=" << set.count() << "\n";
        out << "snr_db,empirical_cdf,gamma_cdf\n";
        const std::size_t rows = std::min<std::size_t>(512, set.count());
        for (std::size_t r = 0; r < rows; ++r) {
            const std::size_t i =
                std::min(set.count() - 1,
                         static_cast<std::size_t>((r + 0.5) * static_cast<double>(set.count()) / rows));
            const double snr = set.samples[i];
            const double emp = (static_cast<double>(i) + 1.0) / static_cast<double>(set.count());
            out << fmt(linear_to_db(snr)) << "," << fmt(emp) << "," << fmt(gamma_cdf(fit, snr))
                << "\n";
        }
        if (!out) throw IoError("short write on " + csv_path);

        ValidateRow row;
        row.elements = n_elements;
        row.ks = ks;
        row.samples = set.count();
        row.low_sample_warning = set.count() < 1000;
        row.csv_path = csv_path;
        if (row.low_sample_warning)
            log_warn("validate: only " + std::to_string(set.count()) +
                     " samples, KS estimate unreliable");
        log_info("validate N=" + std::to_string(n_elements) + " KS=" + fmt(ks));
        result.rows.push_back(std::move(row));
    }

    result.summary_path = config.output_dir + "/validate_summary.csv";
    auto out = open_output(result.summary_path);
    out << "# irsim validate-summary v1 fingerprint=" << fmt_hex(fp) << " seed="
        << config.monte_carlo.seed << "\n";
    out << "elements,samples,ks,low_sample_warning\n";
    for (const ValidateRow& r : result.rows)
        out << r.elements << "," << r.samples << "," << fmt(r.ks) << ","
            << (r.low_sample_warning ? 1 : 0) << "\n";
    if (!out) throw IoError("short write on " + result.summary_path);
    return result;
}

SweepResult run_sweep(const ExperimentConfig& config, const RunOptions& opts) {
    config.validate();
    if (config.sweep.values.empty()) throw ConfigError("sweep requires a sweep.values list");
    if (config.methods.empty()) throw ConfigError("sweep requires a methods list");
    ensure_dir(config.output_dir);

    const std::uint64_t fp = experiment_fingerprint(config);
    SweepResult result;

    for (std::size_t vi = 0; vi < config.sweep.values.size(); ++vi) {
        const double value = config.sweep.values[vi];
        const Scenario scen = cell_scenario(config.scenario, config.sweep.axis, value);
        const SystemConfig sys = scen.system_config();
        const double gamma_th = scen.threshold_linear();

        for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
            const Method& method = config.methods[mi];
            const std::uint64_t seed = cell_seed(config.monte_carlo.seed, vi, mi);
            SweepCell cell;
            cell.axis_value = value;
            cell.method = method.label;

            try {
                if (method.kind == MethodKind::InstantaneousGreedy) {
                    const McMetrics mc = simulate_baseline_metrics(
                        sys, 0, config.monte_carlo.baseline_samples, seed, gamma_th, opts.jobs);
                    cell.mc = config.metric == Metric::Outage ? mc.outage : mc.rate;
                    cell.mc_stderr =
                        config.metric == Metric::Outage ? mc.outage_stderr : mc.rate_stderr;
                    cell.status = "mc-only";
                } else {
                    const Design d = design_phases(config, scen, method, seed);
                    if (!d.error.empty()) {
                        cell.status = "error: " + d.error;
                        log_warn("sweep cell (" + fmt(value) + ", " + method.label +
                                 ") failed: " + d.error);
                    } else {
                        cell.analytic = d.analytic;
                        const McMetrics mc = simulate_metrics(sys, d.phases,
                                                              config.monte_carlo.samples, seed,
                                                              gamma_th, opts.jobs);
                        cell.mc = config.metric == Metric::Outage ? mc.outage : mc.rate;
                        cell.mc_stderr =
                            config.metric == Metric::Outage ? mc.outage_stderr : mc.rate_stderr;
                        const double tol = config.metric == Metric::Outage
                                               ? std::max(3.0 * cell.mc_stderr, config.gate.op_abs_tol)
                                               : std::max(3.0 * cell.mc_stderr,
                                                          config.gate.rate_abs_tol);
                        cell.gate_pass = std::abs(cell.analytic - cell.mc) <= tol;
                        if (!cell.gate_pass) {
                            result.gate_ok = false;
                            log_error("analytic/MC gate failed at (" + fmt(value) + ", " +
                                      method.label + "): analytic=" + fmt(cell.analytic) +
                                      " mc=" + fmt(cell.mc) + " stderr=" + fmt(cell.mc_stderr));
                        }
                    }
                }
            } catch (const Error& e) {
                cell.status = std::string("error: ") + e.what();
                log_warn("sweep cell (" + fmt(value) + ", " + method.label + ") failed: " + e.what());
            }
            log_info("sweep " + to_string(config.sweep.axis) + "=" + fmt(value) + " " +
                     method.label + ": analytic=" + fmt(cell.analytic) + " mc=" + fmt(cell.mc));
            result.cells.push_back(std::move(cell));
        }
    }

    result.csv_path = config.output_dir + "/sweep.csv";
    auto out = open_output(result.csv_path);
    out << "# irsim sweep v1 fingerprint=" << fmt_hex(fp) << " seed=" << config.monte_carlo.seed
        << " metric=" << to_string(config.metric) << " axis=" << to_string(config.sweep.axis)
        << "\n";
    out << "axis_value,method,analytic_metric,mc_metric,mc_stderr,status\n";
    for (const SweepCell& c : result.cells)
        out << fmt(c.axis_value) << "," << c.method << "," << fmt(c.analytic) << "," << fmt(c.mc)
            << "," << fmt(c.mc_stderr) << "," << c.status << "\n";
    if (!out) throw IoError("short write on " + result.csv_path);
    return result;
}

OptimizeRunResult run_optimize(const ExperimentConfig& config, const RunOptions& opts) {
    config.validate();
    if (config.methods.empty()) throw ConfigError("optimize requires a methods list");
    const Method& method = config.methods.front();
    if (method.kind == MethodKind::InstantaneousGreedy || method.kind == MethodKind::Fixed)
        throw ConfigError("optimize requires a statistical design method (mpso-bK or pso)");
    ensure_dir(config.output_dir);

    const Scenario& scen = config.scenario;
    const SystemConfig sys = scen.system_config();
    const std::uint64_t seed = config.optimizer.seed;

    const Design d = design_phases(config, scen, method, seed);
    if (!d.error.empty()) throw ConfigError("optimizer failed: " + d.error);

    OptimizeRunResult result;
    result.best = d.phases;
    result.objective_value = d.analytic;
    if (!d.trace.empty()) {
        const double spread = *std::max_element(d.trace.begin(), d.trace.end()) -
                              *std::min_element(d.trace.begin(), d.trace.end());
        result.phase_independent = spread <= 1e-12 * std::max(1.0, std::abs(d.trace.front()));
    }
    result.mc = simulate_metrics(sys, d.phases, config.monte_carlo.samples,
                                 config.monte_carlo.seed, scen.threshold_linear(), opts.jobs);

    const std::string objective_name =
        config.metric == Metric::Outage ? "outage-probability" : "ergodic-rate";
    result.phases_path = config.output_dir + "/phases.json";
    write_phase_file(result.phases_path, d.phases, objective_name, d.analytic);

    result.trace_path = config.output_dir + "/trace.csv";
    {
        auto out = open_output(result.trace_path);
        out << "# irsim trace v1 fingerprint=" << fmt_hex(experiment_fingerprint(config))
            << " seed=" << seed << " method=" << method.label << "\n";
        out << "iteration,best_value\n";
        for (std::size_t i = 0; i < d.trace.size(); ++i)
            out << (i + 1) << "," << fmt(d.trace[i]) << "\n";
        if (!out) throw IoError("short write on " + result.trace_path);
    }

    result.report_path = config.output_dir + "/report.json";
    {
        nlohmann::json j;
        j["method"] = method.label;
        j["objective"] = objective_name;
        j["value"] = result.objective_value;
        j["phase_independent"] = result.phase_independent;
        j["mc"] = {{"outage", result.mc.outage},
                   {"outage_stderr", result.mc.outage_stderr},
                   {"rate", result.mc.rate},
                   {"rate_stderr", result.mc.rate_stderr},
                   {"mean_snr", result.mc.mean_snr},
                   {"samples", result.mc.count}};
        auto out = open_output(result.report_path);
        out << j.dump(2) << "\n";
        if (!out) throw IoError("short write on " + result.report_path);
    }

    if (result.phase_independent)
        log_info("objective is phase-independent over the search (flat trace)");
    log_info("optimize " + method.label + ": value=" + fmt(result.objective_value) +
             " mc_outage=" + fmt(result.mc.outage) + " mc_rate=" + fmt(result.mc.rate));
    return result;
}

OverheadReport run_overhead(const std::vector<double>& x_list, int bits, double continuous_bits,
                            const std::string& out_dir) {
    if (bits < 1) throw ConfigError("overhead requires b >= 1");
    if (continuous_bits <= 0.0) throw ConfigError("overhead requires positive continuous bits");
    OverheadReport report;
    report.bits = bits;
    report.continuous_bits = continuous_bits;
    for (double x : x_list) {
        if (x < 1.0) throw ConfigError("overhead requires x >= 1");
        OverheadRow row;
        row.coherence_intervals = x;
        row.bits_instantaneous = continuous_bits * x;
        row.bits_statistical = bits;
        const double reduction = (1.0 - bits / (continuous_bits * x)) * 100.0;
        row.reduction_pct = std::round(reduction * 100.0) / 100.0;
        report.rows.push_back(row);
    }
    if (!out_dir.empty()) {
        ensure_dir(out_dir);
        report.csv_path = out_dir + "/overhead.csv";
        auto out = open_output(report.csv_path);
        out << "# irsim overhead v1 bits=" << bits << " continuous_bits=" << fmt(continuous_bits)
            << " (bit counts are per IRS element)\n";
        out << "x,bits_instantaneous,bits_statistical,reduction_pct\n";
        char buf[64];
        for (const OverheadRow& r : report.rows) {
            std::snprintf(buf, sizeof buf, "%g,%g,%g,%.2f\n", r.coherence_intervals,
                          r.bits_instantaneous, r.bits_statistical, r.reduction_pct);
            out << buf;
        }
        if (!out) throw IoError("short write on " + report.csv_path);
    }
    return report;
}

} // namespace irsim::experiments
