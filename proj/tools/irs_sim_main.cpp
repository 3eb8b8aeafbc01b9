// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks
//
// Command-line front end: validate | sweep | optimize | overhead.
// Exit codes: 0 success, 2 config error, 3 analytic/MC gate failure,
// 4 I/O error.

#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "experiment.hpp"
#include "logging.hpp"

using namespace irsim;
using namespace irsim::experiments;

namespace {

struct CommonArgs {
    std::string config_path;
    std::string preset_name;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> mc_samples;
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "Experiment config file (JSON)");
    cmd->add_option("--preset", args.preset_name,
                    "Built-in preset (fig1, fig2a, fig2b, fig3a, fig3b, fig4a, fig4b, table2)");
    cmd->add_option("--out", args.out_dir, "Output directory (overrides config)");
    cmd->add_option("--seed", args.seed, "Master seed (overrides config)");
    cmd->add_option("--mc-samples", args.mc_samples, "Monte Carlo sample count (overrides config)");
    cmd->add_option("--jobs", args.jobs, "Worker thread count")->check(CLI::PositiveNumber);
}

ExperimentConfig resolve_config(const CommonArgs& args) {
    ExperimentConfig config;
    if (!args.config_path.empty() && !args.preset_name.empty())
        throw ConfigError("--config and --preset are mutually exclusive");
    if (!args.config_path.empty())
        config = load_config_file(args.config_path);
    else if (!args.preset_name.empty())
        config = preset(args.preset_name);
    else
        throw ConfigError("either --config or --preset is required");
    if (!args.out_dir.empty()) config.output_dir = args.out_dir;
    if (args.seed) {
        config.monte_carlo.seed = *args.seed;
        config.optimizer.seed = *args.seed;
    }
    if (args.mc_samples) config.monte_carlo.samples = *args.mc_samples;
    return config;
}

int dispatch(const std::string& command, const CommonArgs& args,
             const std::vector<double>& overhead_x, int overhead_bits) {
    if (command == "overhead") {
        // Overhead needs no scenario; allow running straight from flags.
        std::vector<double> x = overhead_x;
        int bits = overhead_bits;
        std::string out_dir = args.out_dir;
        if (!args.config_path.empty() || !args.preset_name.empty()) {
            const ExperimentConfig config = resolve_config(args);
            if (x.empty()) x = config.overhead_x;
            if (bits == 0) bits = config.scenario.bits;
            if (out_dir.empty()) out_dir = config.output_dir;
        }
        if (x.empty()) x = {10, 20, 30, 40, 50};
        if (bits == 0) bits = 5;
        const OverheadReport report = run_overhead(x, bits, 32.0, out_dir);
        std::printf("x,bits_instantaneous,bits_statistical,reduction_pct\n");
        for (const OverheadRow& r : report.rows)
            std::printf("%g,%g,%g,%.2f\n", r.coherence_intervals, r.bits_instantaneous,
                        r.bits_statistical, r.reduction_pct);
        return 0;
    }

    const ExperimentConfig config = resolve_config(args);
    const RunOptions opts{args.jobs};

    if (command == "validate") {
        const ValidateResult result = run_validate(config, opts);
        for (const ValidateRow& r : result.rows)
            std::printf("N=%d samples=%llu KS=%.6f%s -> %s\n", r.elements,
                        static_cast<unsigned long long>(r.samples), r.ks,
                        r.low_sample_warning ? " (low-sample warning)" : "", r.csv_path.c_str());
        return 0;
    }
    if (command == "sweep") {
        const SweepResult result = run_sweep(config, opts);
        std::printf("wrote %s (%zu cells)\n", result.csv_path.c_str(), result.cells.size());
        if (!result.gate_ok) {
            log_error("analytic/MC agreement gate failed; see rows above");
            return 3;
        }
        return 0;
    }
    if (command == "optimize") {
        const OptimizeRunResult result = run_optimize(config, opts);
        std::printf("value=%.12g phases=%s trace=%s report=%s\n", result.objective_value,
                    result.phases_path.c_str(), result.trace_path.c_str(),
                    result.report_path.c_str());
        return 0;
    }
    throw ConfigError("unknown command " + command);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"irsim - statistical-CSI IRS phase-shift design experiments"};
    app.require_subcommand(1);

    CommonArgs args;
    std::vector<double> overhead_x;
    int overhead_bits = 0;

    CLI::App* validate = app.add_subcommand("validate", "Fitted-vs-empirical SNR CDF comparison");
    add_common(validate, args);
    CLI::App* sweep = app.add_subcommand("sweep", "Metric curves over a parameter sweep");
    add_common(sweep, args);
    CLI::App* optimize = app.add_subcommand("optimize", "Single-scenario phase optimization");
    add_common(optimize, args);
    CLI::App* overhead = app.add_subcommand("overhead", "BS-to-IRS signaling overhead table");
    add_common(overhead, args);
    overhead->add_option("--x", overhead_x, "Coherence-interval counts");
    overhead->add_option("--bits", overhead_bits, "Quantization bits for the statistical design");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), args, overhead_x, overhead_bits);
    } catch (const IoError& e) {
        log_error(e.what());
        return 4;
    } catch (const ConfigError& e) {
        log_error(e.what());
        return 2;
    } catch (const Error& e) {
        log_error(e.what());
        return 1;
    }
}
