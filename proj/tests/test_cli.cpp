// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks
//
// End-to-end checks of the installed binary: exit codes and stdout shape.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, const std::string& env = "",
              bool capture_stderr = false) {
    const std::string cmd = env + " " + std::string(IRS_SIM_BINARY) + " " + args +
                            (capture_stderr ? " 2>&1" : " 2>/dev/null");
    std::array<char, 4096> buf{};
    RunResult r;
    std::FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    while (std::fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("overhead subcommand prints the exact reduction table") {
    const RunResult r = run("overhead --x 10 20 30 40 50 --bits 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("10,320,5,98.44") != std::string::npos);
    CHECK(r.output.find("20,640,5,99.22") != std::string::npos);
    CHECK(r.output.find("30,960,5,99.48") != std::string::npos);
    CHECK(r.output.find("40,1280,5,99.61") != std::string::npos);
    CHECK(r.output.find("50,1600,5,99.69") != std::string::npos);
}

TEST_CASE("missing config is a config error (exit 2)") {
    CHECK(run("sweep").exit_code == 2);
    CHECK(run("validate --config /nonexistent.json").exit_code == 4);
    CHECK(run("sweep --preset fig9").exit_code == 2);
}

TEST_CASE("unwritable output directory is an I/O error (exit 4)") {
    const fs::path cfg_path = fs::temp_directory_path() / "irsim_cli_cfg.json";
    {
        std::ofstream out(cfg_path);
        out << R"({"scenario": {"elements": 4, "bits": 2},
                   "metric": "op",
                   "validate": {"elements": [4]},
                   "monte_carlo": {"samples": 500, "seed": 3}})";
    }
    const RunResult r =
        run("validate --config " + cfg_path.string() + " --out /proc/irsim_forbidden");
    CHECK(r.exit_code == 4);
    fs::remove(cfg_path);
}

TEST_CASE("IRS_LOG_LEVEL controls stderr verbosity") {
    const fs::path cfg_path = fs::temp_directory_path() / "irsim_cli_log.json";
    const fs::path out_dir = fs::temp_directory_path() / "irsim_cli_log_out";
    {
        std::ofstream out(cfg_path);
        out << R"({"scenario": {"elements": 4, "bits": 2},
                   "validate": {"elements": [4]},
                   "monte_carlo": {"samples": 500, "seed": 3}})";
    }
    const std::string args = "validate --config " + cfg_path.string() + " --out " + out_dir.string();
    const RunResult verbose = run(args, "IRS_LOG_LEVEL=info", true);
    CHECK(verbose.output.find("[info]") != std::string::npos);
    const RunResult quiet = run(args, "IRS_LOG_LEVEL=error", true);
    CHECK(quiet.output.find("[info]") == std::string::npos);
    fs::remove(cfg_path);
    fs::remove_all(out_dir);
}

TEST_CASE("analytic/MC gate failure exits with code 3") {
    const fs::path cfg_path = fs::temp_directory_path() / "irsim_cli_gate.json";
    const fs::path out_dir = fs::temp_directory_path() / "irsim_cli_gate_out";
    {
        std::ofstream out(cfg_path);
        // zero tolerance floor turns the irreducible model error into a
        // gate violation at large n
        out << R"({"metric": "op",
                   "sweep": {"axis": "transmit_snr_db", "values": [70]},
                   "methods": ["zero-phase"],
                   "monte_carlo": {"samples": 500000, "seed": 5},
                   "gate": {"op_abs_tol": 0.0}})";
    }
    const RunResult r =
        run("sweep --config " + cfg_path.string() + " --out " + out_dir.string() + " --jobs 2");
    CHECK(r.exit_code == 3);
    fs::remove(cfg_path);
    fs::remove_all(out_dir);
}

TEST_CASE("validate runs end to end from a config file") {
    const fs::path cfg_path = fs::temp_directory_path() / "irsim_cli_ok.json";
    const fs::path out_dir = fs::temp_directory_path() / "irsim_cli_out";
    fs::remove_all(out_dir);
    {
        std::ofstream out(cfg_path);
        out << R"({"scenario": {"elements": 4, "bits": 2},
                   "metric": "op",
                   "validate": {"elements": [4]},
                   "monte_carlo": {"samples": 2000, "seed": 3}})";
    }
    const RunResult r = run("validate --config " + cfg_path.string() + " --out " +
                            out_dir.string() + " --jobs 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("KS=") != std::string::npos);
    CHECK(fs::exists(out_dir / "validate_N4.csv"));
    fs::remove(cfg_path);
    fs::remove_all(out_dir);
}
