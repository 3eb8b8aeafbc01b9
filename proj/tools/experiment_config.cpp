// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#include "experiment.hpp"

#include <fstream>

namespace irsim::experiments {

double distance(const Point2& a, const Point2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

SystemConfig Scenario::system_config() const {
    SystemConfig c;
    c.antennas = antennas;
    c.elements = elements;
    c.bits = bits;
    c.amplitude = amplitude;
    c.transmit_snr = db_to_linear(transmit_snr_db);
    c.sd = link_stats({distance(bs, user), pathloss_sd, rice_sd});
    c.sr = link_stats({distance(bs, irs), pathloss_sr, rice_sr});
    c.rd = link_stats({distance(irs, user), pathloss_rd, rice_rd});
    c.validate();
    return c;
}

std::string to_string(Metric m) { return m == Metric::Outage ? "op" : "rate"; }

Metric metric_from_string(const std::string& s) {
    if (s == "op") return Metric::Outage;
    if (s == "rate") return Metric::Rate;
    throw ConfigError("unknown metric '" + s + "' (expected op|rate)");
}

Method Method::parse(const std::string& name) {
    Method m;
    m.label = name;
    if (name == "pso") {
        m.kind = MethodKind::Pso;
    } else if (name == "random") {
        m.kind = MethodKind::Random;
    } else if (name == "zero-phase") {
        m.kind = MethodKind::ZeroPhase;
    } else if (name == "instantaneous-greedy") {
        m.kind = MethodKind::InstantaneousGreedy;
    } else if (name == "fixed") {
        m.kind = MethodKind::Fixed;
    } else if (name == "mpso") {
        m.kind = MethodKind::Mpso;
    } else if (name.rfind("mpso-b", 0) == 0) {
        m.kind = MethodKind::Mpso;
        try {
            m.bits = std::stoi(name.substr(6));
        } catch (const std::exception&) {
            throw ConfigError("bad method name '" + name + "' (expected mpso-b<K>)");
        }
        if (m.bits < 1 || m.bits > 16) throw ConfigError("method '" + name + "': bits out of range");
    } else {
        throw ConfigError("unknown method '" + name + "'");
    }
    return m;
}

std::string to_string(SweepAxis a) {
    switch (a) {
        case SweepAxis::TransmitSnrDb: return "transmit_snr_db";
        case SweepAxis::Elements: return "elements";
        case SweepAxis::Antennas: return "antennas";
        case SweepAxis::ThresholdDb: return "threshold_db";
        case SweepAxis::Bits: return "bits";
    }
    return "?";
}

SweepAxis axis_from_string(const std::string& s) {
    if (s == "transmit_snr_db") return SweepAxis::TransmitSnrDb;
    if (s == "elements") return SweepAxis::Elements;
    if (s == "antennas") return SweepAxis::Antennas;
    if (s == "threshold_db") return SweepAxis::ThresholdDb;
    if (s == "bits") return SweepAxis::Bits;
    throw ConfigError("unknown sweep axis '" + s + "'");
}

OptimizerSettings OptimizerConfig::settings() const {
    OptimizerSettings s;
    s.particles = particles;
    s.max_iterations = iterations;
    s.mpso_spread = mpso_spread;
    s.pso_inertia_start = inertia_start;
    s.pso_inertia_end = inertia_end;
    s.pso_accel_local = accel_local;
    s.pso_accel_global = accel_global;
    s.seed = seed;
    s.validate();
    return s;
}

void ExperimentConfig::validate() const {
    scenario.system_config();
    optimizer.settings();
    if (monte_carlo.samples < 1) throw ConfigError("monte_carlo.samples must be >= 1");
    if (sweep.values.empty() && validate_elements.empty() && overhead_x.empty())
        throw ConfigError("config needs a sweep value list, a validate element list or an overhead x list");
    for (double v : sweep.values)
        if (!std::isfinite(v)) throw ConfigError("sweep values must be finite");
    if (gate.op_abs_tol < 0.0 || gate.rate_abs_tol < 0.0)
        throw ConfigError("gate tolerances must be nonnegative");
    for (const Method& m : methods)
        if (m.kind == MethodKind::Fixed && fixed_phase_file.empty())
            throw ConfigError("method 'fixed' requires fixed_phase_file");
}

namespace {

nlohmann::json scenario_to_json(const Scenario& s) {
    return nlohmann::json{
        {"bs", {s.bs.x, s.bs.y}},
        {"irs", {s.irs.x, s.irs.y}},
        {"user", {s.user.x, s.user.y}},
        {"pathloss_exponents", {{"sd", s.pathloss_sd}, {"sr", s.pathloss_sr}, {"rd", s.pathloss_rd}}},
        {"rice_factors", {{"sd", s.rice_sd}, {"sr", s.rice_sr}, {"rd", s.rice_rd}}},
        {"amplitude", s.amplitude},
        {"antennas", s.antennas},
        {"elements", s.elements},
        {"bits", s.bits},
        {"transmit_snr_db", s.transmit_snr_db},
        {"threshold_db", s.threshold_db},
    };
}

Point2 point_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw ConfigError("placement must be a [x, y] pair");
    return Point2{j[0].get<double>(), j[1].get<double>()};
}

Scenario scenario_from_json(const nlohmann::json& j) {
    Scenario s;
    if (j.contains("bs")) s.bs = point_from_json(j.at("bs"));
    if (j.contains("irs")) s.irs = point_from_json(j.at("irs"));
    if (j.contains("user")) s.user = point_from_json(j.at("user"));
    if (j.contains("pathloss_exponents")) {
        const auto& p = j.at("pathloss_exponents");
        s.pathloss_sd = p.value("sd", s.pathloss_sd);
        s.pathloss_sr = p.value("sr", s.pathloss_sr);
        s.pathloss_rd = p.value("rd", s.pathloss_rd);
    }
    if (j.contains("rice_factors")) {
        const auto& k = j.at("rice_factors");
        s.rice_sd = k.value("sd", s.rice_sd);
        s.rice_sr = k.value("sr", s.rice_sr);
        s.rice_rd = k.value("rd", s.rice_rd);
    }
    s.amplitude = j.value("amplitude", s.amplitude);
    s.antennas = j.value("antennas", s.antennas);
    s.elements = j.value("elements", s.elements);
    s.bits = j.value("bits", s.bits);
    s.transmit_snr_db = j.value("transmit_snr_db", s.transmit_snr_db);
    s.threshold_db = j.value("threshold_db", s.threshold_db);
    return s;
}

} // namespace

nlohmann::json to_json(const ExperimentConfig& c) {
    nlohmann::json j;
    j["scenario"] = scenario_to_json(c.scenario);
    j["metric"] = to_string(c.metric);
    if (!c.sweep.values.empty())
        j["sweep"] = {{"axis", to_string(c.sweep.axis)}, {"values", c.sweep.values}};
    std::vector<std::string> method_names;
    for (const Method& m : c.methods) method_names.push_back(m.label);
    j["methods"] = method_names;
    j["optimizer"] = {{"particles", c.optimizer.particles},
                      {"iterations", c.optimizer.iterations},
                      {"mpso_spread", c.optimizer.mpso_spread},
                      {"pso_inertia", {c.optimizer.inertia_start, c.optimizer.inertia_end}},
                      {"pso_accel", {c.optimizer.accel_local, c.optimizer.accel_global}},
                      {"seed", c.optimizer.seed}};
    j["monte_carlo"] = {{"samples", c.monte_carlo.samples},
                        {"baseline_samples", c.monte_carlo.baseline_samples},
                        {"seed", c.monte_carlo.seed},
                        {"dump_samples", c.monte_carlo.dump_samples}};
    j["gate"] = {{"op_abs_tol", c.gate.op_abs_tol}, {"rate_abs_tol", c.gate.rate_abs_tol}};
    if (!c.validate_elements.empty()) j["validate"] = {{"elements", c.validate_elements}};
    if (!c.overhead_x.empty()) j["overhead"] = {{"x", c.overhead_x}};
    if (!c.fixed_phase_file.empty()) j["fixed_phase_file"] = c.fixed_phase_file;
    j["output_dir"] = c.output_dir;
    return j;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    try {
        ExperimentConfig c;
        if (j.contains("scenario")) c.scenario = scenario_from_json(j.at("scenario"));
        if (j.contains("metric")) c.metric = metric_from_string(j.at("metric").get<std::string>());
        if (j.contains("sweep")) {
            c.sweep.axis = axis_from_string(j.at("sweep").at("axis").get<std::string>());
            c.sweep.values = j.at("sweep").at("values").get<std::vector<double>>();
        }
        if (j.contains("methods"))
            for (const auto& name : j.at("methods")) c.methods.push_back(Method::parse(name.get<std::string>()));
        if (j.contains("optimizer")) {
            const auto& o = j.at("optimizer");
            c.optimizer.particles = o.value("particles", c.optimizer.particles);
            c.optimizer.iterations = o.value("iterations", c.optimizer.iterations);
            c.optimizer.mpso_spread = o.value("mpso_spread", c.optimizer.mpso_spread);
            if (o.contains("pso_inertia")) {
                c.optimizer.inertia_start = o.at("pso_inertia").at(0).get<double>();
                c.optimizer.inertia_end = o.at("pso_inertia").at(1).get<double>();
            }
            if (o.contains("pso_accel")) {
                c.optimizer.accel_local = o.at("pso_accel").at(0).get<double>();
                c.optimizer.accel_global = o.at("pso_accel").at(1).get<double>();
            }
            c.optimizer.seed = o.value("seed", c.optimizer.seed);
        }
        if (j.contains("monte_carlo")) {
            const auto& m = j.at("monte_carlo");
            c.monte_carlo.samples = m.value("samples", c.monte_carlo.samples);
            c.monte_carlo.baseline_samples = m.value("baseline_samples", c.monte_carlo.baseline_samples);
            c.monte_carlo.seed = m.value("seed", c.monte_carlo.seed);
            c.monte_carlo.dump_samples = m.value("dump_samples", c.monte_carlo.dump_samples);
        }
        if (j.contains("gate")) {
            c.gate.op_abs_tol = j.at("gate").value("op_abs_tol", c.gate.op_abs_tol);
            c.gate.rate_abs_tol = j.at("gate").value("rate_abs_tol", c.gate.rate_abs_tol);
        }
        if (j.contains("validate"))
            c.validate_elements = j.at("validate").at("elements").get<std::vector<int>>();
        if (j.contains("overhead"))
            c.overhead_x = j.at("overhead").at("x").get<std::vector<double>>();
        c.fixed_phase_file = j.value("fixed_phase_file", c.fixed_phase_file);
        c.output_dir = j.value("output_dir", c.output_dir);
        c.validate();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config parse failure in " + path + ": " + e.what());
    }
    return config_from_json(j);
}

std::vector<std::string> preset_names() {
    return {"fig1", "fig2a", "fig2b", "fig3a", "fig3b", "fig4a", "fig4b", "table2"};
}

ExperimentConfig preset(const std::string& name) {
    ExperimentConfig c; // scenario defaults already carry the reference setup
    auto methods = [&c](std::initializer_list<const char*> names) {
        c.methods.clear();
        for (const char* n : names) c.methods.push_back(Method::parse(n));
    };

    if (name == "fig1") {
        c.metric = Metric::Outage;
        c.validate_elements = {20, 40};
        c.scenario.bits = 3;
        methods({});
    } else if (name == "fig2a") {
        // OP vs transmit SNR; N = 40, M = 4, threshold 0 dB.
        c.metric = Metric::Outage;
        c.scenario.antennas = 4;
        c.scenario.elements = 40;
        c.scenario.threshold_db = 0.0;
        c.sweep = {SweepAxis::TransmitSnrDb, {69, 70, 71, 72, 73, 74}};
        methods({"mpso-b1", "mpso-b2", "mpso-b5", "pso", "instantaneous-greedy"});
    } else if (name == "fig2b") {
        // OP vs element count; transmit SNR 73 dB.
        c.metric = Metric::Outage;
        c.scenario.antennas = 4;
        c.scenario.transmit_snr_db = 73.0;
        c.scenario.threshold_db = 0.0;
        c.sweep = {SweepAxis::Elements, {10, 20, 30, 40, 50, 60}};
        methods({"mpso-b1", "mpso-b2", "mpso-b5", "pso", "instantaneous-greedy"});
    } else if (name == "fig3a") {
        // OP vs antenna count; threshold 5 dB, N = 20.
        c.metric = Metric::Outage;
        c.scenario.elements = 20;
        c.scenario.transmit_snr_db = 73.0;
        c.scenario.threshold_db = 5.0;
        c.sweep = {SweepAxis::Antennas, {1, 2, 3, 4, 5, 6}};
        methods({"mpso-b1", "mpso-b5", "pso", "instantaneous-greedy"});
    } else if (name == "fig3b") {
        // OP vs threshold; M = 2, N = 20.
        c.metric = Metric::Outage;
        c.scenario.antennas = 2;
        c.scenario.elements = 20;
        c.scenario.transmit_snr_db = 73.0;
        c.sweep = {SweepAxis::ThresholdDb, {-2, 0, 2, 4, 6}};
        methods({"mpso-b1", "mpso-b5", "pso", "instantaneous-greedy"});
    } else if (name == "fig4a") {
        // Ergodic rate vs antenna count; N = 20.
        c.metric = Metric::Rate;
        c.scenario.elements = 20;
        c.scenario.transmit_snr_db = 73.0;
        c.sweep = {SweepAxis::Antennas, {1, 2, 3, 4, 5, 6}};
        methods({"mpso-b5", "pso", "instantaneous-greedy"});
    } else if (name == "fig4b") {
        // Ergodic rate vs transmit SNR; M = 4, N = 40.
        c.metric = Metric::Rate;
        c.scenario.antennas = 4;
        c.scenario.elements = 40;
        c.sweep = {SweepAxis::TransmitSnrDb, {64, 67, 70, 73, 76}};
        methods({"mpso-b5", "pso", "instantaneous-greedy"});
    } else if (name == "table2") {
        c.metric = Metric::Outage;
        c.scenario.bits = 5;
        c.overhead_x = {10, 20, 30, 40, 50};
        methods({});
    } else {
        throw ConfigError("unknown preset '" + name + "' (expected one of fig1, fig2a, fig2b, "
                          "fig3a, fig3b, fig4a, fig4b, table2)");
    }
    c.validate();
    return c;
}

std::uint64_t experiment_fingerprint(const ExperimentConfig& config) {
    const std::string dump = to_json(config).dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : dump) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace irsim::experiments
