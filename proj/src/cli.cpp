// Copyright 2026 The qfluid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qfluid/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qfluid/error.hpp"
#include "qfluid/format.hpp"
#include "qfluid/fourier.hpp"
#include "qfluid/momentum.hpp"
#include "qfluid/noise.hpp"
#include "qfluid/validation.hpp"

namespace qfluid {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr double kPi = std::numbers::pi;

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

double parse_real(std::string_view field, std::string_view text) {
    const auto t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty() || !std::isfinite(v)) {
        throw ConfigError(std::string(field), "expected a real number, got '" + t + "'");
    }
    return v;
}

std::uint64_t parse_unsigned(std::string_view field, std::string_view text) {
    const auto t = trim(text);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
        throw ConfigError(std::string(field), "expected a non-negative integer, got '" + t + "'");
    }
    return v;
}

int parse_int(std::string_view field, std::string_view text) {
    const auto t = trim(text);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
        throw ConfigError(std::string(field), "expected an integer, got '" + t + "'");
    }
    return v;
}

bool parse_bool(std::string_view field, std::string_view text) {
    const auto t = trim(text);
    if (t == "true" || t == "1" || t == "yes" || t == "on") {
        return true;
    }
    if (t == "false" || t == "0" || t == "no" || t == "off") {
        return false;
    }
    throw ConfigError(std::string(field), "expected true or false, got '" + t + "'");
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::ofstream open_out(const fs::path &path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw Error("cannot open " + path.string() + " for writing");
    }
    return os;
}

void write_json(const fs::path &path, const json &j) { open_out(path) << j.dump(2) << '\n'; }

json stats_json(const GateStats &s) {
    return {{"one_qubit_count", s.one_qubit_count},
            {"two_qubit_count", s.two_qubit_count},
            {"logical_depth", s.logical_depth},
            {"lnn_routed_two_qubit_count", s.lnn_routed_two_qubit_count}};
}

json pearson_or_null(std::span<const double> a, std::span<const double> b) {
    try {
        return pearson_r(a, b);
    } catch (const UndefinedCorrelationError &) {
        return nullptr;
    }
}

json pearson_triple(const FlowObservables &a, const FlowObservables &b) {
    return {{"rho", pearson_or_null(a.rho, b.rho)},
            {"jx", pearson_or_null(a.jx, b.jx)},
            {"jy", pearson_or_null(a.jy, b.jy)}};
}

json fit_json(const LinearFit &f) {
    return {{"intercept", f.intercept}, {"slope", f.slope}, {"r_squared", f.r_squared}};
}

json config_json(const RunConfig &c) {
    json times = json::array();
    for (const auto &t : c.times) {
        times.push_back(t.label);
    }
    return {{"nx_qubits", c.nx_qubits},
            {"ny_qubits", c.ny_qubits},
            {"times", times},
            {"initial_form", initial_form_name(c.initial_form)},
            {"aqft_b", c.aqft_b ? json(*c.aqft_b) : json("exact")},
            {"epsilon_over_pi", c.epsilon_over_pi},
            {"time_exponent_p", c.time_exponent_p},
            {"compensate", c.compensate},
            {"periodic_removal", c.periodic_removal},
            {"noise", c.noise},
            {"fidelity_1q", c.fidelity_1q},
            {"fidelity_2q", c.fidelity_2q},
            {"trajectories", c.trajectories},
            {"n_min", c.n_min},
            {"n_max", c.n_max},
            {"empirical_max_n", c.empirical_max_n},
            {"normalization", normalization_name(c.normalization)},
            {"seed", c.seed}};
}

AqftConfig truncated_aqft(const RunConfig &c) {
    AqftConfig a;
    a.threshold_b = c.aqft_b.value_or(std::numeric_limits<std::size_t>::max());
    a.compensate = c.compensate;
    return a;
}

TruncationPolicy truncated_policy(const RunConfig &c) {
    TruncationPolicy p;
    p.epsilon_th = c.epsilon_over_pi * kPi;
    p.periodic_removal = c.periodic_removal;
    return p;
}

json equilibrium_json(const TradeoffCurves &curves, Normalization norm, bool routed,
                      bool &ambiguous) {
    json j{{"normalization", normalization_name(norm)},
           {"hardware_counts", routed ? "routed" : "raw"}};
    try {
        const auto r = equilibrium_point(curves, norm, routed);
        j["status"] = r.n_star ? "crossing" : "none";
        j["n_star"] = r.n_star ? json(*r.n_star) : json(nullptr);
        j["endpoints"] = {{"n_first", r.n_first},
                          {"n_last", r.n_last},
                          {"algorithmic_first", r.algorithmic_first},
                          {"algorithmic_last", r.algorithmic_last},
                          {"hardware_first", r.hardware_first},
                          {"hardware_last", r.hardware_last}};
    } catch (const AmbiguityError &e) {
        ambiguous = true;
        j["status"] = "ambiguous";
        j["n_star"] = nullptr;
        j["message"] = e.what();
    }
    return j;
}

} // namespace

TimePoint parse_time_point(std::string_view text) {
    const auto t = trim(text);
    if (t == "0") {
        return {"0", 0.0, std::nullopt};
    }
    if (t == "pi/4") {
        return {"pi_4", kPi / 4, 2};
    }
    if (t == "pi/2") {
        return {"pi_2", kPi / 2, 1};
    }
    const double v = parse_real("times", t);
    if (v < 0.0) {
        throw ConfigError("times", "negative time '" + t + "'");
    }
    std::string label = format_significant(v, 6);
    std::replace(label.begin(), label.end(), '.', 'p');
    std::replace(label.begin(), label.end(), '+', '_');
    return {label, v, std::nullopt};
}

void RunConfig::validate() const {
    if (nx_qubits < 1 || ny_qubits < 1) {
        throw ConfigError(nx_qubits < 1 ? "nx_qubits" : "ny_qubits", "must be at least 1");
    }
    if (nx_qubits + ny_qubits > max_qubits()) {
        throw ConfigError("nx_qubits", "total of " + std::to_string(nx_qubits + ny_qubits) +
                                           " qubits exceeds the memory guard of " +
                                           std::to_string(max_qubits()));
    }
    if (times.empty()) {
        throw ConfigError("times", "at least one time point is required");
    }
    if (!(epsilon_over_pi >= 0.0 && epsilon_over_pi < 1.0)) {
        throw ConfigError("epsilon_over_pi", "must lie in [0, 1)");
    }
    if (time_exponent_p < 0 || time_exponent_p > 30) {
        throw ConfigError("time_exponent_p", "must lie in [0, 30]");
    }
    if (!(fidelity_1q > 0.0 && fidelity_1q <= 1.0)) {
        throw ConfigError("fidelity_1q", "must lie in (0, 1]");
    }
    if (!(fidelity_2q > 0.0 && fidelity_2q <= 1.0)) {
        throw ConfigError("fidelity_2q", "must lie in (0, 1]");
    }
    if (trajectories < 1) {
        throw ConfigError("trajectories", "must be at least 1");
    }
    scaling().validate();
}

ScalingConfig RunConfig::scaling() const {
    ScalingConfig s;
    s.n_min = n_min;
    s.n_max = n_max;
    s.aqft_b = aqft_b.value_or(std::numeric_limits<std::size_t>::max());
    s.compensate = compensate;
    s.time_exponent_p = time_exponent_p;
    s.epsilon_th = epsilon_over_pi * kPi;
    s.periodic_removal = periodic_removal;
    s.fidelity_2q = fidelity_2q;
    s.empirical_max_n = empirical_max_n;
    s.initial_form = initial_form;
    return s;
}

void apply_setting(RunConfig &cfg, std::string_view key_in, std::string_view value) {
    const auto key = trim(key_in);
    if (key == "nx_qubits") {
        cfg.nx_qubits = parse_unsigned(key, value);
    } else if (key == "ny_qubits") {
        cfg.ny_qubits = parse_unsigned(key, value);
    } else if (key == "times") {
        cfg.times.clear();
        std::string v(value);
        std::stringstream ss(v);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!trim(item).empty()) {
                cfg.times.push_back(parse_time_point(item));
            }
        }
    } else if (key == "initial_form") {
        cfg.initial_form = parse_initial_form(trim(value));
    } else if (key == "aqft_b") {
        if (trim(value) == "exact") {
            cfg.aqft_b.reset();
        } else {
            cfg.aqft_b = parse_unsigned(key, value);
        }
    } else if (key == "epsilon_over_pi") {
        cfg.epsilon_over_pi = parse_real(key, value);
    } else if (key == "time_exponent_p") {
        cfg.time_exponent_p = parse_int(key, value);
    } else if (key == "compensate") {
        cfg.compensate = parse_bool(key, value);
    } else if (key == "periodic_removal") {
        cfg.periodic_removal = parse_bool(key, value);
    } else if (key == "noise") {
        cfg.noise = parse_bool(key, value);
    } else if (key == "fidelity_1q") {
        cfg.fidelity_1q = parse_real(key, value);
    } else if (key == "fidelity_2q") {
        cfg.fidelity_2q = parse_real(key, value);
    } else if (key == "trajectories") {
        cfg.trajectories = parse_unsigned(key, value);
    } else if (key == "threads") {
        cfg.threads = parse_unsigned(key, value);
    } else if (key == "n_min") {
        cfg.n_min = parse_unsigned(key, value);
    } else if (key == "n_max") {
        cfg.n_max = parse_unsigned(key, value);
    } else if (key == "empirical_max_n") {
        cfg.empirical_max_n = parse_unsigned(key, value);
    } else if (key == "normalization") {
        cfg.normalization = parse_normalization(trim(value));
    } else if (key == "output_dir") {
        cfg.output_dir = trim(value);
    } else if (key == "seed") {
        cfg.seed = parse_unsigned(key, value);
    } else if (key == "dump_circuit") {
        cfg.dump_circuit = parse_bool(key, value);
    } else {
        throw ConfigError(key, "unknown configuration key");
    }
}

std::vector<std::pair<std::string, std::string>> parse_config_text(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::string s(text);
    std::stringstream ss(s);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (trim(line).empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno), "expected key = value");
        }
        out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return out;
}

RunConfig load_config(const fs::path &path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw ConfigError("config", "cannot read " + path.string());
    }
    std::stringstream buf;
    buf << is.rdbuf();
    RunConfig cfg;
    for (const auto &[k, v] : parse_config_text(buf.str())) {
        apply_setting(cfg, k, v);
    }
    return cfg;
}

void cmd_simulate(const RunConfig &cfg) {
    cfg.validate();
    const GridSpec grid{cfg.nx_qubits, cfg.ny_qubits};
    const auto field = initial_wavefunction(grid, cfg.initial_form);
    const auto s0 = encode(field);
    const auto aqft = truncated_aqft(cfg);
    const auto policy = truncated_policy(cfg);

    for (const char *sub : {"ideal", "origin", "exp"}) {
        fs::create_directories(cfg.output_dir / sub);
    }
    if (cfg.dump_circuit) {
        fs::create_directories(cfg.output_dir / "circuits");
    }

    json per_time = json::array();
    for (std::size_t i = 0; i < cfg.times.size(); ++i) {
        const auto &tp = cfg.times[i];
        const auto ideal_field = classical_evolve(field, tp.seconds);
        const auto ideal = observables(ideal_field);

        const auto exact_c = build_full_step(cfg.nx_qubits, cfg.ny_qubits, tp.seconds,
                                             AqftConfig::exact(), TruncationPolicy::no_op());
        const auto exact_state = execute(exact_c, s0);
        const auto origin = observables(decode(exact_state, grid, field.stored_norm));

        const auto trunc_c =
            build_full_step(cfg.nx_qubits, cfg.ny_qubits, tp.seconds, aqft, policy);
        FlowObservables exp;
        json noise_info = nullptr;
        if (cfg.noise) {
            const NoiseModel model{cfg.fidelity_1q, cfg.fidelity_2q, cfg.seed + i};
            const auto ens = noisy_execute(trunc_c, s0, model, cfg.trajectories, cfg.threads);
            exp = averaged_observables(ens, grid, field.stored_norm);
            noise_info = {{"trajectories", cfg.trajectories},
                          {"rng_seed", model.rng_seed},
                          {"pauli_events", ens.total_events()}};
        } else {
            exp = observables(decode(execute(trunc_c, s0), grid, field.stored_norm));
        }

        const std::string name = "fields_t" + tp.label + ".csv";
        write_fields_csv(cfg.output_dir / "ideal" / name, grid, ideal);
        write_fields_csv(cfg.output_dir / "origin" / name, grid, origin);
        write_fields_csv(cfg.output_dir / "exp" / name, grid, exp);
        if (cfg.dump_circuit) {
            open_out(cfg.output_dir / "circuits" / ("exact_t" + tp.label + ".txt")) << to_text(exact_c);
            open_out(cfg.output_dir / "circuits" / ("truncated_t" + tp.label + ".txt"))
                << to_text(trunc_c);
        }

        json truncation = {
            {"x", to_json(apply_truncation(decompose_k_squared(cfg.nx_qubits), tp.seconds, policy))},
            {"y", to_json(apply_truncation(decompose_k_squared(cfg.ny_qubits), tp.seconds, policy))}};
        per_time.push_back(
            {{"label", tp.label},
             {"t", tp.seconds},
             {"exponent_p", tp.exponent_p ? json(*tp.exponent_p) : json(nullptr)},
             {"pearson",
              {{"origin_vs_ideal", pearson_triple(origin, ideal)},
               {"exp_vs_ideal", pearson_triple(exp, ideal)},
               {"exp_vs_origin", pearson_triple(exp, origin)}}},
             {"origin_max_amplitude_error",
              max_amplitude_distance_up_to_phase(exact_state, encode(ideal_field))},
             {"mass",
              {{"ideal", total_mass(ideal.rho, grid)},
               {"origin", total_mass(origin.rho, grid)},
               {"exp", total_mass(exp.rho, grid)}}},
             {"stats", {{"exact", stats_json(stats(exact_c))}, {"truncated", stats_json(stats(trunc_c))}}},
             {"truncation", truncation},
             {"noise", noise_info}});
    }
    write_json(cfg.output_dir / "metrics.json",
               {{"timestamp", timestamp_utc()},
                {"config", config_json(cfg)},
                {"reference_targets", {{"rho", 0.933}, {"jx", 0.941}, {"jy", 0.977}}},
                {"times", per_time}});
}

void cmd_scaling(const RunConfig &cfg) {
    cfg.validate();
    const auto curves = scaling_curves(cfg.scaling());
    fs::create_directories(cfg.output_dir);
    {
        auto os = open_out(cfg.output_dir / "scaling.csv");
        os << "n,removed_gates_raw,removed_gates_routed,avoided_error,aqft_bound,"
              "momentum_bound_paper,momentum_bound_tight,empirical_error\n";
        for (const auto &p : curves.points) {
            os << p.n << ',' << p.removed_gates_raw << ',' << p.removed_gates_routed << ','
               << format_significant(p.avoided_error_routed, 12) << ','
               << format_significant(p.aqft_bound, 12) << ','
               << format_significant(p.momentum_bound_paper, 12) << ','
               << format_significant(p.momentum_bound_tight, 12) << ','
               << (p.empirical_error ? format_significant(*p.empirical_error, 12) : "") << '\n';
        }
    }

    std::vector<double> n, n2, aq, mp, mt, rr, rt;
    for (const auto &p : curves.points) {
        const auto x = static_cast<double>(p.n);
        n.push_back(x);
        n2.push_back(x * x);
        aq.push_back(p.aqft_bound);
        mp.push_back(p.momentum_bound_paper);
        mt.push_back(p.momentum_bound_tight);
        rr.push_back(static_cast<double>(p.removed_gates_raw));
        rt.push_back(static_cast<double>(p.removed_gates_routed));
    }
    json fits = {{"n_min", cfg.n_min}, {"n_max", cfg.n_max}};
    if (n.size() >= 2) {
        fits["aqft_bound_vs_n"] = fit_json(fit_linear(n, aq));
        fits["momentum_bound_paper_vs_n2"] = fit_json(fit_linear(n2, mp));
        fits["momentum_bound_tight_vs_n2"] = fit_json(fit_linear(n2, mt));
        fits["removed_gates_raw_vs_n2"] = fit_json(fit_linear(n2, rr));
        fits["removed_gates_routed_vs_n2"] = fit_json(fit_linear(n2, rt));
    }
    write_json(cfg.output_dir / "fits.json", fits);

    const auto s = cfg.scaling();
    bool ambiguous = false;
    write_json(cfg.output_dir / "pins.json",
               {{"empirical_error",
                 {{"n", 10},
                  {"b", cfg.aqft_b ? json(*cfg.aqft_b) : json("exact")},
                  {"p", s.time_exponent_p},
                  {"epsilon_over_pi", cfg.epsilon_over_pi},
                  {"value", empirical_algorithmic_error(10, s.aqft_b, s.time_exponent_p, s.epsilon_th,
                                                        s.compensate, s.periodic_removal,
                                                        s.initial_form)}}},
                {"equilibrium", equilibrium_json(curves, cfg.normalization, true, ambiguous)}});
}

bool cmd_tradeoff(const RunConfig &cfg, const std::optional<fs::path> &curves_csv) {
    cfg.validate();
    fs::create_directories(cfg.output_dir);
    bool ambiguous = false;
    json report{{"normalization", normalization_name(cfg.normalization)}};

    if (curves_csv) {
        std::ifstream is(*curves_csv, std::ios::binary);
        if (!is) {
            throw ConfigError("curves", "cannot read " + curves_csv->string());
        }
        std::string line;
        std::getline(is, line);
        std::vector<std::string> header;
        {
            std::stringstream hs(line);
            std::string h;
            while (std::getline(hs, h, ',')) {
                header.push_back(trim(h));
            }
        }
        auto col = [&](const std::string &name) {
            const auto it = std::find(header.begin(), header.end(), name);
            if (it == header.end()) {
                throw ConfigError("curves", "missing column '" + name + "'");
            }
            return static_cast<std::size_t>(it - header.begin());
        };
        const auto cn = col("n");
        const auto ca = col("algorithmic");
        const auto ch = col("hardware");
        std::vector<double> n, a, h;
        while (std::getline(is, line)) {
            if (trim(line).empty()) {
                continue;
            }
            std::vector<std::string> cells;
            std::stringstream ls(line);
            std::string c;
            while (std::getline(ls, c, ',')) {
                cells.push_back(c);
            }
            if (cells.size() < header.size()) {
                throw ConfigError("curves", "short row '" + line + "'");
            }
            n.push_back(parse_real("curves", cells[cn]));
            a.push_back(parse_real("curves", cells[ca]));
            h.push_back(parse_real("curves", cells[ch]));
        }
        report["source"] = curves_csv->string();
        try {
            const auto r = equilibrium_point(n, a, h);
            report["status"] = r.n_star ? "crossing" : "none";
            report["n_star"] = r.n_star ? json(*r.n_star) : json(nullptr);
        } catch (const AmbiguityError &e) {
            ambiguous = true;
            report["status"] = "ambiguous";
            report["n_star"] = nullptr;
            report["message"] = e.what();
        }
        write_json(cfg.output_dir / "equilibrium.json", report);
        return !ambiguous;
    }

    auto s = cfg.scaling();
    s.empirical_max_n = 0;
    const auto curves = scaling_curves(s);
    {
        auto os = open_out(cfg.output_dir / "tradeoff.csv");
        os << "n,algorithmic_error,algorithmic_bound_raw,avoided_error_routed,avoided_error_raw\n";
        for (const auto &p : curves.points) {
            os << p.n << ',' << format_significant(algorithmic_error(p, cfg.normalization), 12) << ','
               << format_significant(algorithmic_error(p, Normalization::Raw), 12) << ','
               << format_significant(p.avoided_error_routed, 12) << ','
               << format_significant(p.avoided_error_raw, 12) << '\n';
        }
    }
    bool unused = false;
    report["routed"] = equilibrium_json(curves, cfg.normalization, true, ambiguous);
    report["raw"] = equilibrium_json(curves, cfg.normalization, false, unused);
    write_json(cfg.output_dir / "equilibrium.json", report);
    return !ambiguous;
}

bool cmd_validate(bool inject_fault, const std::optional<fs::path> &out) {
    ValidationOptions opts;
    opts.corrupt_decomposition = inject_fault;
    const auto report = run_validation(opts);
    std::cout << format_table(report);
    if (out) {
        fs::create_directories(*out);
        write_json(*out / "validation.json", to_json(report));
    }
    return report.all_passed();
}

int run_cli(int argc, char **argv) {
    CLI::App app{"Wave-function flow simulation with truncated quantum circuits", "qfluid"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::string> config_path;
    std::optional<std::string> out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> normalization;
    std::vector<std::string> overrides;
    bool dump_circuit = false;
    bool inject_fault = false;
    std::optional<std::string> curves;

    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--seed", seed, "noise seed");
    app.add_option("--normalization", normalization, "algorithmic error scale: bounded or raw");
    app.add_option("--set", overrides, "extra key=value override, repeatable");
    app.add_flag("--dump-circuit", dump_circuit, "write circuit text dumps");

    auto *sim = app.add_subcommand("simulate", "run the flow experiment and write field CSVs");
    auto *scal = app.add_subcommand("scaling", "gate-count and error-bound curves");
    auto *trade = app.add_subcommand("tradeoff", "algorithmic versus avoided hardware error");
    trade->add_option("--curves", curves, "CSV with columns n, algorithmic, hardware");
    auto *val = app.add_subcommand("validate", "run the invariant suite");
    val->add_flag("--inject-fault", inject_fault, "corrupt a Pauli coefficient (test hook)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunConfig cfg;
    try {
        if (config_path) {
            cfg = load_config(*config_path);
        }
        for (const auto &o : overrides) {
            const auto eq = o.find('=');
            if (eq == std::string::npos) {
                throw ConfigError("--set", "expected key=value, got '" + o + "'");
            }
            apply_setting(cfg, o.substr(0, eq), o.substr(eq + 1));
        }
        if (out_dir) {
            cfg.output_dir = *out_dir;
        }
        if (seed) {
            cfg.seed = *seed;
        }
        if (normalization) {
            cfg.normalization = parse_normalization(*normalization);
        }
        if (dump_circuit) {
            cfg.dump_circuit = true;
        }
        cfg.validate();
    } catch (const ConfigError &e) {
        std::cerr << "qfluid: config error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*sim) {
            cmd_simulate(cfg);
        } else if (*scal) {
            cmd_scaling(cfg);
        } else if (*trade) {
            return cmd_tradeoff(cfg, curves ? std::optional<fs::path>(*curves) : std::nullopt) ? 0 : 1;
        } else if (*val) {
            return cmd_validate(inject_fault, out_dir ? std::optional<fs::path>(*out_dir)
                                                      : std::nullopt)
                       ? 0
                       : 1;
        }
    } catch (const ConfigError &e) {
        std::cerr << "qfluid: config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "qfluid: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace qfluid
