/**
 * Copyright 2026 The lopsim developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lopsim/lopsim.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitVerifyFailed = 3;

struct CommonOptions {
    std::optional<double> tau, omega, t_c, t_t, t_w;
    std::optional<std::string> model, basis, window, format, output, preset;
};

// key=value lines; '#' starts a comment
CommonOptions read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    CommonOptions cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos) {
            throw CLI::ValidationError(
                "--config", path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "tau") cfg.tau = std::stod(value);
        else if (key == "omega") cfg.omega = std::stod(value);
        else if (key == "tc") cfg.t_c = std::stod(value);
        else if (key == "tt") cfg.t_t = std::stod(value);
        else if (key == "tw") cfg.t_w = std::stod(value);
        else if (key == "model") cfg.model = value;
        else if (key == "basis") cfg.basis = value;
        else if (key == "window") cfg.window = value;
        else if (key == "format") cfg.format = value;
        else if (key == "output") cfg.output = value;
        else if (key == "preset") cfg.preset = value;
        else {
            throw CLI::ValidationError("--config", "unknown key '" + key + "' in " + path);
        }
    }
    return cfg;
}

lopsim::DetectorModel parse_model(const std::string& s) {
    if (s == "time-resolved") return lopsim::DetectorModel::TimeResolved;
    if (s == "gated") return lopsim::DetectorModel::Gated;
    throw CLI::ValidationError("--model", "expected 'time-resolved' or 'gated'");
}

lopsim::Basis parse_basis(const std::string& s) {
    if (s == "Z" || s == "z") return lopsim::Basis::Z;
    if (s == "X" || s == "x") return lopsim::Basis::X;
    throw CLI::ValidationError("--basis", "expected 'Z' or 'X'");
}

void write_output(const std::string& text, const std::optional<std::string>& path) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw CLI::ValidationError("--output", "cannot write " + *path);
    out << text;
}

// Flags already parsed by CLI11 win; config fills the gaps.
template <typename T>
void fill(std::optional<T>& flag_value, const std::optional<T>& cfg_value) {
    if (!flag_value && cfg_value) flag_value = cfg_value;
}

void merge_config(CommonOptions& opts, const std::optional<std::string>& config_path) {
    if (!config_path) return;
    const CommonOptions cfg = read_config_file(*config_path);
    fill(opts.tau, cfg.tau);
    fill(opts.omega, cfg.omega);
    fill(opts.t_c, cfg.t_c);
    fill(opts.t_t, cfg.t_t);
    fill(opts.t_w, cfg.t_w);
    fill(opts.model, cfg.model);
    fill(opts.basis, cfg.basis);
    fill(opts.window, cfg.window);
    fill(opts.format, cfg.format);
    fill(opts.output, cfg.output);
    fill(opts.preset, cfg.preset);
}

lopsim::DetectionConfig detection_from(const CommonOptions& o) {
    lopsim::DetectionConfig cfg;
    cfg.model = parse_model(o.model.value_or("time-resolved"));
    if (o.window && *o.window == "full") {
        cfg.t_w = lopsim::kFullWindow;
    } else if (o.window) {
        throw CLI::ValidationError("--window", "only 'full' is recognized");
    } else {
        cfg.t_w = o.t_w.value_or(lopsim::kFullWindow);
    }
    cfg.t_c = o.t_c.value_or(0.0);
    cfg.t_t = o.t_t.value_or(cfg.model == lopsim::DetectorModel::Gated ? cfg.t_c : 0.0);
    cfg.validate();
    return cfg;
}

// A one-row dataset reuses the sweep serializers so the CSV schema stays
// uniform across subcommands.
lopsim::SweepResult single_row_dataset(const lopsim::SweepRow& row,
                                       const lopsim::SweepOutputs& outputs) {
    lopsim::SweepResult result;
    result.spec.outputs = outputs;
    result.rows.push_back(row);
    return result;
}

int cmd_truth_table(const CommonOptions& opts) {
    using namespace lopsim;
    const double tau = opts.tau.value_or(0.0);
    const double omega = opts.omega.value_or(0.0);
    const Basis basis = parse_basis(opts.basis.value_or("Z"));
    const DetectionConfig cfg = detection_from(opts);

    const ModeUnitary gate = coincidence_cnot_network();
    const TruthTable table = windowed_truth_table(gate, tau, omega, cfg, basis);
    const auto succ = success_probabilities(table);
    const double s = similarity(table, ideal_cnot_table(basis));

    const std::string format = opts.format.value_or(opts.output ? "csv" : "text");
    if (format == "text") {
        std::ostringstream out;
        const auto& labels = kLogicalLabels;
        out << "truth table (" << basis_name(basis) << " basis, " << model_name(cfg.model)
            << ", t_c=" << cfg.t_c << ", t_t=" << cfg.t_t << ", t_w="
            << (cfg.full_window() ? std::string("full") : format_double(cfg.t_w)) << ")\n";
        out << "  in\\out";
        for (const char* l : labels) out << "  " << l << "          ";
        out << "succ\n";
        for (int in = 0; in < 4; ++in) {
            out << "  " << labels[in] << "    ";
            for (int o = 0; o < 4; ++o) {
                char buf[24];
                std::snprintf(buf, sizeof(buf), " %.6e", table.at(in, o));
                out << buf;
            }
            char buf[24];
            std::snprintf(buf, sizeof(buf), "  %.6e", succ[in]);
            out << buf << "\n";
        }
        out << "similarity vs ideal: " << format_double(s) << "\n";
        write_output(out.str(), opts.output);
        return kExitOk;
    }

    SweepRow row{tau, omega, cfg.t_c, cfg.t_t, cfg.t_w, cfg.model, basis};
    row.similarity = s;
    row.success_probs = succ;
    row.p_min = *std::min_element(succ.begin(), succ.end());
    row.table = table.p;
    SweepOutputs outputs;
    outputs.similarity = outputs.success_probs = outputs.p_min = outputs.truth_table = true;
    const SweepResult dataset = single_row_dataset(row, outputs);
    if (format == "csv") {
        write_output(to_csv(dataset), opts.output);
    } else if (format == "json") {
        write_output(to_json(dataset), opts.output);
    } else {
        throw CLI::ValidationError("--format", "expected csv, json or text");
    }
    return kExitOk;
}

int cmd_similarity(const CommonOptions& opts) {
    using namespace lopsim;
    const double tau = opts.tau.value_or(0.0);
    const double omega = opts.omega.value_or(0.0);
    const double t_c = opts.t_c.value_or(0.0);
    const double t_t = opts.t_t.value_or(0.0);

    const ModeUnitary gate = coincidence_cnot_network();
    const TruthTable pointwise = pointwise_truth_table(gate, tau, omega, t_c, t_t);
    const double s_table = similarity(pointwise, ideal_cnot_table());
    const double s_closed = closed_form_similarity(tau, omega, t_c, t_t);

    std::ostringstream out;
    out << "S (pointwise table) = " << format_double(s_table) << "\n";
    out << "S (closed form)     = " << format_double(s_closed) << "\n";
    out << "difference          = " << format_double(s_table - s_closed) << "\n";
    write_output(out.str(), opts.output);
    return kExitOk;
}

int cmd_sweep(const CommonOptions& opts, const std::vector<std::string>& axis_specs,
              const std::vector<std::string>& output_names) {
    using namespace lopsim;
    SweepSpec spec;
    if (opts.preset) {
        spec = preset_sweep(*opts.preset);
    }
    // fixed-parameter overrides on top of the preset
    if (opts.tau) spec.tau = *opts.tau;
    if (opts.omega) spec.omega = *opts.omega;
    if (opts.t_c) spec.t_c = *opts.t_c;
    if (opts.t_t) spec.t_t = *opts.t_t;
    if (opts.t_w) spec.t_w = *opts.t_w;
    if (opts.window && *opts.window == "full") spec.t_w = kFullWindow;
    if (opts.model) spec.model = parse_model(*opts.model);
    if (opts.basis) spec.basis = parse_basis(*opts.basis);

    if (!axis_specs.empty()) spec.axes.clear();
    for (const std::string& text : axis_specs) {
        // name:start:stop:n
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(item);
        if (parts.size() != 4) {
            throw CLI::ValidationError("--axis", "expected name:start:stop:n_points");
        }
        Param param;
        if (parts[0] == "tau") param = Param::Tau;
        else if (parts[0] == "omega") param = Param::Omega;
        else if (parts[0] == "tc") param = Param::Tc;
        else if (parts[0] == "tt") param = Param::Tt;
        else if (parts[0] == "tw") param = Param::Tw;
        else throw CLI::ValidationError("--axis", "unknown parameter " + parts[0]);
        spec.axes.push_back(SweepAxis::linspace(param, std::stod(parts[1]),
                                                std::stod(parts[2]), std::stoi(parts[3])));
    }
    if (!output_names.empty()) {
        spec.outputs = SweepOutputs{false, false, false, false};
        for (const std::string& name : output_names) {
            if (name == "similarity") spec.outputs.similarity = true;
            else if (name == "success_probs") spec.outputs.success_probs = true;
            else if (name == "p_min") spec.outputs.p_min = true;
            else if (name == "truth_table") spec.outputs.truth_table = true;
            else throw CLI::ValidationError("--outputs", "unknown output " + name);
        }
    }
    spec.validate();

    const SweepResult result = run_sweep(spec);
    const std::string format = opts.format.value_or("csv");
    if (format == "csv") {
        write_output(to_csv(result), opts.output);
    } else if (format == "json") {
        write_output(to_json(result), opts.output);
    } else {
        throw CLI::ValidationError("--format", "expected csv or json");
    }
    return kExitOk;
}

int cmd_verify(int bins) {
    using namespace lopsim;
    const ModeUnitary gate = coincidence_cnot_network();

    std::mt19937 rng(12345);
    auto uniform = [&rng](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };

    bool pass = true;
    double worst = 0.0;

    // full-window sanity point first
    {
        const TruthTable closed =
            windowed_truth_table(gate, 0.0, 0.0, DetectionConfig::full_line());
        const TruthTable brute =
            brute_force_table(gate, 0.0, 0.0, DetectionConfig::full_line(),
                              default_grid(0.0, bins));
        double diff = 0.0;
        for (int n = 0; n < 16; ++n) diff = std::max(diff, std::fabs(closed.p[n] - brute.p[n]));
        std::printf("full-window tables, max |closed - brute| = %.3e (tol 1e-4): %s\n", diff,
                    diff <= 1e-4 ? "ok" : "FAIL");
        if (diff > 1e-4) pass = false;
    }

    for (int trial = 0; trial < 20; ++trial) {
        const double tau = uniform(-1.5, 1.5);
        const double omega = uniform(-5.0, 5.0);
        const double t_c = uniform(-1.0, 1.0);
        const double t_t = uniform(-1.0, 1.0);
        const double t_w = uniform(0.3, 1.5);
        const DetectionConfig cfg = DetectionConfig::time_resolved(t_c, t_t, t_w);

        const TruthTable closed = windowed_truth_table(gate, tau, omega, cfg);
        const TruthTable brute = brute_force_table(gate, tau, omega, cfg,
                                                   default_grid(tau, bins));
        double max_entry = 0.0;
        for (double p : closed.p) max_entry = std::max(max_entry, p);
        double rel = 0.0;
        for (int n = 0; n < 16; ++n) {
            const double denom = std::max(closed.p[n], 1e-3 * max_entry);
            if (denom > 0.0) rel = std::max(rel, std::fabs(closed.p[n] - brute.p[n]) / denom);
        }
        worst = std::max(worst, rel);
        if (rel > 1e-3) pass = false;
    }
    std::printf("20 random windowed tables at %d bins, max relative discrepancy = %.3e "
                "(tol 1e-3): %s\n", bins, worst, worst <= 1e-3 ? "ok" : "FAIL");

    return pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coincidence-CNOT mode-mismatch simulator"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::optional<std::string> config_path;
    std::vector<std::string> axis_specs;
    std::vector<std::string> output_names;
    int bins = 600;

    auto add_common = [&](CLI::App* sub, bool with_detector) {
        sub->add_option("--tau", opts.tau, "target temporal displacement");
        sub->add_option("--omega", opts.omega, "target frequency displacement");
        sub->add_option("--tc", opts.t_c, "control click time");
        sub->add_option("--tt", opts.t_t, "target click time");
        sub->add_option("--config", config_path, "key=value config file");
        sub->add_option("-o,--output", opts.output, "output file (default: stdout)");
        sub->add_option("--format", opts.format, "csv, json or text");
        if (with_detector) {
            sub->add_option("--tw", opts.t_w, "detector integration window");
            sub->add_option("--window", opts.window, "'full' for full-line integration");
            sub->add_option("--model", opts.model, "time-resolved or gated");
            sub->add_option("--basis", opts.basis, "Z or X");
        }
    };

    CLI::App* tt = app.add_subcommand("truth-table", "windowed truth table at one point");
    add_common(tt, true);

    CLI::App* sim = app.add_subcommand("similarity", "pointwise vs closed-form similarity");
    add_common(sim, false);

    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep dataset");
    add_common(sweep, true);
    sweep->add_option("--preset", opts.preset, "fig2a fig2b fig3a fig3b fig4 fig5");
    sweep->add_option("--axis", axis_specs, "axis as name:start:stop:n (up to 2)");
    sweep->add_option("--outputs", output_names,
                      "similarity, success_probs, p_min, truth_table")
        ->delimiter(',');

    CLI::App* verify = app.add_subcommand("verify", "closed form vs brute-force oracle");
    verify->add_option("--bins", bins, "time bins for the oracle grid");

    try {
        app.parse(argc, argv);
        merge_config(opts, config_path);
        if (tt->parsed()) return cmd_truth_table(opts);
        if (sim->parsed()) return cmd_similarity(opts);
        if (sweep->parsed()) return cmd_sweep(opts, axis_specs, output_names);
        if (verify->parsed()) return cmd_verify(bins);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
