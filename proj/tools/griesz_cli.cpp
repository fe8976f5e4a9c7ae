// Command-line driver: `suite` runs named verification suites, `theorem`
// runs the norm-ratio experiment, `kernel-probe` dumps every kernel-side
// quantity for one pair of points. Exit codes: 0 all checks passed, 1 an
// invariant failed, 2 configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "griesz/bounds.hpp"
#include "griesz/experiment.hpp"
#include "griesz/report.hpp"
#include "griesz/suites.hpp"

namespace {

using namespace griesz;

std::vector<double> parse_csv_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size()) throw ConfigError("bad number '" + item + "'");
    }
    return out;
}

// "inverse_quadratic:2:1" -> id + params
void parse_exponent_spec(const std::string& spec, ExperimentConfig& cfg) {
    const auto colon = spec.find(':');
    cfg.exponent_id = spec.substr(0, colon);
    cfg.exponent_params.clear();
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ':'))
            if (!item.empty()) cfg.exponent_params.push_back(std::stod(item));
    }
}

struct CliArgs {
    std::string config_path;
    std::string exponent_spec;
    std::string suite_names;
    int dim = 0;
    double beta = 0.0;
    long long seed = -1;
    int samples = 0;
    int test_functions = 0;
    int budget = 0;  // percent of default quadrature budgets
    std::string out;
    std::string format;
    std::string x_spec, y_spec;
};

ExperimentConfig build_config(const CliArgs& args) {
    ExperimentConfig cfg;
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in) throw ConfigError("cannot read config file: " + args.config_path);
        Json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw ConfigError(std::string("config parse error: ") + e.what());
        }
        cfg = config_from_json(j);
    }
    if (args.dim > 0) cfg.dimension = args.dim;
    if (args.beta > 0.0) cfg.beta = args.beta;
    if (!args.exponent_spec.empty()) parse_exponent_spec(args.exponent_spec, cfg);
    if (args.seed >= 0) cfg.seed = static_cast<std::uint64_t>(args.seed);
    if (args.samples > 0) cfg.samples = args.samples;
    if (args.test_functions > 0) cfg.test_functions = args.test_functions;
    if (args.budget > 0) {
        cfg.gauss_points = std::max(4, cfg.gauss_points_eff() * args.budget / 100);
        cfg.norm_points = std::max(6, cfg.norm_points_eff() * args.budget / 100);
    }
    if (!args.out.empty()) cfg.out = args.out;
    if (!args.format.empty()) cfg.format = args.format;
    if (!args.suite_names.empty()) {
        cfg.suites.clear();
        std::stringstream ss(args.suite_names);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) cfg.suites.push_back(item);
    }
    cfg.validate();
    return cfg;
}

int cmd_suite(const CliArgs& args) {
    const ExperimentConfig cfg = build_config(args);
    const RunOutcome outcome = run_suite(cfg);
    for (const auto& s : outcome.suites) {
        std::printf("[%s] suite %-16s (%zu checks, %.1fs)\n", s.ok() ? "PASS" : "FAIL",
                    s.suite.c_str(), s.rows.size(), s.runtime_seconds);
        for (const auto& row : s.rows)
            if (!row.pass)
                std::printf("       failed: %s  value=%.6g threshold=%.6g  %s\n",
                            row.id.c_str(), row.value, row.threshold, row.note.c_str());
    }
    if (!cfg.out.empty()) {
        if (cfg.format == "json")
            write_text_file(cfg.out, to_json(outcome, cfg).dump(2) + "\n");
        else
            write_text_file(cfg.out, to_csv(outcome, cfg));
        std::printf("report written to %s\n", cfg.out.c_str());
    }
    return outcome.exit_status;
}

int cmd_theorem(const CliArgs& args) {
    const ExperimentConfig cfg = build_config(args);
    const RatioReport rep = theorem_experiment(cfg);
    std::printf("norm-ratio experiment: %zu test functions, d=%d, beta=%g, exponent=%s\n",
                rep.rows.size(), cfg.dimension, cfg.beta, cfg.exponent_id.c_str());
    std::printf("  sup ratio        %.12g\n", rep.sup_ratio);
    std::printf("  half-sample sup  %.12g\n", rep.half_sup_ratio);
    std::printf("  stability factor %.6g\n", rep.stability_factor);
    std::printf("  truncation bound %.3e\n", rep.truncation_bound);
    std::printf("  verdict          %s\n", rep.pass ? "PASS" : "FAIL");
    if (!cfg.out.empty()) {
        emit_report(rep, cfg.format, cfg.out);
        std::printf("report written to %s\n", cfg.out.c_str());
    }
    return rep.pass ? 0 : 1;
}

int cmd_kernel_probe(const CliArgs& args) {
    if (args.x_spec.empty() || args.y_spec.empty())
        throw ConfigError("kernel-probe needs --x and --y");
    const Point x = parse_csv_doubles(args.x_spec);
    const Point y = parse_csv_doubles(args.y_spec);
    if (x.size() != y.size()) throw ConfigError("x and y must have equal length");
    const double beta = args.beta > 0.0 ? args.beta : 2.0;
    const RieszOrder order(beta);

    Json doc{{"x", x}, {"y", y}, {"beta", beta}};
    doc["kernel"] = round12(riesz_kernel_eval(order, x, y, {1e-10, 8000}));
    const DecompositionTerms t = decomposition_terms(order, x, y);
    doc["terms"] = Json{{"I", round12(t.term_I)},
                        {"II", round12(t.term_II)},
                        {"III", round12(t.term_III)},
                        {"sum", round12(t.sum())}};
    const KernelGeometry g = kernel_geometry(x, y);
    doc["geometry"] = Json{{"a", round12(g.a)},
                           {"b", round12(g.b)},
                           {"t0", round12(g.t0)},
                           {"u_t0", round12(g.u_t0)}};
    if (dist(x, y) > 0.0) {
        const AuxKernels a = aux_kernels(x, y, order);
        doc["aux"] = Json{{"K2", round12(a.k2)}, {"G2", round12(a.g2)}, {"K3", round12(a.k3)}};
    }
    std::cout << doc.dump(2) << "\n";
    if (!args.out.empty()) write_text_file(args.out, doc.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian Riesz potential verification harness"};
    app.require_subcommand(1);

    CliArgs args;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", args.config_path, "JSON config file");
        cmd->add_option("--dim", args.dim, "dimension (1-3)");
        cmd->add_option("--beta", args.beta, "Riesz order beta");
        cmd->add_option("--exponent", args.exponent_spec,
                        "exponent preset, e.g. inverse_quadratic:2:1");
        cmd->add_option("--seed", args.seed, "RNG seed");
        cmd->add_option("--samples", args.samples, "sample count for bound checks");
        cmd->add_option("--functions", args.test_functions,
                        "test function count for the theorem experiment");
        cmd->add_option("--budget", args.budget, "quadrature budget, percent of default");
        cmd->add_option("--out", args.out, "output report path");
        cmd->add_option("--format", args.format, "report format: json or csv");
    };

    CLI::App* suite = app.add_subcommand("suite", "run verification suites");
    add_common(suite);
    suite->add_option("--name", args.suite_names,
                      "comma-separated suite names (default: all)");

    CLI::App* theorem = app.add_subcommand("theorem", "run the norm-ratio experiment");
    add_common(theorem);

    CLI::App* probe = app.add_subcommand("kernel-probe", "dump kernel quantities at (x, y)");
    add_common(probe);
    probe->add_option("--x", args.x_spec, "point x, comma-separated coordinates");
    probe->add_option("--y", args.y_spec, "point y, comma-separated coordinates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (suite->parsed()) return cmd_suite(args);
        if (theorem->parsed()) return cmd_theorem(args);
        if (probe->parsed()) return cmd_kernel_probe(args);
    } catch (const griesz::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
