// Minimal norm-ratio run: 30 test functions against the default variable
// exponent, printed as a table. Usage: demo_norm_ratio [beta]

#include <cstdio>
#include <cstdlib>

#include "griesz/experiment.hpp"

int main(int argc, char** argv) {
    using namespace griesz;
    ExperimentConfig cfg;
    cfg.dimension = 1;
    cfg.beta = argc > 1 ? std::atof(argv[1]) : 1.0;
    cfg.exponent_id = "inverse_quadratic";
    cfg.exponent_params = {2.0, 1.0};
    cfg.test_functions = 30;
    cfg.seed = 20240901;

    const RatioReport rep = theorem_experiment(cfg);
    std::printf("%-14s %14s %14s %10s\n", "function", "||f||", "||I_b f||", "ratio");
    for (const auto& row : rep.rows)
        std::printf("%-14s %14.8f %14.8f %10.6f\n", row.function_id.c_str(), row.norm_f,
                    row.norm_if, row.ratio);
    std::printf("\nsup ratio %.8f   stability %.3f   %s\n", rep.sup_ratio,
                rep.stability_factor, rep.pass ? "PASS" : "FAIL");
    return rep.pass ? 0 : 1;
}
