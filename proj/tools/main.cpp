#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "mstx/errors.hpp"

namespace {

void add_common(CLI::App* cmd, mstx::cli::RunConfig& cfg, bool with_grid) {
    cmd->add_option("--spec", cfg.spec_path, "mixture spec JSON file")->required();
    cmd->add_option("--mode", cfg.mode, "cdf|pdf")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, mstx::cli::Mode>{{"cdf", mstx::cli::Mode::cdf},
                                                   {"pdf", mstx::cli::Mode::pdf}}));
    cmd->add_option("--norm", cfg.norm, "linear|power|both")
        ->transform(CLI::CheckedTransformer(std::map<std::string, mstx::cli::Normalization>{
            {"linear", mstx::cli::Normalization::linear},
            {"power", mstx::cli::Normalization::power},
            {"both", mstx::cli::Normalization::both}}));
    cmd->add_option("--x", cfg.x, "evaluation point (x > 0)");
    cmd->add_option("--tol", cfg.tol, "quadrature tolerance in [1e-13, 1e-6]")
        ->envname("MST_EXTREMES_TOL");
    cmd->add_option("--seed", cfg.seed, "random seed (sampling paths)");
    cmd->add_option("--threads", cfg.threads, "worker pool size (0 = auto)");
    if (with_grid) {
        cmd->add_option("--n-start", cfg.n_start, "first sample size (>= 2)");
        cmd->add_option("--n-end", cfg.n_end, "last sample size");
        cmd->add_option("--n-step", cfg.n_step, "sample size step (>= 1)");
        cmd->add_option("--out", cfg.output, "output file path")->required();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixed skew-t extreme value expansions"};
    app.require_subcommand(1);

    mstx::cli::RunConfig cfg;

    auto* table = app.add_subcommand("table", "absolute-error table (CSV)");
    add_common(table, cfg, true);

    auto* curve = app.add_subcommand("curve", "actual vs order-1/2/3 series (CSV)");
    add_common(curve, cfg, true);

    auto* plot = app.add_subcommand("plot", "actual vs order-1/2/3 series (SVG)");
    add_common(plot, cfg, true);

    auto* eval = app.add_subcommand("eval", "single-point expansion vs exact value");
    add_common(eval, cfg, false);
    eval->add_option("--n", cfg.n, "sample size (>= 2)")->required();
    eval->add_option("--order", cfg.order, "expansion order 1|2|3")
        ->check(CLI::Range(1, 3))
        ->required();

    std::string coeffs_spec;
    auto* coeffs = app.add_subcommand("coeffs", "expansion coefficients (labeled CSV)");
    coeffs->add_option("--spec", coeffs_spec, "mixture spec JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) {
            mstx::cli::cmd_table(cfg);
        } else if (curve->parsed()) {
            mstx::cli::cmd_curve(cfg);
        } else if (plot->parsed()) {
            mstx::cli::cmd_plot(cfg);
        } else if (eval->parsed()) {
            mstx::cli::cmd_eval(cfg);
        } else if (coeffs->parsed()) {
            mstx::cli::cmd_coeffs(coeffs_spec);
        }
    } catch (const mstx::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mstx::precision_fault& e) {
        std::cerr << "numerical fault: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
