#ifndef MSTX_CLI_HPP
#define MSTX_CLI_HPP

#include <cstdint>
#include <string>

namespace mstx::cli {

enum class Mode { cdf, pdf };
enum class Normalization { linear, power, both };

struct RunConfig {
    std::string spec_path;
    Mode mode = Mode::cdf;
    Normalization norm = Normalization::linear;
    double x = 2.0;
    std::int64_t n_start = 25;
    std::int64_t n_end = 1000;
    std::int64_t n_step = 25;
    int order = 3;
    std::int64_t n = 25;  // single-point n for eval
    std::string output;
    double tol = 1e-12;
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0 = hardware concurrency
};

// All commands throw mstx::validation_error for bad inputs and
// mstx::precision_fault for numerical failures; main maps those to exit
// codes 2 and 3.
void cmd_table(const RunConfig& config);
void cmd_curve(const RunConfig& config);
void cmd_plot(const RunConfig& config);
void cmd_eval(const RunConfig& config);
void cmd_coeffs(const std::string& spec_path);

}  // namespace mstx::cli

#endif
