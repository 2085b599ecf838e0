#ifndef MSTX_ORACLE_HPP
#define MSTX_ORACLE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "mstx/evt_expansions.hpp"

namespace mstx {

// Ground-truth evaluation of the normalized maximum through quadrature-grade
// distribution calls. Powers of F go through exp(n log1p(-S)) with S the
// quadrature survival, so the tables' digits survive even when 1-F ~ 1/n.

double exact_max_cdf(const ExpansionModel& model, std::int64_t n, double x, double tol = 1e-13);
double exact_max_pdf(const ExpansionModel& model, std::int64_t n, double x, double tol = 1e-13);
double exact_max_cdf_power(const ExpansionModel& model, std::int64_t n, double x,
                           double tol = 1e-13);
double exact_max_pdf_power(const ExpansionModel& model, std::int64_t n, double x,
                           double tol = 1e-13);

double exact_max_cdf(const MixtureSpec& spec, std::int64_t n, double x, double tol = 1e-13);
double exact_max_pdf(const MixtureSpec& spec, std::int64_t n, double x, double tol = 1e-13);
double exact_max_cdf_power(const MixtureSpec& spec, std::int64_t n, double x, double tol = 1e-13);
double exact_max_pdf_power(const MixtureSpec& spec, std::int64_t n, double x, double tol = 1e-13);

enum class TableMode { cdf, pdf };

// One table row: absolute errors of the order-1/2/3 approximations under
// linear (delta_l) and power (delta_p) normalization at the given x.
struct ErrorRecord {
    std::int64_t n;
    double x;
    std::array<double, 3> delta_l;
    std::array<double, 3> delta_p;
};

// threads = 1 runs the grid sequentially; larger values partition the rows
// over a bounded worker pool. Output order always follows n_grid.
std::vector<ErrorRecord> error_table(const MixtureSpec& spec, TableMode mode, double x,
                                     const std::vector<std::int64_t>& n_grid, double tol = 1e-13,
                                     unsigned threads = 1);

// i.i.d. draws from the mixture: component by weight, skew-normal numerator
// delta |U0| + sqrt(1-delta^2) U1 with delta = beta/sqrt(1+beta^2), chi-square
// denominator. Byte-for-byte reproducible given (seed, count); draw i depends
// only on (seed, i).
std::vector<double> sample_mixture(const MixtureSpec& spec, std::int64_t count,
                                   std::uint64_t seed);

// Two-sided Kolmogorov-Smirnov distance of sorted samples against cdf values
// evaluated at those samples (same order).
double ks_statistic(const std::vector<double>& cdf_at_sorted_samples);

// Asymptotic 1%-level critical value 1.62762 / sqrt(n).
double ks_critical_value_1pct(std::size_t n);

}  // namespace mstx

#endif
