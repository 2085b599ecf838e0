#include "mstx/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "mstx/errors.hpp"
#include "mstx/rng.hpp"

namespace mstx {

namespace {

void check_point(std::int64_t n, double x) {
    if (n < 1) throw validation_error("exact maximum: n must be a positive integer");
    if (!(x > 0.0)) throw validation_error("exact maximum: x must be positive");
}

}  // namespace

double exact_max_cdf(const ExpansionModel& model, std::int64_t n, double x, double tol) {
    check_point(n, x);
    const double an = model.a_n(n);
    const double survival = mixture_survival(model.spec(), an * x, tol);
    return std::exp(static_cast<double>(n) * std::log1p(-survival));
}

double exact_max_pdf(const ExpansionModel& model, std::int64_t n, double x, double tol) {
    check_point(n, x);
    const double an = model.a_n(n);
    const double survival = mixture_survival(model.spec(), an * x, tol);
    const double log_pow = static_cast<double>(n - 1) * std::log1p(-survival);
    return static_cast<double>(n) * an * std::exp(log_pow) * mixture_pdf(model.spec(), an * x);
}

double exact_max_cdf_power(const ExpansionModel& model, std::int64_t n, double x, double tol) {
    check_point(n, x);
    const double v1 = model.spec().component(0).params.v;
    return exact_max_cdf(model, n, std::pow(x, 1.0 / v1), tol);
}

double exact_max_pdf_power(const ExpansionModel& model, std::int64_t n, double x, double tol) {
    check_point(n, x);
    const double v1 = model.spec().component(0).params.v;
    const double xl = std::pow(x, 1.0 / v1);
    return std::pow(x, 1.0 / v1 - 1.0) / v1 * exact_max_pdf(model, n, xl, tol);
}

double exact_max_cdf(const MixtureSpec& spec, std::int64_t n, double x, double tol) {
    return exact_max_cdf(ExpansionModel(spec), n, x, tol);
}

double exact_max_pdf(const MixtureSpec& spec, std::int64_t n, double x, double tol) {
    return exact_max_pdf(ExpansionModel(spec), n, x, tol);
}

double exact_max_cdf_power(const MixtureSpec& spec, std::int64_t n, double x, double tol) {
    return exact_max_cdf_power(ExpansionModel(spec), n, x, tol);
}

double exact_max_pdf_power(const MixtureSpec& spec, std::int64_t n, double x, double tol) {
    return exact_max_pdf_power(ExpansionModel(spec), n, x, tol);
}

std::vector<ErrorRecord> error_table(const MixtureSpec& spec, TableMode mode, double x,
                                     const std::vector<std::int64_t>& n_grid, double tol,
                                     unsigned threads) {
    if (n_grid.empty()) throw validation_error("error_table: n grid must be nonempty");
    for (std::int64_t n : n_grid) {
        if (n < 2) throw validation_error("error_table: every n must be at least 2");
    }
    if (!(x > 0.0)) throw validation_error("error_table: x must be positive");

    const ExpansionModel model(spec);
    const double v1 = spec.component(0).params.v;
    const double xl = std::pow(x, 1.0 / v1);
    const double power_jacobian = std::pow(x, 1.0 / v1 - 1.0) / v1;

    std::vector<ErrorRecord> records(n_grid.size());
    auto compute_row = [&](std::size_t i) {
        const std::int64_t n = n_grid[i];
        ErrorRecord rec{};
        rec.n = n;
        rec.x = x;
        if (mode == TableMode::cdf) {
            const double actual = exact_max_cdf(model, n, x, tol);
            const double actual_power = exact_max_cdf(model, n, xl, tol);
            for (int order = 1; order <= 3; ++order) {
                rec.delta_l[order - 1] = std::fabs(actual - model.cdf_expansion(n, x, order));
                rec.delta_p[order - 1] =
                    std::fabs(actual_power - model.cdf_expansion(n, xl, order));
            }
        } else {
            const double actual = exact_max_pdf(model, n, x, tol);
            const double actual_at_xl = exact_max_pdf(model, n, xl, tol);
            for (int order = 1; order <= 3; ++order) {
                rec.delta_l[order - 1] = std::fabs(actual - model.pdf_expansion(n, x, order));
                rec.delta_p[order - 1] =
                    power_jacobian * std::fabs(actual_at_xl - model.pdf_expansion(n, xl, order));
            }
        }
        records[i] = rec;
    };

    const unsigned workers =
        std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n_grid.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < n_grid.size(); ++i) compute_row(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                for (std::size_t i = w; i < n_grid.size(); i += workers) compute_row(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    return records;
}

std::vector<double> sample_mixture(const MixtureSpec& spec, std::int64_t count,
                                   std::uint64_t seed) {
    if (count < 1) throw validation_error("sample_mixture: count must be positive");
    std::vector<double> draws(static_cast<std::size_t>(count));
    const auto& comps = spec.components();
    for (std::int64_t i = 0; i < count; ++i) {
        Philox gen(seed, static_cast<std::uint64_t>(i));
        const double pick = gen.next_uniform();
        double acc = 0.0;
        const MixtureComponent* chosen = &comps.back();
        for (const auto& c : comps) {
            acc += c.weight;
            if (pick <= acc) {
                chosen = &c;
                break;
            }
        }
        const double beta = chosen->params.beta;
        const double v = chosen->params.v;
        const double delta = beta / std::sqrt(1.0 + beta * beta);
        const double u0 = gen.next_normal();
        const double u1 = gen.next_normal();
        const double z = delta * std::fabs(u0) + std::sqrt(1.0 - delta * delta) * u1;
        const double w = gen.next_chi_squared(v);
        draws[static_cast<std::size_t>(i)] = z / std::sqrt(w / v);
    }
    return draws;
}

double ks_statistic(const std::vector<double>& cdf_at_sorted_samples) {
    const std::size_t n = cdf_at_sorted_samples.size();
    if (n == 0) throw validation_error("ks_statistic: empty sample");
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf_at_sorted_samples[i];
        const double hi = (static_cast<double>(i) + 1.0) / static_cast<double>(n) - f;
        const double lo = f - static_cast<double>(i) / static_cast<double>(n);
        d = std::max(d, std::max(hi, lo));
    }
    return d;
}

double ks_critical_value_1pct(std::size_t n) {
    return 1.62762 / std::sqrt(static_cast<double>(n));
}

}  // namespace mstx
