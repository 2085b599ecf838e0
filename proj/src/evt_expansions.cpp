#include "mstx/evt_expansions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mstx/errors.hpp"

namespace mstx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_order(int order) {
    if (order < 1 || order > 3) {
        throw validation_error("expansion order must be 1, 2 or 3");
    }
}

void check_eval_args(std::int64_t n, double x) {
    if (n < 2) throw validation_error("expansion: n must be at least 2");
    if (!(x > 0.0)) throw validation_error("expansion: x must be positive");
}

}  // namespace

std::string to_string(CaseId id) {
    switch (id) {
        case CaseId::I: return "I";
        case CaseId::II: return "II";
        case CaseId::III: return "III";
        case CaseId::IV: return "IV";
        case CaseId::V: return "V";
        case CaseId::VI: return "VI";
        case CaseId::VII: return "VII";
    }
    return "?";
}

ExpansionModel::ExpansionModel(MixtureSpec spec)
    : spec_(std::move(spec)), co_(tail_detail::compute(spec_)) {
    const double v1 = co_.v1;
    const double v2 = co_.v2;
    const double v3 = co_.v3;
    const double d2 = co_.d2;
    const double d3 = co_.d3;
    const double dw = co_.dweight;
    const auto& t = co_.tail;
    const auto& pc = co_.pdf;
    const bool two = spec_.size() >= 2;
    const bool three = spec_.size() >= 3;

    // Series of h = n log F(a_n x) + x^{-v1} in powers of a_n^{-1}.
    log_terms_ = {
        {2.0, -t.a1, -v1 - 2.0},
        {4.0, -t.a2, -v1 - 4.0},
        {v1, -dw, -2.0 * v1},
        {v1 + 2.0, -2.0 * t.a1 * dw, -2.0 * v1 - 2.0},
        {2.0 * v1, -4.0 / 3.0 * dw * dw, -3.0 * v1},
    };
    if (two) {
        log_terms_.push_back({d2, -t.a3, -v2});
        log_terms_.push_back({d2 + 2.0, -t.a4, -v2 - 2.0});
        log_terms_.push_back({v2, -2.0 * t.a3 * dw, -v2 - v1});
    }
    if (three) {
        log_terms_.push_back({d3, -t.a5, -v3});
    }

    // Series of n a_n f(a_n x) / (v1 x^{-v1-1}) - 1.
    prefactor_terms_ = {
        {2.0, pc.k1, -2.0},
        {4.0, pc.k3, -4.0},
    };
    if (two) {
        prefactor_terms_.push_back({d2, (v2 / v1) * t.a3, -d2});
        prefactor_terms_.push_back({d2 + 2.0, pc.k2, -d2 - 2.0});
    }
    if (three) {
        prefactor_terms_.push_back({d3, (v3 / v1) * t.a5, -d3});
    }

    // Series of 1/F(a_n x) - 1.
    reciprocal_terms_ = {
        {v1, 2.0 * dw, -v1},
        {v1 + 2.0, 2.0 * dw * t.a1, -v1 - 2.0},
        {2.0 * v1, 4.0 * dw * dw, -2.0 * v1},
    };
    if (two) {
        reciprocal_terms_.push_back({v2, 2.0 * dw * t.a3, -v2});
    }

    // Leading order rho and the next occupied level mu across all series
    // (plus 2 rho for the squared leading term).
    rho_ = std::min(std::min(2.0, v1), d2);
    mu_ = 2.0 * rho_;
    auto consider = [&](double e) {
        if (e > rho_ && e < mu_) mu_ = e;
    };
    for (const auto& m : log_terms_) consider(m.e);
    for (const auto& m : prefactor_terms_) consider(m.e);
    for (const auto& m : reciprocal_terms_) consider(m.e);

    CaseId id;
    if (v1 < 2.0) {
        id = d2 > v1 ? CaseId::I : (d2 == v1 ? CaseId::VI : CaseId::III);
    } else if (v1 == 2.0) {
        id = d2 > 2.0 ? CaseId::IV : (d2 == 2.0 ? CaseId::VII : CaseId::III);
    } else {
        id = d2 > 2.0 ? CaseId::II : (d2 == 2.0 ? CaseId::V : CaseId::III);
    }
    if (!(mu_ > rho_) || !(rho_ > 0.0)) {
        throw validation_error("expansion regime could not be classified for this mixture");
    }
    case_ = ExpansionCase{id, mu_ - rho_, rho_};
}

double ExpansionModel::sum_at(const std::vector<Mono>& terms, double e, double x) const {
    double total = 0.0;
    for (const auto& m : terms) {
        if (m.e == e) total += m.coef * std::pow(x, m.xpow);
    }
    return total;
}

double ExpansionModel::a_n(std::int64_t n) const {
    return tail_detail::norming_scale(co_, n);
}

double ExpansionModel::second_order_coeff_cdf(double x) const {
    return sum_at(log_terms_, rho_, x);
}

double ExpansionModel::third_order_coeff_cdf(double x) const {
    double w = sum_at(log_terms_, mu_, x);
    if (mu_ == 2.0 * rho_) {
        const double k = sum_at(log_terms_, rho_, x);
        w += 0.5 * k * k;
    }
    return w;
}

double ExpansionModel::second_order_coeff_pdf(double x) const {
    return sum_at(log_terms_, rho_, x) + sum_at(prefactor_terms_, rho_, x) +
           sum_at(reciprocal_terms_, rho_, x);
}

double ExpansionModel::third_order_coeff_pdf(double x) const {
    double q = sum_at(log_terms_, mu_, x) + sum_at(prefactor_terms_, mu_, x) +
               sum_at(reciprocal_terms_, mu_, x);
    if (mu_ == 2.0 * rho_) {
        const double h = sum_at(log_terms_, rho_, x);
        const double p = sum_at(prefactor_terms_, rho_, x);
        const double r = sum_at(reciprocal_terms_, rho_, x);
        q += p * r + p * h + r * h + 0.5 * h * h;
    }
    return q;
}

double ExpansionModel::frechet_cdf(double x) const {
    return std::exp(-std::pow(x, -co_.v1));
}

double ExpansionModel::frechet_pdf(double x) const {
    return co_.v1 * std::pow(x, -co_.v1 - 1.0) * frechet_cdf(x);
}

double ExpansionModel::cdf_expansion(std::int64_t n, double x, int order) const {
    check_order(order);
    check_eval_args(n, x);
    const double phi = frechet_cdf(x);
    if (order == 1) return phi;
    const double an = a_n(n);
    double factor = 1.0 + second_order_coeff_cdf(x) * std::pow(an, -rho_);
    if (order == 3) factor += third_order_coeff_cdf(x) * std::pow(an, -mu_);
    return factor * phi;
}

double ExpansionModel::pdf_expansion(std::int64_t n, double x, int order) const {
    check_order(order);
    check_eval_args(n, x);
    const double phip = frechet_pdf(x);
    if (order == 1) return phip;
    const double an = a_n(n);
    double factor = 1.0 + second_order_coeff_pdf(x) * std::pow(an, -rho_);
    if (order == 3) factor += third_order_coeff_pdf(x) * std::pow(an, -mu_);
    return factor * phip;
}

double ExpansionModel::cdf_expansion_power(std::int64_t n, double x, int order) const {
    check_eval_args(n, x);
    return cdf_expansion(n, std::pow(x, 1.0 / co_.v1), order);
}

double ExpansionModel::pdf_expansion_power(std::int64_t n, double x, int order) const {
    check_eval_args(n, x);
    const double xl = std::pow(x, 1.0 / co_.v1);
    return std::pow(x, 1.0 / co_.v1 - 1.0) / co_.v1 * pdf_expansion(n, xl, order);
}

NormingConstants norming_constant(const MixtureSpec& spec, std::int64_t n) {
    if (n < 2) throw validation_error("norming_constant: n must be at least 2");
    const auto co = tail_detail::compute(spec);
    const double an = tail_detail::norming_scale(co, n);
    return NormingConstants{an, an, 1.0 / co.v1};
}

ExpansionCase classify_case(const MixtureSpec& spec) {
    return ExpansionModel(spec).expansion_case();
}

double cdf_expansion(const MixtureSpec& spec, std::int64_t n, double x, int order) {
    return ExpansionModel(spec).cdf_expansion(n, x, order);
}

double pdf_expansion(const MixtureSpec& spec, std::int64_t n, double x, int order) {
    return ExpansionModel(spec).pdf_expansion(n, x, order);
}

double cdf_expansion_power(const MixtureSpec& spec, std::int64_t n, double x, int order) {
    return ExpansionModel(spec).cdf_expansion_power(n, x, order);
}

double pdf_expansion_power(const MixtureSpec& spec, std::int64_t n, double x, int order) {
    return ExpansionModel(spec).pdf_expansion_power(n, x, order);
}

}  // namespace mstx
