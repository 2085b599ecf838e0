#include "mstx/tail_expansion.hpp"

#include <cmath>
#include <limits>

#include "mstx/errors.hpp"
#include "mstx/special_functions.hpp"

namespace mstx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double slant_cdf(const SkewTParams& p) {
    return student_t_cdf(p.v + 1.0, p.beta * std::sqrt(p.v + 1.0));
}

// C_{v+1} * beta * sqrt(v+1) * (1+beta^2)^{-(v+2)/2}, the factor shared by
// every slant-dependent correction term.
double slant_factor(const SkewTParams& p) {
    const double v = p.v;
    const double b = p.beta;
    return c_v(v + 1.0) * b * std::sqrt(v + 1.0) * std::pow(1.0 + b * b, -0.5 * (v + 2.0));
}

}  // namespace

double component_a1(const SkewTParams& p) {
    const double v = p.v;
    return -slant_factor(p) * v * v / (2.0 * slant_cdf(p) * (v + 2.0)) -
           v * v * (v + 1.0) / (2.0 * (v + 2.0));
}

double component_a2(const SkewTParams& p) {
    const double v = p.v;
    const double b = p.beta;
    const double bracket = 3.0 * v * v / 8.0 + v * v * v * (v - 1.0) / (4.0 * (v + 2.0)) -
                           3.0 * v * v / ((v + 2.0) * (v + 4.0)) -
                           (v + 2.0) * b * b * v * v * v / (8.0 * (v + 4.0) * (1.0 + b * b));
    return slant_factor(p) / slant_cdf(p) * bracket + v * v * (v * v - 1.0) / 8.0 +
           3.0 * v * v / ((v + 2.0) * (v + 4.0)) + v * v * (v - 1.0) / (2.0 * (v + 2.0));
}

double component_c1(const SkewTParams& p) {
    const double v = p.v;
    return -v * (v + 1.0) / 2.0 - v * slant_factor(p) / (2.0 * slant_cdf(p));
}

double component_c2(const SkewTParams& p) {
    const double v = p.v;
    const double b = p.beta;
    const double poly =
        2.0 * v * v * v + v * v * v * b * b + 3.0 * v * v * b * b + 5.0 * v * v;
    return v * v * (v + 1.0) * (v + 3.0) / 8.0 +
           slant_factor(p) * poly / (8.0 * (1.0 + b * b) * slant_cdf(p));
}

double component_tail_weight(const SkewTParams& p, double weight) {
    return weight * c_v(p.v) * std::pow(p.v, 0.5 * (p.v - 1.0)) * slant_cdf(p);
}

namespace tail_detail {

MixtureCoefficients compute(const MixtureSpec& spec) {
    MixtureCoefficients co{};
    const auto& first = spec.component(0);
    co.v1 = first.params.v;
    co.v2 = spec.dof_or_inf(1);
    co.v3 = spec.dof_or_inf(2);
    co.d2 = co.v2 - co.v1;
    co.d3 = co.v3 - co.v1;

    co.dweight = component_tail_weight(first.params, first.weight);
    co.tail.lead = 2.0 * co.dweight;
    co.tail.a1 = component_a1(first.params);
    co.tail.a2 = component_a2(first.params);
    co.pdf.k1 = -co.v1 *
                (slant_cdf(first.params) * (co.v1 + 1.0) + slant_factor(first.params)) /
                (2.0 * slant_cdf(first.params));
    {
        // k3 as displayed, with the shared slant product; equals
        // component_c2 of the first component.
        const double v = co.v1;
        const double b = first.params.beta;
        const double t1 = slant_cdf(first.params);
        const double num =
            v * v * (v + 3.0) * (v + 1.0) / 8.0 * t1 +
            slant_factor(first.params) *
                (2.0 * v * v * v + v * v * v * b * b + 3.0 * v * v * b * b + 5.0 * v * v) /
                (8.0 * (1.0 + b * b));
        co.pdf.k3 = num / t1;
    }

    const double v4 = spec.dof_or_inf(3);
    co.tail.eta = std::min(std::min(6.0, v4 - co.v1),
                           std::min(co.d2 + 4.0, co.d3 + 2.0));

    if (spec.size() >= 2) {
        const auto& second = spec.component(1);
        co.tail.a3 = component_tail_weight(second.params, second.weight) / co.dweight;
        co.tail.a4 = co.tail.a3 * component_a1(second.params);
        // k2 as displayed; equals (v2/v1) a3 c1(second).
        const double v2 = second.params.v;
        const double t1 = slant_cdf(first.params);
        const double t2 = slant_cdf(second.params);
        co.pdf.k2 = -second.weight * c_v(v2) * std::pow(v2, 0.5 * (v2 + 3.0)) *
                    (t2 * (v2 + 1.0) + slant_factor(second.params)) /
                    (2.0 * first.weight * c_v(co.v1) * std::pow(co.v1, 0.5 * (co.v1 + 1.0)) * t1);
    }
    if (spec.size() >= 3) {
        const auto& third = spec.component(2);
        co.tail.a5 = component_tail_weight(third.params, third.weight) / co.dweight;
    }
    return co;
}

double norming_scale(const MixtureCoefficients& co, std::int64_t n) {
    if (n < 1) throw validation_error("norming constant: n must be a positive integer");
    return std::exp((std::log(co.tail.lead) + std::log(static_cast<double>(n))) / co.v1);
}

}  // namespace tail_detail

TailCoefficients mixture_tail_coefficients(const MixtureSpec& spec) {
    return tail_detail::compute(spec).tail;
}

PdfCoefficients pdf_coefficients(const MixtureSpec& spec) {
    return tail_detail::compute(spec).pdf;
}

double survival_expansion(const MixtureSpec& spec, double x) {
    if (!(x > 0.0)) throw validation_error("survival_expansion: x must be positive");
    const auto co = tail_detail::compute(spec);
    double series = 1.0 + co.tail.a1 * std::pow(x, -2.0) + co.tail.a2 * std::pow(x, -4.0);
    if (spec.size() >= 2) {
        series += co.tail.a3 * std::pow(x, -co.d2) + co.tail.a4 * std::pow(x, -co.d2 - 2.0);
    }
    if (spec.size() >= 3) {
        series += co.tail.a5 * std::pow(x, -co.d3);
    }
    return co.tail.lead * std::pow(x, -co.v1) * series;
}

double pdf_prefactor_expansion(const MixtureSpec& spec, std::int64_t n, double x) {
    if (n < 2) throw validation_error("pdf_prefactor_expansion: n must be at least 2");
    if (!(x > 0.0)) throw validation_error("pdf_prefactor_expansion: x must be positive");
    const auto co = tail_detail::compute(spec);
    const double anx = tail_detail::norming_scale(co, n) * x;
    double series = 1.0 + co.pdf.k1 * std::pow(anx, -2.0) + co.pdf.k3 * std::pow(anx, -4.0);
    if (spec.size() >= 2) {
        series += (co.v2 / co.v1) * co.tail.a3 * std::pow(anx, -co.d2) +
                  co.pdf.k2 * std::pow(anx, -co.d2 - 2.0);
    }
    if (spec.size() >= 3) {
        series += (co.v3 / co.v1) * co.tail.a5 * std::pow(anx, -co.d3);
    }
    return co.v1 * std::pow(x, -co.v1 - 1.0) * series;
}

}  // namespace mstx
