#ifndef MSTX_TAIL_EXPANSION_HPP
#define MSTX_TAIL_EXPANSION_HPP

#include <cstdint>

#include "mstx/distributions.hpp"

namespace mstx {

// Coefficients of the mixture survival expansion
//   1 - F(x) = lead * x^{-v1} (1 + a1 x^{-2} + a2 x^{-4} + a3 x^{-(v2-v1)}
//              + a4 x^{-(v2-v1)-2} + a5 x^{-(v3-v1)} + O(x^{-eta})).
// Missing components degrade gracefully: a3=a4=0 for r<2, a5=0 for r<3, and
// the absent degrees of freedom count as +infinity inside eta.
struct TailCoefficients {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;
    double a5 = 0.0;
    double eta = 6.0;
    double lead = 0.0;
};

// Coefficients of the normalized density prefactor expansion
//   n a_n f(a_n x) = v1 x^{-v1-1} [1 + k1 (a_n x)^{-2}
//                    + (v2/v1) a3 (a_n x)^{-(v2-v1)} + k2 (a_n x)^{-(v2-v1)-2}
//                    + (v3/v1) a5 (a_n x)^{-(v3-v1)} + k3 (a_n x)^{-4} + ...].
struct PdfCoefficients {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
};

// Second- and fourth-order tail correction factors of one skew-t component.
double component_a1(const SkewTParams& params);
double component_a2(const SkewTParams& params);

// First/second Taylor factors of one component's normalized density
// prefactor; k1 and k3 of the mixture equal these at the first component,
// which the tests cross-check against the displayed k-formulas.
double component_c1(const SkewTParams& params);
double component_c2(const SkewTParams& params);

// Component tail weight p * C_v * v^{(v-1)/2} * T_{v+1}(beta sqrt(v+1)); the
// expansion's lead factor is twice this value at the first component.
double component_tail_weight(const SkewTParams& params, double weight);

TailCoefficients mixture_tail_coefficients(const MixtureSpec& spec);
PdfCoefficients pdf_coefficients(const MixtureSpec& spec);

// Truncated survival series evaluated at x > 0 (large-x regime is the
// caller's responsibility).
double survival_expansion(const MixtureSpec& spec, double x);

// Truncated series for n a_n f(a_n x), n >= 2, x > 0.
double pdf_prefactor_expansion(const MixtureSpec& spec, std::int64_t n, double x);

namespace tail_detail {

// Everything the expansion evaluators reuse across calls, computed once.
struct MixtureCoefficients {
    double v1, v2, v3;  // +inf when absent
    double d2, d3;      // v2 - v1, v3 - v1 (+inf when absent)
    double dweight;     // component_tail_weight of the first component
    TailCoefficients tail;
    PdfCoefficients pdf;
};

MixtureCoefficients compute(const MixtureSpec& spec);

// a_n = (lead * n)^{1/v1}, evaluated in log space.
double norming_scale(const MixtureCoefficients& co, std::int64_t n);

}  // namespace tail_detail

}  // namespace mstx

#endif
