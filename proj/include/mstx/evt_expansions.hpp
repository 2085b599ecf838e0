#ifndef MSTX_EVT_EXPANSIONS_HPP
#define MSTX_EVT_EXPANSIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mstx/tail_expansion.hpp"

namespace mstx {

// Linear norming scale a_n = (lead * n)^{1/v1}; under power normalization the
// same scale is paired with the exponent 1/v1.
struct NormingConstants {
    double a_n;
    double alpha_n;  // == a_n
    double beta_n;   // == 1/v1
};

// The seven regimes of the higher-order expansions, determined by the
// ordering of {2, v1, v2 - v1}:
//   I:   v1 < 2, v2 > 2 v1          II:  v1 > 2, v2 > v1 + 2
//   III: v1 < v2 < min(2 v1, v1+2)  IV:  v1 = 2, v2 > 4
//   V:   v1 > 2, v2 = v1 + 2        VI:  v1 < 2, v2 = 2 v1
//   VII: v1 = 2, v2 = 4
// Missing v2/v3 count as +infinity. gamma is the rate exponent of the
// third-order term; primary_power the a_n exponent of the second-order term.
enum class CaseId { I = 1, II, III, IV, V, VI, VII };

struct ExpansionCase {
    CaseId case_id;
    double gamma;
    double primary_power;
};

std::string to_string(CaseId id);

NormingConstants norming_constant(const MixtureSpec& spec, std::int64_t n);
ExpansionCase classify_case(const MixtureSpec& spec);

// Approximations of the maximum's cdf/pdf at the stated order:
//   order 1: Phi(x) = exp(-x^{-v1})          (pdf: v1 x^{-v1-1} Phi(x))
//   order 2: (1 + k(x) a_n^{-rho}) * order1
//   order 3: (1 + k(x) a_n^{-rho} + w(x) a_n^{-rho-gamma}) * order1
// with k/w (cdf) and s/q (pdf) from the classified regime.
double cdf_expansion(const MixtureSpec& spec, std::int64_t n, double x, int order);
double pdf_expansion(const MixtureSpec& spec, std::int64_t n, double x, int order);

// Power-normalized counterparts: exactly the linear expansions at x^{1/v1},
// the pdf carrying the change-of-variables prefactor x^{1/v1-1}/v1.
double cdf_expansion_power(const MixtureSpec& spec, std::int64_t n, double x, int order);
double pdf_expansion_power(const MixtureSpec& spec, std::int64_t n, double x, int order);

// Immutable bundle of everything a table run reuses: coefficients, regime,
// and the per-term series of the expansion machinery.
class ExpansionModel {
  public:
    explicit ExpansionModel(MixtureSpec spec);

    const MixtureSpec& spec() const { return spec_; }
    const TailCoefficients& tail_coefficients() const { return co_.tail; }
    const PdfCoefficients& pdf_coeffs() const { return co_.pdf; }
    const ExpansionCase& expansion_case() const { return case_; }
    double a_n(std::int64_t n) const;

    // Coefficient functions of the expansion orders: k, w (cdf) and s, q (pdf).
    double second_order_coeff_cdf(double x) const;
    double third_order_coeff_cdf(double x) const;
    double second_order_coeff_pdf(double x) const;
    double third_order_coeff_pdf(double x) const;

    double cdf_expansion(std::int64_t n, double x, int order) const;
    double pdf_expansion(std::int64_t n, double x, int order) const;
    double cdf_expansion_power(std::int64_t n, double x, int order) const;
    double pdf_expansion_power(std::int64_t n, double x, int order) const;

    double frechet_cdf(double x) const;      // exp(-x^{-v1})
    double frechet_pdf(double x) const;      // v1 x^{-v1-1} exp(-x^{-v1})

  private:
    struct Mono {
        double e;     // a_n exponent
        double coef;  // coefficient
        double xpow;  // power of x
    };

    double sum_at(const std::vector<Mono>& terms, double e, double x) const;

    MixtureSpec spec_;
    tail_detail::MixtureCoefficients co_;
    ExpansionCase case_;
    double rho_;
    double mu_;  // rho + gamma
    std::vector<Mono> log_terms_;        // series of n log F(a_n x) + x^{-v1}
    std::vector<Mono> prefactor_terms_;  // series of n a_n f(a_n x) / Phi'-kernel
    std::vector<Mono> reciprocal_terms_; // series of 1/F(a_n x) - 1
};

}  // namespace mstx

#endif
