#ifndef MSTX_SPECIAL_FUNCTIONS_HPP
#define MSTX_SPECIAL_FUNCTIONS_HPP

namespace mstx {

// Natural log of the gamma function, x > 0. Lanczos rational approximation,
// relative error below 1e-14 on [0.5, 200].
double ln_gamma(double x);

// Student-t density normalizer Gamma((v+1)/2) / (Gamma(v/2) sqrt(v pi)), v > 0.
double c_v(double v);

// Regularized incomplete beta I_x(a,b), a,b > 0, x in [0,1].
// Continued fraction (modified Lentz), symmetry switch at x = a/(a+b).
double regularized_incomplete_beta(double a, double b, double x);

// Student-t density and distribution with real degrees of freedom v > 0.
double student_t_pdf(double v, double x);
double student_t_cdf(double v, double x);

// Standard normal density / distribution.
double normal_pdf(double x);
double normal_cdf(double x);

}  // namespace mstx

#endif
