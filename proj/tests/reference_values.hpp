#ifndef MSTX_TESTS_REFERENCE_VALUES_HPP
#define MSTX_TESTS_REFERENCE_VALUES_HPP

// High-precision reference values, frozen from tests/tools/
// mint_reference_values.py (mpmath, 40 significant digits). The generator is
// independent of the library: gamma/beta/Student-t come from mpmath and every
// integral is mpmath adaptive quadrature.
namespace mstx_tests::ref {

// special functions
inline constexpr double lgamma_10_5 = 13.940625219403763633;
inline constexpr double c_v_3 = 0.36755259694786136634;
inline constexpr double t_pdf_3_2_5 = 0.03866148572716730223;
inline constexpr double normal_cdf_1_96 = 0.97500210485177956586;
inline constexpr double t_cdf_4_2 = 0.94194173824159220275;
inline constexpr double t_cdf_3_sqrt3 = 0.90915494309189533577;
inline constexpr double t_cdf_4_3 = 0.98002901596414058636;
inline constexpr double t_cdf_5_2sqrt5 = 0.99671686408621849692;
inline constexpr double t_cdf_7_2sqrt7 = 0.99943310844832017732;
inline constexpr double t_cdf_2_5__1_3 = 0.84975660536464587553;
inline constexpr double ibeta_3_5__0_5__0_37 = 0.010656933833374922478;

// skew-t distribution
inline constexpr double skew_t_pdf_2_1_2 = 0.11892167261868277993;
inline constexpr double skew_t_cdf_2_1_3 = 0.91398031690528720001;
inline constexpr double skew_t_cdf_3_m15_m2 = 0.134879364778070557;
inline constexpr double mixture_pdf_ex2_3 = 0.035631139614189554021;

// norming constants
inline constexpr double a_n_ex1_25 = 3.3711180324409722004;
inline constexpr double a_n_ex1_100 = 6.7422360648819444008;
inline constexpr double a_n_ex2_1000 = 10.127173813411616041;

// expansion coefficients, first mixture (v = 2, 3, 4)
inline constexpr double ex1_lead = 2 * 0.22728873577297383394;
inline constexpr double ex1_a1 = -1.5875290533815028228;
inline constexpr double ex1_a2 = 2.7042344578901732532;
inline constexpr double ex1_a3 = 1.4263398835369727123;
inline constexpr double ex1_a4 = -5.2122110637081337986;
inline constexpr double ex1_a5 = 2.6311471900176802296;
inline constexpr double ex1_k1 = -3.1750581067630056456;
inline constexpr double ex1_k2 = -13.030527659270334496;
inline constexpr double ex1_k3 = 8.1127033736705197597;

// expansion coefficients, second mixture (v = 3, 6, 8)
inline constexpr double ex2_lead = 2 * 0.51931969809641980848;
inline constexpr double ex2_a1 = -3.7266790338306733234;
inline constexpr double ex2_a2 = 12.148270600478958883;
inline constexpr double ex2_a3 = 19.485608306658999818;
inline constexpr double ex2_a4 = -307.04131660631164432;
inline constexpr double ex2_a5 = 215.66584568170384162;
inline constexpr double ex2_k1 = -6.2111317230511222056;
inline constexpr double ex2_k2 = -818.77684428349771819;
inline constexpr double ex2_k3 = 28.345964734450904061;

// component formulas
inline constexpr double a1_2_1 = -1.5875290533815028228;
inline constexpr double a2_3_1 = 12.148270600478959109;
inline constexpr double a1_3_1_5 = -3.6542559903626407778;

// quadrature-grade evaluations
inline constexpr double ex1_mixture_cdf_a25x2 = 0.98787728603089889233;
inline constexpr double exact_max_cdf_ex2_100_3 = 0.96405078216778187664;
inline constexpr double exact_max_pdf_ex1_100_1 = 0.78102122062916184738;

}  // namespace mstx_tests::ref

#endif
