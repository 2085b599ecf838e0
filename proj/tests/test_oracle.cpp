#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mstx/errors.hpp"
#include "mstx/oracle.hpp"
#include "mstx/special_functions.hpp"
#include "reference_values.hpp"

using namespace mstx;
namespace ref = mstx_tests::ref;
using C = MixtureComponent;

namespace {

MixtureSpec example1() { return MixtureSpec::load_file(std::string(MSTX_SPEC_DIR) + "/example1.json"); }
MixtureSpec example2() { return MixtureSpec::load_file(std::string(MSTX_SPEC_DIR) + "/example2.json"); }

}  // namespace

TEST_CASE("exact maximum distribution anchors") {
    const auto ex1 = example1();
    const auto ex2 = example2();
    ExpansionModel m1(ex1);

    // n = 1 degenerates to the mixture distribution itself
    const double a1 = m1.a_n(1);
    CHECK(exact_max_cdf(m1, 1, 2.0) ==
          doctest::Approx(mixture_cdf(ex1, 2.0 * a1, 1e-13)).epsilon(1e-12));

    CHECK(exact_max_cdf(ex2, 100, 3.0) ==
          doctest::Approx(ref::exact_max_cdf_ex2_100_3).epsilon(1e-12));
    CHECK(exact_max_pdf(ex1, 100, 1.0) ==
          doctest::Approx(ref::exact_max_pdf_ex1_100_1).epsilon(1e-11));
    CHECK(exact_max_pdf(ex1, 100, 1e-6) == doctest::Approx(0.0));
    CHECK_THROWS_AS(exact_max_cdf(ex1, 100, -1.0), validation_error);
    CHECK_THROWS_AS(exact_max_cdf(ex1, 0, 1.0), validation_error);
}

TEST_CASE("exact maximum distribution is monotone with unit-mass density") {
    ExpansionModel m(example1());
    double prev = -1.0;
    for (double x = 0.3; x <= 6.0; x += 0.3) {
        const double f = exact_max_cdf(m, 100, x, 1e-13);
        CHECK(f >= prev);
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
        prev = f;
    }
    auto density = [&](double x) { return exact_max_pdf(m, 100, x, 1e-11); };
    const double mass = integrate(density, 0.05, 50.0, 1e-6, 1e-6);
    CHECK(std::fabs(mass - 1.0) < 5e-3);
}

TEST_CASE("finite differences of the exact cdf match the exact pdf") {
    ExpansionModel m(example1());
    for (double x : {0.7, 1.0, 2.0, 3.0}) {
        const double h = 1e-5 * x;
        const double fd =
            (exact_max_cdf(m, 100, x + h, 1e-13) - exact_max_cdf(m, 100, x - h, 1e-13)) /
            (2.0 * h);
        const double pdf = exact_max_pdf(m, 100, x, 1e-13);
        CHECK(std::fabs(fd - pdf) <= 1e-5 * pdf + 1e-10);
    }
}

TEST_CASE("power-normalized oracle equals the linear one at x^{1/v1}") {
    ExpansionModel m(example2());
    for (double x : {0.4, 1.0, 2.7}) {
        CHECK(exact_max_cdf_power(m, 50, x) == exact_max_cdf(m, 50, std::pow(x, 1.0 / 3.0)));
    }
    // identity at x = 1
    CHECK(exact_max_cdf_power(m, 50, 1.0) == exact_max_cdf(m, 50, 1.0));
    const double jac = std::pow(2.7, 1.0 / 3.0 - 1.0) / 3.0;
    CHECK(exact_max_pdf_power(m, 50, 2.7) ==
          jac * exact_max_pdf(m, 50, std::pow(2.7, 1.0 / 3.0)));
}

TEST_CASE("error table rows and validation") {
    const auto ex2 = example2();
    const auto rows = error_table(ex2, TableMode::pdf, 3.0, {25, 50}, 1e-13);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].n == 25);
    // published cells of the pdf error table at x = 3, n = 25
    CHECK(std::fabs(rows[0].delta_l[0] - 0.0008041273) < 5e-9);
    CHECK(std::fabs(rows[0].delta_p[1] - 0.0223613528) < 5e-9);
    CHECK(std::fabs(rows[0].delta_l[2] - 0.0000566926) < 5e-9);

    CHECK_THROWS_AS(error_table(ex2, TableMode::pdf, 3.0, {}), validation_error);
    CHECK_THROWS_AS(error_table(ex2, TableMode::pdf, 3.0, {1}), validation_error);
    CHECK_THROWS_AS(error_table(ex2, TableMode::pdf, -3.0, {25}), validation_error);
}

TEST_CASE("parallel error table equals the sequential one") {
    const auto ex1 = example1();
    std::vector<std::int64_t> grid;
    for (std::int64_t n = 25; n <= 250; n += 25) grid.push_back(n);
    const auto seq = error_table(ex1, TableMode::cdf, 2.0, grid, 1e-12, 1);
    const auto par = error_table(ex1, TableMode::cdf, 2.0, grid, 1e-12, 4);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].n == par[i].n);
        for (int j = 0; j < 3; ++j) {
            CHECK(seq[i].delta_l[j] == par[i].delta_l[j]);
            CHECK(seq[i].delta_p[j] == par[i].delta_p[j]);
        }
    }
}

TEST_CASE("sampling is reproducible and validated") {
    const auto ex1 = example1();
    const auto a = sample_mixture(ex1, 1000, 42);
    const auto b = sample_mixture(ex1, 1000, 42);
    CHECK(a == b);
    const auto c = sample_mixture(ex1, 1000, 43);
    CHECK(a != c);
    // prefix stability: draw i depends only on (seed, i)
    const auto shorter = sample_mixture(ex1, 100, 42);
    CHECK(std::equal(shorter.begin(), shorter.end(), a.begin()));
    CHECK_THROWS_AS(sample_mixture(ex1, 0, 1), validation_error);
}

TEST_CASE("symmetric component sampling matches the Student-t law") {
    MixtureSpec single({{{4.0, 0.0}, 1.0}});
    auto draws = sample_mixture(single, 100000, 2024);
    std::sort(draws.begin(), draws.end());
    std::vector<double> cdf_vals(draws.size());
    for (std::size_t i = 0; i < draws.size(); ++i) {
        cdf_vals[i] = student_t_cdf(4.0, draws[i]);
    }
    const double d = ks_statistic(cdf_vals);
    CHECK(d < ks_critical_value_1pct(draws.size()));
}

TEST_CASE("mixture sampling matches the quadrature distribution") {
    const auto ex1 = example1();
    auto draws = sample_mixture(ex1, 100000, 77);
    std::sort(draws.begin(), draws.end());
    const auto cdf_vals = mixture_cdf_sorted(ex1, draws, 1e-8);
    const double d = ks_statistic(cdf_vals);
    CHECK(d < ks_critical_value_1pct(draws.size()));
}

TEST_CASE("ks statistic flags a wrong distribution") {
    MixtureSpec single({{{4.0, 0.0}, 1.0}});
    auto draws = sample_mixture(single, 20000, 5);
    std::sort(draws.begin(), draws.end());
    std::vector<double> wrong(draws.size());
    for (std::size_t i = 0; i < draws.size(); ++i) {
        wrong[i] = student_t_cdf(4.0, draws[i] - 0.15);
    }
    CHECK(ks_statistic(wrong) > ks_critical_value_1pct(draws.size()));
}
