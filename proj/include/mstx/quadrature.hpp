#ifndef MSTX_QUADRATURE_HPP
#define MSTX_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "mstx/errors.hpp"

namespace mstx {

// Adaptive Gauss-Kronrod (G7,K15) quadrature. Panels are bisected worst-first
// until the summed error estimate drops below max(abs_tol, rel_tol*|I|).
// Non-convergence within the panel budget raises precision_fault.

namespace quad_detail {

// 15-point Kronrod abscissae (positive half) and weights, with the embedded
// 7-point Gauss weights. Standard QUADPACK dqk15 constants.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    double value;
    double error;
};

template <class F>
PanelResult gauss_kronrod_15(const F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    double resabs = std::fabs(resk);
    double fv[15];
    fv[7] = fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        const double sum = f1 + f2;
        resk += kWgk[j] * sum;
        resabs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * sum;
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j) {
        resasc += kWgk[j] * (std::fabs(fv[j] - reskh) + std::fabs(fv[14 - j] - reskh));
    }
    resabs *= std::fabs(half);
    resasc *= std::fabs(half);

    const double value = resk * half;
    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) {
        err = std::max(err, 50.0 * eps * resabs);
    }
    if (!std::isfinite(value)) {
        throw precision_fault("quadrature: integrand produced a non-finite value");
    }
    return {value, err};
}

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
double adaptive(const F& f, double a, double b, double abs_tol, double rel_tol) {
    if (a == b) return 0.0;
    constexpr int kMaxPanels = 4000;

    std::priority_queue<Panel> panels;
    auto first = gauss_kronrod_15(f, a, b);
    panels.push({a, b, first.value, first.error});
    double total = first.value;
    double queue_err = first.error;
    double stuck_err = 0.0;  // error of panels too narrow to refine further
    const double min_width = std::fabs(b - a) * std::numeric_limits<double>::epsilon() * 8.0;

    int used = 1;
    while (queue_err + stuck_err > std::max(abs_tol, rel_tol * std::fabs(total))) {
        if (used >= kMaxPanels || panels.empty()) {
            throw precision_fault("quadrature: panel budget exhausted before reaching tolerance");
        }
        Panel worst = panels.top();
        panels.pop();
        if (std::fabs(worst.b - worst.a) < min_width) {
            queue_err -= worst.error;
            stuck_err += worst.error;
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        auto left = gauss_kronrod_15(f, worst.a, mid);
        auto right = gauss_kronrod_15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        queue_err += left.error + right.error - worst.error;
        panels.push({worst.a, mid, left.value, left.error});
        panels.push({mid, worst.b, right.value, right.error});
        ++used;
    }
    return total;
}

}  // namespace quad_detail

template <class F>
double integrate(const F& f, double a, double b, double abs_tol, double rel_tol) {
    return quad_detail::adaptive(f, a, b, abs_tol, rel_tol);
}

// Integral of f over [c, infinity), c > 0, through the substitution t = c/u:
//   int_c^inf f(t) dt = int_0^1 f(c/u) c/u^2 du.
template <class F>
double integrate_upper_tail(const F& f, double c, double abs_tol, double rel_tol) {
    if (!(c > 0.0)) {
        throw validation_error("integrate_upper_tail: lower limit must be positive");
    }
    auto g = [&](double u) {
        if (u <= 0.0) return 0.0;
        const double t = c / u;
        return f(t) * t / u;
    };
    return quad_detail::adaptive(g, 0.0, 1.0, abs_tol, rel_tol);
}

}  // namespace mstx

#endif
