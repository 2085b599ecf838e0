#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <locale>
#include <sstream>
#include <thread>
#include <vector>

#include "mstx/errors.hpp"
#include "mstx/oracle.hpp"

namespace mstx::cli {

namespace {

void validate_config(const RunConfig& c) {
    if (c.n_start < 2) throw validation_error("config: n-start must be at least 2");
    if (c.n_step < 1) throw validation_error("config: n-step must be at least 1");
    if (!(c.tol >= 1e-13 && c.tol <= 1e-6)) {
        throw validation_error("config: tol must lie in [1e-13, 1e-6]");
    }
    if (!(c.x > 0.0)) throw validation_error("config: x must be positive");
}

std::vector<std::int64_t> build_grid(const RunConfig& c) {
    std::vector<std::int64_t> grid;
    for (std::int64_t n = c.n_start; n <= c.n_end; n += c.n_step) grid.push_back(n);
    if (grid.empty()) {
        throw validation_error("config: empty n grid (n-end below n-start)");
    }
    return grid;
}

unsigned worker_count(const RunConfig& c, std::size_t rows) {
    unsigned t = c.threads != 0 ? c.threads : std::max(1u, std::thread::hardware_concurrency());
    return std::max(1u, std::min<unsigned>(t, static_cast<unsigned>(rows)));
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot open output file: " + path);
    out.imbue(std::locale::classic());
    return out;
}

std::string suffixed_path(const std::string& path, const std::string& suffix) {
    const auto dot = path.find_last_of('.');
    const auto slash = path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return path + suffix;
    }
    return path.substr(0, dot) + suffix + path.substr(dot);
}

struct CurveData {
    std::vector<std::int64_t> n;
    std::vector<double> actual, order1, order2, order3;
};

// Rows are independent; a bounded pool fills the vectors by index so the
// output order matches the grid regardless of completion order.
CurveData compute_curve(const ExpansionModel& model, const RunConfig& c,
                        const std::vector<std::int64_t>& grid, bool power) {
    CurveData data;
    data.n = grid;
    data.actual.resize(grid.size());
    data.order1.resize(grid.size());
    data.order2.resize(grid.size());
    data.order3.resize(grid.size());
    auto row = [&](std::size_t i) {
        const std::int64_t n = grid[i];
        if (c.mode == Mode::cdf) {
            data.actual[i] = power ? exact_max_cdf_power(model, n, c.x, c.tol)
                                   : exact_max_cdf(model, n, c.x, c.tol);
            for (int o = 1; o <= 3; ++o) {
                const double val = power ? model.cdf_expansion_power(n, c.x, o)
                                         : model.cdf_expansion(n, c.x, o);
                (o == 1 ? data.order1 : o == 2 ? data.order2 : data.order3)[i] = val;
            }
        } else {
            data.actual[i] = power ? exact_max_pdf_power(model, n, c.x, c.tol)
                                   : exact_max_pdf(model, n, c.x, c.tol);
            for (int o = 1; o <= 3; ++o) {
                const double val = power ? model.pdf_expansion_power(n, c.x, o)
                                         : model.pdf_expansion(n, c.x, o);
                (o == 1 ? data.order1 : o == 2 ? data.order2 : data.order3)[i] = val;
            }
        }
    };
    const unsigned workers = worker_count(c, grid.size());
    if (workers == 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) row(i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                for (std::size_t i = w; i < grid.size(); i += workers) row(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    return data;
}

void write_curve_csv(const std::string& path, const CurveData& data) {
    auto out = open_output(path);
    out << "n,actual,order1,order2,order3\n";
    out << std::fixed << std::setprecision(12);
    for (std::size_t i = 0; i < data.n.size(); ++i) {
        out << data.n[i] << ',' << data.actual[i] << ',' << data.order1[i] << ','
            << data.order2[i] << ',' << data.order3[i] << '\n';
    }
}

struct Series {
    std::string label;
    std::string color;
    const std::vector<double>* values;
};

std::string format_tick(double v) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(6) << v;
    return os.str();
}

// Self-contained SVG: four polylines over the n grid with axes and a legend.
void write_svg(const std::string& path, const std::string& title,
               const std::vector<std::int64_t>& ns, const std::vector<Series>& series) {
    constexpr double kW = 820.0, kH = 520.0;
    constexpr double kLeft = 80.0, kRight = 790.0, kTop = 40.0, kBottom = 470.0;

    double ymin = 1e300, ymax = -1e300;
    for (const auto& s : series) {
        for (double v : *s.values) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (!(ymax > ymin)) {
        ymax = ymin + (std::fabs(ymin) > 0 ? std::fabs(ymin) * 0.1 : 1.0);
        ymin -= (ymax - ymin);
    }
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;
    const double nmin = static_cast<double>(ns.front());
    const double nmax = static_cast<double>(ns.back());
    const double nspan = std::max(1.0, nmax - nmin);

    auto sx = [&](double n) { return kLeft + (n - nmin) / nspan * (kRight - kLeft); };
    auto sy = [&](double v) { return kBottom - (v - ymin) / (ymax - ymin) * (kBottom - kTop); };

    auto out = open_output(path);
    out << std::setprecision(8);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kW << " " << kH
        << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
    out << "<rect width=\"" << kW << "\" height=\"" << kH << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << kW / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"16\">"
        << title << "</text>\n";
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight << "\" y2=\""
        << kBottom << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
        << kBottom << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double n = nmin + nspan * i / 5.0;
        const double xx = sx(n);
        out << "<line x1=\"" << xx << "\" y1=\"" << kBottom << "\" x2=\"" << xx << "\" y2=\""
            << kBottom + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << xx << "\" y=\"" << kBottom + 20
            << "\" text-anchor=\"middle\">" << format_tick(n) << "</text>\n";
        const double v = ymin + (ymax - ymin) * i / 5.0;
        const double yy = sy(v);
        out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << yy << "\" x2=\"" << kLeft << "\" y2=\""
            << yy << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << kLeft - 9 << "\" y=\"" << yy + 4
            << "\" text-anchor=\"end\">" << format_tick(v) << "</text>\n";
    }
    out << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kH - 8
        << "\" text-anchor=\"middle\">n</text>\n";

    for (const auto& s : series) {
        if (ns.size() == 1) {
            out << "<circle cx=\"" << sx(static_cast<double>(ns[0])) << "\" cy=\""
                << sy((*s.values)[0]) << "\" r=\"4\" fill=\"" << s.color << "\"/>\n";
            continue;
        }
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < ns.size(); ++i) {
            out << sx(static_cast<double>(ns[i])) << ',' << sy((*s.values)[i]) << ' ';
        }
        out << "\"/>\n";
    }

    double ly = kTop + 8;
    for (const auto& s : series) {
        out << "<line x1=\"" << kRight - 150 << "\" y1=\"" << ly << "\" x2=\"" << kRight - 120
            << "\" y2=\"" << ly << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << kRight - 112 << "\" y=\"" << ly + 4 << "\">" << s.label
            << "</text>\n";
        ly += 18;
    }
    out << "</svg>\n";
}

std::vector<Series> curve_series(const CurveData& data) {
    return {{"actual", "black", &data.actual},
            {"order 1", "blue", &data.order1},
            {"order 2", "red", &data.order2},
            {"order 3", "green", &data.order3}};
}

}  // namespace

void cmd_table(const RunConfig& config) {
    validate_config(config);
    if (config.output.empty()) throw validation_error("table: --out is required");
    const auto spec = MixtureSpec::load_file(config.spec_path);
    const auto grid = build_grid(config);
    const auto rows = error_table(spec, config.mode == Mode::cdf ? TableMode::cdf : TableMode::pdf,
                                  config.x, grid, config.tol, worker_count(config, grid.size()));
    auto out = open_output(config.output);
    out << "n,d1_l,d1_p,d2_l,d2_p,d3_l,d3_p\n";
    out << std::fixed << std::setprecision(9);
    for (const auto& r : rows) {
        out << r.n;
        for (int i = 0; i < 3; ++i) {
            out << ',' << r.delta_l[i] << ',' << r.delta_p[i];
        }
        out << '\n';
    }
}

void cmd_curve(const RunConfig& config) {
    validate_config(config);
    if (config.output.empty()) throw validation_error("curve: --out is required");
    const ExpansionModel model(MixtureSpec::load_file(config.spec_path));
    const auto grid = build_grid(config);
    if (config.norm == Normalization::both) {
        write_curve_csv(suffixed_path(config.output, "_linear"),
                        compute_curve(model, config, grid, false));
        write_curve_csv(suffixed_path(config.output, "_power"),
                        compute_curve(model, config, grid, true));
        return;
    }
    write_curve_csv(config.output,
                    compute_curve(model, config, grid, config.norm == Normalization::power));
}

void cmd_plot(const RunConfig& config) {
    validate_config(config);
    if (config.output.empty()) throw validation_error("plot: --out is required");
    const ExpansionModel model(MixtureSpec::load_file(config.spec_path));
    const auto grid = build_grid(config);
    const std::string kind = config.mode == Mode::cdf ? "cdf" : "pdf";
    std::ostringstream title;
    title.imbue(std::locale::classic());
    title << "max " << kind << " at x=" << config.x;
    if (config.norm == Normalization::both) {
        auto lin = compute_curve(model, config, grid, false);
        write_svg(suffixed_path(config.output, "_linear"), title.str() + " (linear)", grid,
                  curve_series(lin));
        auto pow_data = compute_curve(model, config, grid, true);
        write_svg(suffixed_path(config.output, "_power"), title.str() + " (power)", grid,
                  curve_series(pow_data));
        return;
    }
    const bool power = config.norm == Normalization::power;
    auto data = compute_curve(model, config, grid, power);
    write_svg(config.output, title.str() + (power ? " (power)" : " (linear)"), grid,
              curve_series(data));
}

void cmd_eval(const RunConfig& config) {
    if (config.n < 2) throw validation_error("eval: n must be at least 2");
    if (!(config.x > 0.0)) throw validation_error("eval: x must be positive");
    if (!(config.tol >= 1e-13 && config.tol <= 1e-6)) {
        throw validation_error("eval: tol must lie in [1e-13, 1e-6]");
    }
    if (config.norm == Normalization::both) {
        throw validation_error("eval: normalization must be linear or power");
    }
    const ExpansionModel model(MixtureSpec::load_file(config.spec_path));
    const bool power = config.norm == Normalization::power;
    double expansion, exact;
    if (config.mode == Mode::cdf) {
        expansion = power ? model.cdf_expansion_power(config.n, config.x, config.order)
                          : model.cdf_expansion(config.n, config.x, config.order);
        exact = power ? exact_max_cdf_power(model, config.n, config.x, config.tol)
                      : exact_max_cdf(model, config.n, config.x, config.tol);
    } else {
        expansion = power ? model.pdf_expansion_power(config.n, config.x, config.order)
                          : model.pdf_expansion(config.n, config.x, config.order);
        exact = power ? exact_max_pdf_power(model, config.n, config.x, config.tol)
                      : exact_max_pdf(model, config.n, config.x, config.tol);
    }
    std::cout.imbue(std::locale::classic());
    std::cout << std::setprecision(12);
    std::cout << "expansion " << expansion << "\n";
    std::cout << "exact     " << exact << "\n";
    std::cout << "abs_diff  " << std::fabs(exact - expansion) << "\n";
}

void cmd_coeffs(const std::string& spec_path) {
    const ExpansionModel model(MixtureSpec::load_file(spec_path));
    const auto& t = model.tail_coefficients();
    const auto& k = model.pdf_coeffs();
    const auto& c = model.expansion_case();
    const double v1 = model.spec().component(0).params.v;
    std::cout.imbue(std::locale::classic());
    std::cout << std::setprecision(17);
    std::cout << "name,value\n";
    std::cout << "a1," << t.a1 << "\n";
    std::cout << "a2," << t.a2 << "\n";
    std::cout << "a3," << t.a3 << "\n";
    std::cout << "a4," << t.a4 << "\n";
    std::cout << "a5," << t.a5 << "\n";
    std::cout << "k1," << k.k1 << "\n";
    std::cout << "k2," << k.k2 << "\n";
    std::cout << "k3," << k.k3 << "\n";
    std::cout << "eta," << t.eta << "\n";
    std::cout << "lead," << t.lead << "\n";
    std::cout << "an_base," << std::pow(t.lead, 1.0 / v1) << "\n";
    std::cout << "beta_n," << 1.0 / v1 << "\n";
    std::cout << "case," << to_string(c.case_id) << "\n";
    std::cout << "gamma," << c.gamma << "\n";
    std::cout << "rho," << c.primary_power << "\n";
}

}  // namespace mstx::cli
