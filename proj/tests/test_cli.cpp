#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "reference_values.hpp"

namespace {

const std::string kCli = MSTX_CLI_PATH;
const std::string kSpecDir = MSTX_SPEC_DIR;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string out_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                                 "/mstx_cli_out.txt";
    const std::string cmd = kCli + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    return {code, buf.str()};
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::map<std::string, std::string> parse_labeled_csv(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        if (comma != std::string::npos) {
            out[line.substr(0, comma)] = line.substr(comma + 1);
        }
    }
    return out;
}

double field_after(const std::string& text, const std::string& label) {
    const auto pos = text.find(label);
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + label.size()));
}

}  // namespace

TEST_CASE("coeffs subcommand prints the classified regime and coefficients") {
    auto res = run_cli("coeffs --spec " + kSpecDir + "/example1.json");
    REQUIRE(res.exit_code == 0);
    auto kv = parse_labeled_csv(res.output);
    CHECK(kv.at("case") == "III");
    CHECK(std::stod(kv.at("gamma")) == doctest::Approx(1.0));
    CHECK(std::stod(kv.at("rho")) == doctest::Approx(1.0));
    CHECK(std::stod(kv.at("a3")) == doctest::Approx(mstx_tests::ref::ex1_a3).epsilon(1e-12));
    CHECK(std::stod(kv.at("eta")) == doctest::Approx(4.0));

    auto res2 = run_cli("coeffs --spec " + kSpecDir + "/example2.json");
    REQUIRE(res2.exit_code == 0);
    auto kv2 = parse_labeled_csv(res2.output);
    CHECK(kv2.at("case") == "II");
    CHECK(std::stod(kv2.at("gamma")) == doctest::Approx(1.0));
}

TEST_CASE("eval subcommand prints expansion, exact value and their gap") {
    auto res = run_cli("eval --spec " + kSpecDir +
                       "/example1.json --mode cdf --norm linear --n 25 --x 1 --order 1");
    REQUIRE(res.exit_code == 0);
    CHECK(field_after(res.output, "expansion") == doctest::Approx(std::exp(-1.0)).epsilon(1e-11));

    auto res2 = run_cli("eval --spec " + kSpecDir +
                        "/example1.json --mode cdf --norm linear --n 25 --x 2 --order 2 --tol 1e-13");
    REQUIRE(res2.exit_code == 0);
    CHECK(std::fabs(field_after(res2.output, "abs_diff") - 0.000428915) < 5e-8);

    auto res3 = run_cli("eval --spec " + kSpecDir +
                        "/example2.json --mode pdf --norm power --n 375 --x 0.75 --order 1 --tol 1e-13");
    REQUIRE(res3.exit_code == 0);
    CHECK(std::fabs(field_after(res3.output, "abs_diff") - 0.004206893) < 5e-8);
}

TEST_CASE("table subcommand reproduces published cells and round-trips") {
    const std::string out = "/tmp/mstx_test_table.csv";
    std::remove(out.c_str());
    auto res = run_cli("table --spec " + kSpecDir +
                       "/example1.json --mode cdf --x 2 --n-start 25 --n-end 100 --n-step 25 "
                       "--tol 1e-13 --out " + out);
    REQUIRE(res.exit_code == 0);
    const auto lines = read_lines(out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "n,d1_l,d1_p,d2_l,d2_p,d3_l,d3_p");
    // row n = 50, column d2_l
    std::istringstream row(lines[2]);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 7);
    CHECK(cells[0] == "50");
    CHECK(std::fabs(std::stod(cells[3]) - 0.000834143) < 5e-8);

    // reparse and reprint: byte-identical
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream in(lines[i]);
        std::string n_field;
        std::getline(in, n_field, ',');
        std::ostringstream rebuilt;
        rebuilt << n_field;
        std::string value;
        while (std::getline(in, value, ',')) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.9f", std::stod(value));
            rebuilt << ',' << buf;
        }
        CHECK(rebuilt.str() == lines[i]);
    }
}

TEST_CASE("curve subcommand emits the series the figures plot") {
    const std::string out = "/tmp/mstx_test_curve.csv";
    auto res = run_cli("curve --spec " + kSpecDir +
                       "/example1.json --mode cdf --norm linear --x 2 --n-start 25 --n-end 250 "
                       "--n-step 25 --out " + out);
    REQUIRE(res.exit_code == 0);
    const auto lines = read_lines(out);
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] == "n,actual,order1,order2,order3");
    const double phi = std::exp(-0.25);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream in(lines[i]);
        std::string cell2;
        std::vector<double> vals;
        std::getline(in, cell2, ',');
        while (std::getline(in, cell2, ',')) vals.push_back(std::stod(cell2));
        REQUIRE(vals.size() == 4);
        CHECK(std::fabs(vals[1] - phi) < 1e-12);  // order-1 column is n-free
    }

    auto both = run_cli("curve --spec " + kSpecDir +
                        "/example2.json --mode pdf --norm both --x 0.75 --n-start 375 --n-end 750 "
                        "--n-step 375 --out /tmp/mstx_test_curve2.csv");
    REQUIRE(both.exit_code == 0);
    CHECK(!read_lines("/tmp/mstx_test_curve2_linear.csv").empty());
    CHECK(!read_lines("/tmp/mstx_test_curve2_power.csv").empty());
}

TEST_CASE("plot subcommand writes a self-contained SVG") {
    const std::string out = "/tmp/mstx_test_plot.svg";
    auto res = run_cli("plot --spec " + kSpecDir +
                       "/example1.json --mode cdf --norm linear --x 2 --n-start 25 --n-end 250 "
                       "--n-step 25 --out " + out);
    REQUIRE(res.exit_code == 0);
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string svg = buf.str();
    CHECK(svg.find("<svg") != std::string::npos);
    for (const char* color : {"black", "blue", "red", "green"}) {
        CHECK(svg.find(color) != std::string::npos);
    }
    std::size_t polylines = 0;
    for (std::size_t pos = 0; (pos = svg.find("<polyline", pos)) != std::string::npos; ++pos) {
        ++polylines;
    }
    CHECK(polylines == 4);

    // degenerate single-point grid falls back to markers
    auto single = run_cli("plot --spec " + kSpecDir +
                          "/example1.json --mode cdf --norm linear --x 2 --n-start 25 --n-end 25 "
                          "--n-step 25 --out /tmp/mstx_test_plot1.svg");
    REQUIRE(single.exit_code == 0);
    std::ifstream in1("/tmp/mstx_test_plot1.svg");
    std::stringstream buf1;
    buf1 << in1.rdbuf();
    CHECK(buf1.str().find("<circle") != std::string::npos);
    CHECK(buf1.str().find("<polyline") == std::string::npos);
}

TEST_CASE("validation failures exit with code 2 and write nothing") {
    const std::string out = "/tmp/mstx_test_empty.csv";
    std::remove(out.c_str());
    auto res = run_cli("table --spec " + kSpecDir +
                       "/example1.json --mode cdf --x 2 --n-start 100 --n-end 50 --n-step 25 "
                       "--out " + out);
    CHECK(res.exit_code == 2);
    CHECK(read_lines(out).empty());

    auto bad_tol = run_cli("eval --spec " + kSpecDir +
                           "/example1.json --mode cdf --norm linear --n 25 --x 2 --order 2 "
                           "--tol 1e-14");
    CHECK(bad_tol.exit_code == 2);

    const std::string bad_spec = "/tmp/mstx_bad_spec.json";
    std::ofstream(bad_spec) << R"({"components":[{"v":2,"beta":0,"p":0.4}]})";
    auto res2 = run_cli("eval --spec " + bad_spec +
                        " --mode cdf --norm linear --n 25 --x 2 --order 1");
    CHECK(res2.exit_code == 2);
}

TEST_CASE("quadrature tolerance honors the environment variable") {
    auto res = run_cli("eval --spec " + kSpecDir +
                       "/example1.json --mode cdf --norm linear --n 25 --x 2 --order 1",
                       /* leading env assignment via shell */);
    (void)res;
    const std::string out_file = "/tmp/mstx_cli_env.txt";
    const std::string cmd = "MST_EXTREMES_TOL=1e-8 " + kCli + " eval --spec " + kSpecDir +
                            "/example1.json --mode cdf --norm linear --n 25 --x 2 --order 1 > " +
                            out_file + " 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
    const std::string bad = "MST_EXTREMES_TOL=1e-20 " + kCli + " eval --spec " + kSpecDir +
                            "/example1.json --mode cdf --norm linear --n 25 --x 2 --order 1 "
                            "> /dev/null 2>&1";
    const int status = std::system(bad.c_str());
    CHECK(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 2);
}
