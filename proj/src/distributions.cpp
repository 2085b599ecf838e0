#include "mstx/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "mstx/errors.hpp"
#include "mstx/quadrature.hpp"
#include "mstx/special_functions.hpp"

namespace mstx {

namespace {

void validate_params(const SkewTParams& p, const std::string& where) {
    if (!(p.v > 0.0) || !std::isfinite(p.v)) {
        throw validation_error(where + ": degrees of freedom must be positive and finite");
    }
    if (!std::isfinite(p.beta)) {
        throw validation_error(where + ": slant parameter must be finite");
    }
}

void validate_tol(double tol) {
    if (!(tol >= 1e-13)) {
        throw validation_error("quadrature tolerance must be at least 1e-13");
    }
}

// Survival int_x^inf f for x >= 0: finite body panel up to the split point,
// then the inverse-substitution tail. Error is controlled in both absolute
// and relative terms so the tail mass keeps its leading digits at large x.
double positive_tail_mass(const SkewTParams& p, double x, double tol) {
    auto f = [&p](double t) { return skew_t_pdf(p, t); };
    const double split = std::max(x, p.v + 2.0);
    const double rel = std::max(tol, 1e-14);
    double total = integrate_upper_tail(f, split, tol * 0.5, rel * 0.5);
    if (x < split) {
        total += integrate(f, x, split, tol * 0.5, rel * 0.5);
    }
    return total;
}

}  // namespace

MixtureSpec::MixtureSpec(std::vector<MixtureComponent> components)
    : components_(std::move(components)) {
    if (components_.empty()) {
        throw validation_error("mixture: at least one component is required");
    }
    double weight_sum = 0.0;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto& c = components_[i];
        const std::string where = "mixture component " + std::to_string(i);
        validate_params(c.params, where);
        if (!(c.weight > 0.0) || !std::isfinite(c.weight)) {
            throw validation_error(where + ": weight must be strictly positive");
        }
        weight_sum += c.weight;
    }
    if (std::fabs(weight_sum - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "mixture: weights must sum to 1 within 1e-12, got " << weight_sum;
        throw validation_error(os.str());
    }
    std::stable_sort(components_.begin(), components_.end(),
                     [](const MixtureComponent& a, const MixtureComponent& b) {
                         return a.params.v < b.params.v;
                     });
    for (std::size_t i = 1; i < components_.size(); ++i) {
        if (!(components_[i - 1].params.v < components_[i].params.v)) {
            throw validation_error("mixture component " + std::to_string(i) +
                                   ": degrees of freedom must be strictly increasing (tie at v=" +
                                   std::to_string(components_[i].params.v) + ")");
        }
    }
}

MixtureSpec MixtureSpec::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("mixture spec: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("components") || !doc["components"].is_array()) {
        throw validation_error("mixture spec: expected an object with a \"components\" array");
    }
    std::vector<MixtureComponent> comps;
    std::size_t index = 0;
    for (const auto& item : doc["components"]) {
        const std::string where = "mixture component " + std::to_string(index);
        if (!item.is_object()) throw validation_error(where + ": expected an object");
        for (const char* key : {"v", "beta", "p"}) {
            if (!item.contains(key) || !item[key].is_number()) {
                throw validation_error(where + ": missing numeric field \"" + key + "\"");
            }
        }
        comps.push_back({{item["v"].get<double>(), item["beta"].get<double>()},
                         item["p"].get<double>()});
        ++index;
    }
    return MixtureSpec(std::move(comps));
}

MixtureSpec MixtureSpec::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw validation_error("mixture spec: cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

std::string MixtureSpec::to_json() const {
    nlohmann::json doc;
    doc["components"] = nlohmann::json::array();
    for (const auto& c : components_) {
        doc["components"].push_back(
            {{"v", c.params.v}, {"beta", c.params.beta}, {"p", c.weight}});
    }
    return doc.dump();
}

double MixtureSpec::dof_or_inf(std::size_t i) const {
    if (i < components_.size()) return components_[i].params.v;
    return std::numeric_limits<double>::infinity();
}

double skew_t_pdf(const SkewTParams& params, double x) {
    validate_params(params, "skew_t_pdf");
    const double v = params.v;
    const double arg = params.beta * x * std::sqrt((v + 1.0) / (x * x + v));
    return 2.0 * student_t_pdf(v, x) * student_t_cdf(v + 1.0, arg);
}

double skew_t_survival(const SkewTParams& params, double x, double tol) {
    validate_params(params, "skew_t_survival");
    validate_tol(tol);
    if (x >= 0.0) {
        return positive_tail_mass(params, x, tol);
    }
    // Left tail by sign symmetry: f_{v,beta}(-t) = f_{v,-beta}(t).
    const SkewTParams mirrored{params.v, -params.beta};
    return 1.0 - positive_tail_mass(mirrored, -x, tol);
}

double skew_t_cdf(const SkewTParams& params, double x, double tol) {
    validate_params(params, "skew_t_cdf");
    validate_tol(tol);
    if (x >= 0.0) {
        return 1.0 - positive_tail_mass(params, x, tol);
    }
    const SkewTParams mirrored{params.v, -params.beta};
    return positive_tail_mass(mirrored, -x, tol);
}

double mixture_pdf(const MixtureSpec& spec, double x) {
    double total = 0.0;
    for (const auto& c : spec.components()) {
        total += c.weight * skew_t_pdf(c.params, x);
    }
    return total;
}

double mixture_survival(const MixtureSpec& spec, double x, double tol) {
    validate_tol(tol);
    const double per_component = tol / static_cast<double>(spec.size());
    double total = 0.0;
    for (const auto& c : spec.components()) {
        total += c.weight * skew_t_survival(c.params, x, std::max(per_component, 1e-13));
    }
    return total;
}

double mixture_cdf(const MixtureSpec& spec, double x, double tol) {
    validate_tol(tol);
    const double per_component = tol / static_cast<double>(spec.size());
    double total = 0.0;
    for (const auto& c : spec.components()) {
        total += c.weight * skew_t_cdf(c.params, x, std::max(per_component, 1e-13));
    }
    return total;
}

std::vector<double> mixture_cdf_sorted(const MixtureSpec& spec, const std::vector<double>& xs,
                                       double tol) {
    std::vector<double> out;
    out.reserve(xs.size());
    if (xs.empty()) return out;
    if (!std::is_sorted(xs.begin(), xs.end())) {
        throw validation_error("mixture_cdf_sorted: points must be ascending");
    }
    auto f = [&spec](double t) { return mixture_pdf(spec, t); };
    const double panel_tol = std::max(tol / static_cast<double>(xs.size() + 1), 1e-15);
    double acc = mixture_cdf(spec, xs.front(), std::max(tol * 0.1, 1e-13));
    out.push_back(acc);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (xs[i] > xs[i - 1]) {
            acc += integrate(f, xs[i - 1], xs[i], panel_tol, 1e-12);
        }
        out.push_back(acc);
    }
    return out;
}

}  // namespace mstx
