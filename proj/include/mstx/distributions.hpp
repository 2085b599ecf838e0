#ifndef MSTX_DISTRIBUTIONS_HPP
#define MSTX_DISTRIBUTIONS_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace mstx {

// One skew-t component: degrees of freedom v > 0, slant beta (finite).
struct SkewTParams {
    double v;
    double beta;
};

struct MixtureComponent {
    SkewTParams params;
    double weight;
};

// Validated finite mixture of skew-t components. Construction sorts the
// components by degrees of freedom and rejects ties; weights must be strictly
// positive and sum to one within 1e-12.
class MixtureSpec {
  public:
    explicit MixtureSpec(std::vector<MixtureComponent> components);

    // JSON document {"components":[{"v":2,"beta":1,"p":0.5},...]}.
    // Reports the first violated invariant with its component index.
    static MixtureSpec from_json(const std::string& text);
    static MixtureSpec load_file(const std::string& path);
    std::string to_json() const;

    const std::vector<MixtureComponent>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }
    const MixtureComponent& component(std::size_t i) const { return components_[i]; }

    // Degrees of freedom of the i-th component (0-based), +infinity when the
    // mixture has fewer components. The degenerate coefficient conventions of
    // the tail expansion hang off this.
    double dof_or_inf(std::size_t i) const;

  private:
    std::vector<MixtureComponent> components_;
};

double skew_t_pdf(const SkewTParams& params, double x);

// Distribution / survival by adaptive quadrature of the density; tol is the
// absolute error target (also used as relative target on the computed tail
// mass, which keeps relative accuracy at large |x|). Preconditions demand
// tol >= 1e-13.
double skew_t_cdf(const SkewTParams& params, double x, double tol = 1e-12);
double skew_t_survival(const SkewTParams& params, double x, double tol = 1e-12);

double mixture_pdf(const MixtureSpec& spec, double x);
double mixture_cdf(const MixtureSpec& spec, double x, double tol = 1e-12);
double mixture_survival(const MixtureSpec& spec, double x, double tol = 1e-12);

// Distribution values at an ascending sequence of points, computed by one
// sweep with incremental panels between neighbors. Much faster than repeated
// mixture_cdf calls when the sequence is long (sample-based tests).
std::vector<double> mixture_cdf_sorted(const MixtureSpec& spec, const std::vector<double>& xs,
                                       double tol = 1e-10);

}  // namespace mstx

#endif
