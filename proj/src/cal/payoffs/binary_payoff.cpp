#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cal/payoffs/payoff_spec.hpp"

namespace cal {

namespace {

// Binary calibration on a probability grid. The indicator 1{p_t ~ g} is a
// triangular kernel; the value is centered at the forecast (y - p_t) so the
// payoff is exactly mean-zero under y ~ Bernoulli(p_t).
class BinaryPayoff final : public PayoffSpec {
public:
  BinaryPayoff(std::vector<double> grid, double bandwidth)
      : PayoffSpec("binary", build_labels(grid), scan_bound(grid, bandwidth), false),
        grid_(std::move(grid)),
        bandwidth_(bandwidth) {}

  PayoffVector evaluate(const Features&, const Forecast& p, double y) const override {
    if (std::abs(y) > 1e-9 && std::abs(y - 1.0) > 1e-9) {
      throw std::invalid_argument("binary payoff: outcome must be 0 or 1");
    }
    double pt = std::clamp(p.mean(), 0.0, 1.0);
    std::vector<double> v(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      v[i] = kernel(pt, grid_[i]) * (y - pt);
    }
    return wrap(std::move(v));
  }

private:
  double kernel(double pt, double g) const {
    return std::max(0.0, 1.0 - std::abs(pt - g) / bandwidth_);
  }

  static LabelsPtr build_labels(const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("binary payoff: empty grid");
    Labels l;
    for (double g : grid) {
      if (g < 0.0 || g > 1.0) throw std::domain_error("binary payoff: grid point outside [0,1]");
      l.push_back("p=" + format_number_label(g));
    }
    return make_labels(std::move(l));
  }

  // sup over p_t of sum_g K(p_t,g)^2 * max(p_t, 1-p_t)^2, scanned on a fine
  // grid that includes the kernel breakpoints.
  static double scan_bound(const std::vector<double>& grid, double bandwidth) {
    if (!(bandwidth > 0.0)) throw std::invalid_argument("binary payoff: bandwidth must be > 0");
    std::vector<double> pts;
    for (int i = 0; i <= 2000; ++i) pts.push_back(i / 2000.0);
    for (double g : grid) {
      for (double s : {-bandwidth, 0.0, bandwidth}) {
        double p = g + s;
        if (p >= 0.0 && p <= 1.0) pts.push_back(p);
      }
    }
    double best = 0.0;
    for (double p : pts) {
      double acc = 0.0;
      for (double g : grid) {
        double k = std::max(0.0, 1.0 - std::abs(p - g) / bandwidth);
        acc += k * k;
      }
      double m = std::max(p, 1.0 - p);
      best = std::max(best, acc * m * m);
    }
    // Scan undershoots the true sup by at most the local curvature over one
    // spacing; a loose-side bound stays valid for the budget arithmetic.
    return best * (1.0 + 1e-3);
  }

  std::vector<double> grid_;
  double bandwidth_;
};

} // namespace

PayoffSpecPtr make_binary_payoff(std::vector<double> grid, double bandwidth) {
  return std::make_shared<BinaryPayoff>(std::move(grid), bandwidth);
}

} // namespace cal
