#include <cmath>
#include <stdexcept>
#include <string>

#include "cal/payoffs/payoff_spec.hpp"

namespace cal {

namespace {

// Excess loss against each expert forecast carried in the features. Losses are
// computed on outcomes rescaled to [0,1] (CRPS scales linearly, the MSE point
// prediction is the forecast mean), so each coordinate lies in [-1, 1].
// Semi-consistent: propriety only drives the positive part to zero.
class RegretPayoff final : public PayoffSpec {
public:
  RegretPayoff(std::size_t num_experts, RegretLoss loss, double y_min, double y_max)
      : PayoffSpec(loss == RegretLoss::Crps ? "regret_crps" : "regret_mse",
                   build_labels(num_experts), double(num_experts), true),
        loss_(loss),
        num_experts_(num_experts),
        width_(y_max - y_min) {
    (void)y_min;
    if (num_experts == 0) throw std::invalid_argument("regret payoff: need >= 1 expert");
    if (!(width_ > 0.0)) throw std::invalid_argument("regret payoff: empty outcome range");
  }

  double loss_value(const Forecast& p, double y) const {
    if (loss_ == RegretLoss::Crps) return p.crps(y) / width_;
    double d = (p.mean() - y) / width_;
    return d * d;
  }

  PayoffVector evaluate(const Features& x, const Forecast& p, double y) const override {
    require_experts(x);
    double own = loss_value(p, y);
    std::vector<double> v(num_experts_);
    for (std::size_t i = 0; i < num_experts_; ++i) {
      v[i] = own - loss_value(x.experts[i], y);
    }
    return wrap(std::move(v));
  }

  SmoothedInner smoothed_inner(const Features& x, const PiecewiseDensity& p, double y,
                               const PayoffVector& avg, double) const override {
    require_experts(x);
    double coeff = 0.0; // d(value)/d(own loss): expert losses do not depend on p
    for (double a : avg.values()) coeff += a;

    double own;
    std::vector<double> d_loss;
    if (loss_ == RegretLoss::Crps) {
      crps_with_gradient(p, y, own, d_loss);
    } else {
      mse_with_gradient(p, y, own, d_loss);
    }

    double value = 0.0;
    for (std::size_t i = 0; i < num_experts_; ++i) {
      value += avg.values()[i] * (own - loss_value(x.experts[i], y));
    }
    for (double& g : d_loss) g *= coeff;
    return {value, std::move(d_loss)};
  }

private:
  void require_experts(const Features& x) const {
    if (x.experts.size() < num_experts_) {
      throw std::invalid_argument("regret payoff: features carry " +
                                  std::to_string(x.experts.size()) + " expert forecasts, need " +
                                  std::to_string(num_experts_));
    }
  }

  void mse_with_gradient(const PiecewiseDensity& p, double y, double& loss,
                         std::vector<double>& d_mass) const {
    const auto& edges = p.edges();
    double d = (p.mean() - y) / width_;
    loss = d * d;
    d_mass.assign(p.bins(), 0.0);
    for (std::size_t b = 0; b < p.bins(); ++b) {
      double mid = 0.5 * (edges[b] + edges[b + 1]);
      d_mass[b] = 2.0 * d * mid / width_;
    }
  }

  // CRPS and its mass gradient in one pass. With G(s) = F(s) - 1{s >= y}:
  // CRPS = int G^2, and dF/dm_b is the ramp of bin b, so
  // dCRPS/dm_b = 2 * (int_{bin b} G * ramp_b + int_{after bin b} G).
  void crps_with_gradient(const PiecewiseDensity& p, double y, double& loss,
                          std::vector<double>& d_mass) const {
    const auto& edges = p.edges();
    const auto& masses = p.masses();
    std::size_t n = p.bins();
    std::vector<double> bin_g(n, 0.0);   // int of G over the bin
    std::vector<double> ramp_g(n, 0.0);  // int of G * ramp over the bin
    double value = 0.0;
    double f_lo = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
      double lo = edges[b], hi = edges[b + 1];
      double w = hi - lo;
      double slope = masses[b] / w;
      auto segment = [&](double s0, double s1, double ind) {
        double len = s1 - s0;
        if (len <= 0.0) return;
        double g0 = f_lo + slope * (s0 - lo) - ind;
        double g1 = f_lo + slope * (s1 - lo) - ind;
        double r0 = (s0 - lo) / w, r1 = (s1 - lo) / w;
        value += len * (g0 * g0 + g0 * g1 + g1 * g1) / 3.0;
        bin_g[b] += len * 0.5 * (g0 + g1);
        ramp_g[b] += len / 6.0 * (g0 * (2.0 * r0 + r1) + g1 * (r0 + 2.0 * r1));
      };
      if (y <= lo) {
        segment(lo, hi, 1.0);
      } else if (y >= hi) {
        segment(lo, hi, 0.0);
      } else {
        segment(lo, y, 0.0);
        segment(y, hi, 1.0);
      }
      f_lo += masses[b];
    }
    double suffix = 0.0;
    d_mass.assign(n, 0.0);
    for (std::size_t b = n; b-- > 0;) {
      d_mass[b] = 2.0 * (ramp_g[b] + suffix) / width_;
      suffix += bin_g[b];
    }
    loss = value / width_;
  }

  static LabelsPtr build_labels(std::size_t k) {
    Labels l;
    for (std::size_t i = 0; i < k; ++i) l.push_back("expert=" + std::to_string(i));
    return make_labels(std::move(l));
  }

  RegretLoss loss_;
  std::size_t num_experts_;
  double width_;
};

} // namespace

PayoffSpecPtr make_regret_payoff(std::size_t num_experts, RegretLoss loss, double y_min,
                                 double y_max) {
  return std::make_shared<RegretPayoff>(num_experts, loss, y_min, y_max);
}

} // namespace cal
