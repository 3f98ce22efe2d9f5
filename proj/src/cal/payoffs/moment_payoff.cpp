#include <cmath>
#include <stdexcept>

#include "cal/payoffs/payoff_spec.hpp"

namespace cal {

namespace {

// Coordinate per order k: E_{z~p}[z^k] - z_t^k on outcomes rescaled to [0,1],
// so the bound is just the number of orders.
class MomentPayoff final : public PayoffSpec {
public:
  MomentPayoff(std::vector<int> orders, double y_min, double y_max)
      : PayoffSpec("moment", build_labels(orders), double(orders.size()), true),
        orders_(std::move(orders)),
        y_min_(y_min),
        width_(y_max - y_min) {
    if (!(width_ > 0.0)) throw std::invalid_argument("moment payoff: empty outcome range");
  }

  PayoffVector evaluate(const Features&, const Forecast& p, double y) const override {
    double z = rescale(y);
    std::vector<double> v(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      v[i] = forecast_moment(p, orders_[i]) - std::pow(z, orders_[i]);
    }
    return wrap(std::move(v));
  }

  SmoothedInner smoothed_inner(const Features&, const PiecewiseDensity& p, double y,
                               const PayoffVector& avg, double) const override {
    // Already smooth: E[z^k] is linear in the masses.
    double z = rescale(y);
    const auto& edges = p.edges();
    std::vector<double> d_mass(p.bins(), 0.0);
    double value = 0.0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      int k = orders_[i];
      double mk = 0.0;
      for (std::size_t b = 0; b < p.bins(); ++b) {
        double c = bin_moment(edges[b], edges[b + 1], k);
        mk += p.masses()[b] * c;
        d_mass[b] += avg.values()[i] * c;
      }
      value += avg.values()[i] * (mk - std::pow(z, k));
    }
    return {value, std::move(d_mass)};
  }

private:
  double rescale(double y) const { return (y - y_min_) / width_; }

  // E[z^k | bin] for the rescaled uniform bin [lo, hi] in raw units.
  double bin_moment(double lo, double hi, int k) const {
    double zl = rescale(lo), zh = rescale(hi);
    if (zh == zl) return std::pow(zl, k);
    return (std::pow(zh, k + 1) - std::pow(zl, k + 1)) / (double(k + 1) * (zh - zl));
  }

  double forecast_moment(const Forecast& p, int k) const {
    if (p.atoms) {
      double acc = 0.0;
      for (std::size_t i = 0; i < p.atoms->points().size(); ++i) {
        acc += p.atoms->weights()[i] * std::pow(rescale(p.atoms->points()[i]), k);
      }
      return acc;
    }
    const auto& edges = p.density.edges();
    double acc = 0.0;
    for (std::size_t b = 0; b < p.density.bins(); ++b) {
      acc += p.density.masses()[b] * bin_moment(edges[b], edges[b + 1], k);
    }
    return acc;
  }

  static LabelsPtr build_labels(const std::vector<int>& orders) {
    if (orders.empty()) throw std::invalid_argument("moment payoff: empty order set");
    Labels l;
    for (int k : orders) {
      if (k < 1) throw std::invalid_argument("moment payoff: orders must be >= 1");
      l.push_back("k=" + std::to_string(k));
    }
    return make_labels(std::move(l));
  }

  std::vector<int> orders_;
  double y_min_;
  double width_;
};

} // namespace

PayoffSpecPtr make_moment_payoff(std::vector<int> orders, double y_min, double y_max) {
  return std::make_shared<MomentPayoff>(std::move(orders), y_min, y_max);
}

} // namespace cal
