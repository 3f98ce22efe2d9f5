#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cal/payoffs/payoff_spec.hpp"

namespace cal {

namespace {

double logistic(double z) {
  if (z >= 0.0) {
    double e = std::exp(-z);
    return 1.0 / (1.0 + e);
  }
  double e = std::exp(z);
  return e / (1.0 + e);
}

class QuantilePayoff final : public PayoffSpec {
public:
  explicit QuantilePayoff(std::vector<double> levels)
      : PayoffSpec("quantile", build_labels(levels), build_bound(levels), true),
        levels_(std::move(levels)) {}

  PayoffVector evaluate(const Features&, const Forecast& p, double y) const override {
    std::vector<double> v(levels_.size());
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      v[i] = p.pit_leq_weight(y, levels_[i]) - levels_[i];
    }
    return wrap(std::move(v));
  }

  double inner(const Features&, const Forecast& p, double y,
               const PayoffVector& avg) const override {
    if (p.discrete()) {
      double acc = 0.0;
      for (std::size_t i = 0; i < levels_.size(); ++i) {
        acc += avg.values()[i] * (p.pit_leq_weight(y, levels_[i]) - levels_[i]);
      }
      return acc;
    }
    double f = p.density.cdf(y);
    double acc = 0.0;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      acc += avg.values()[i] * ((f <= levels_[i] ? 1.0 : 0.0) - levels_[i]);
    }
    return acc;
  }

  SmoothedInner smoothed_inner(const Features&, const PiecewiseDensity& p, double y,
                               const PayoffVector& avg, double tau) const override {
    // Indicators 1{F(y) <= a} become logistic((a - F(y)) / tau); F is linear in
    // the masses, dF/dm_b = full/partial coverage of bin b by (-inf, y].
    const auto& edges = p.edges();
    const auto& masses = p.masses();
    double f = p.cdf(y);
    double value = 0.0;
    double dvalue_df = 0.0;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      double a = levels_[i];
      double s = logistic((a - f) / tau);
      value += avg.values()[i] * (s - a);
      dvalue_df += avg.values()[i] * s * (1.0 - s) * (-1.0 / tau);
    }
    std::vector<double> d_mass(masses.size(), 0.0);
    for (std::size_t b = 0; b < masses.size(); ++b) {
      if (edges[b + 1] <= y) {
        d_mass[b] = dvalue_df;
      } else if (edges[b] < y) {
        d_mass[b] = dvalue_df * (y - edges[b]) / (edges[b + 1] - edges[b]);
      } else {
        break;
      }
    }
    return {value, std::move(d_mass)};
  }

private:
  static LabelsPtr build_labels(const std::vector<double>& levels) {
    if (levels.empty()) throw std::invalid_argument("quantile payoff: empty level set");
    Labels l;
    l.reserve(levels.size());
    for (double q : levels) {
      if (!(q > 0.0 && q < 1.0)) {
        throw std::domain_error("quantile payoff: levels must lie in (0, 1)");
      }
      l.push_back("q=" + format_number_label(q));
    }
    return make_labels(std::move(l));
  }

  static double build_bound(const std::vector<double>& levels) {
    double b = 0.0;
    for (double q : levels) {
      double m = std::max(q, 1.0 - q);
      b += m * m;
    }
    return b;
  }

  std::vector<double> levels_;
};

} // namespace

PayoffSpecPtr make_quantile_payoff(std::vector<double> levels) {
  return std::make_shared<QuantilePayoff>(std::move(levels));
}

} // namespace cal
