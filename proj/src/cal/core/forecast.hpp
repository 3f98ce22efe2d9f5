#pragma once

#include <optional>
#include <vector>

#include "cal/core/piecewise_density.hpp"

namespace cal {

// Finite mixture of point masses, sorted by location. Used for forecasts
// whose CDF has jumps (step-function quantile plays, degenerate moment
// realizations); the quantile payoff linearizes across those jumps.
class DiscreteMixture {
public:
  DiscreteMixture(std::vector<double> points, std::vector<double> weights);

  const std::vector<double>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }

  // Right-continuous step CDF.
  double cdf(double y) const;
  // Achieved CDF values {0, c_1, ..., 1}: the closed range of F.
  const std::vector<double>& cdf_levels() const { return levels_; }

  double quantile(double alpha) const;
  double moment(int k) const;
  double mean() const { return moment(1); }
  double crps(double y) const; // exact stepwise integral over [lo, hi]
  void set_support(double lo, double hi); // integration range for crps

  double support_lo() const { return lo_; }
  double support_hi() const { return hi_; }

private:
  std::vector<double> points_;
  std::vector<double> weights_;
  std::vector<double> levels_; // cumulative weights, with leading 0
  double lo_ = 0.0, hi_ = 1.0;
};

// The object a forecaster announces: always carries a density realization on
// the engine bins; when the underlying play is genuinely discrete the atoms
// are kept too and take precedence for CDF/PIT/moment computations.
struct Forecast {
  PiecewiseDensity density;
  std::optional<DiscreteMixture> atoms;

  explicit Forecast(PiecewiseDensity d) : density(std::move(d)) {}
  Forecast(PiecewiseDensity d, DiscreteMixture a)
      : density(std::move(d)), atoms(std::move(a)) {}

  static Forecast from_atoms(const std::vector<double>& engine_edges, DiscreteMixture mix);

  bool discrete() const { return atoms.has_value(); }

  double cdf(double y) const { return atoms ? atoms->cdf(y) : density.cdf(y); }
  double quantile(double a) const { return atoms ? atoms->quantile(a) : density.quantile(a); }
  double mean() const { return atoms ? atoms->mean() : density.mean(); }
  double moment(int k) const { return atoms ? atoms->moment(k) : density.moment(k); }
  double crps(double y) const { return atoms ? atoms->crps(y) : density.crps(y); }

  // Weight of the (linearized) event {PIT <= q}. For continuous forecasts this
  // is the plain indicator 1{F(y) <= q}; for discrete ones the CDF jumps are
  // linearized so the weight interpolates between the adjacent achieved
  // levels. Always in [0, 1].
  double pit_leq_weight(double y, double q) const;
};

// The linearized indicator itself: levels a_minus <= q <= a_plus are the
// achieved CDF values bracketing q, f_y = F(y).
double linearized_pit_leq(double f_y, double q, double a_minus, double a_plus);

} // namespace cal
