#pragma once

#include <cstddef>
#include <vector>

#include "cal/core/rng.hpp"

namespace cal {

// Forecast distribution on a bounded interval: piecewise constant density
// given by bin edges e_0 < ... < e_B and nonnegative masses summing to one.
// The CDF is continuous and piecewise linear, which makes quantiles, moments
// and CRPS exact closed forms.
class PiecewiseDensity {
public:
  PiecewiseDensity(std::vector<double> edges, std::vector<double> masses);

  // Evenly spaced bins over [y_min, y_max].
  static PiecewiseDensity uniform(double y_min, double y_max, int bins);
  static PiecewiseDensity from_masses(double y_min, double y_max, std::vector<double> masses);

  const std::vector<double>& edges() const { return edges_; }
  const std::vector<double>& masses() const { return masses_; }
  std::size_t bins() const { return masses_.size(); }
  double y_min() const { return edges_.front(); }
  double y_max() const { return edges_.back(); }

  // F(y); domain error outside [y_min, y_max].
  double cdf(double y) const;

  // Generalized inverse of the CDF; flat (zero-mass) stretches resolve to
  // their left endpoint. alpha in [0, 1].
  double quantile(double alpha) const;

  // E[y^k], exact. k >= 1.
  double moment(int k) const;
  double mean() const { return moment(1); }

  // Integral of (F(z) - 1{z >= y})^2 dz, exact per linear segment.
  double crps(double y) const;

  double sample(RngStream& rng) const { return quantile(rng.uniform()); }

  // W1 distance = integral of |F - G|; exact for two piecewise linear CDFs,
  // also correct when supports differ.
  static double wasserstein1(const PiecewiseDensity& a, const PiecewiseDensity& b);

private:
  std::size_t bin_index(double y) const; // bin containing y, clamped to the last

  std::vector<double> edges_;
  std::vector<double> masses_;
  std::vector<double> cum_; // cum_[i] = F(edges_[i])
};

} // namespace cal
