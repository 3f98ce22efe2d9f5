#include "cal/core/forecast.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cal/core/kahan.hpp"

namespace cal {

DiscreteMixture::DiscreteMixture(std::vector<double> points, std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  if (points_.empty() || points_.size() != weights_.size()) {
    throw std::invalid_argument("DiscreteMixture: need matching nonempty points/weights");
  }
  std::vector<std::size_t> order(points_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points_[a] < points_[b]; });
  std::vector<double> p, w;
  p.reserve(points_.size());
  w.reserve(points_.size());
  for (std::size_t i : order) {
    if (weights_[i] < 0.0) throw std::invalid_argument("DiscreteMixture: negative weight");
    if (weights_[i] == 0.0) continue;
    if (!p.empty() && points_[i] == p.back()) {
      w.back() += weights_[i];
    } else {
      p.push_back(points_[i]);
      w.push_back(weights_[i]);
    }
  }
  if (p.empty()) throw std::invalid_argument("DiscreteMixture: all weights zero");
  points_ = std::move(p);
  weights_ = std::move(w);
  KahanSum total;
  for (double x : weights_) total.add(x);
  if (std::abs(total.value() - 1.0) > 1e-12) {
    throw std::invalid_argument("DiscreteMixture: weights must sum to 1");
  }
  levels_.resize(points_.size() + 1);
  levels_[0] = 0.0;
  KahanSum run;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    run.add(weights_[i]);
    levels_[i + 1] = std::min(1.0, run.value());
  }
  levels_.back() = 1.0;
  lo_ = points_.front();
  hi_ = points_.back();
}

void DiscreteMixture::set_support(double lo, double hi) {
  if (lo > points_.front() || hi < points_.back()) {
    throw std::invalid_argument("DiscreteMixture: support must cover all atoms");
  }
  lo_ = lo;
  hi_ = hi;
}

double DiscreteMixture::cdf(double y) const {
  // Mass at points <= y.
  auto it = std::upper_bound(points_.begin(), points_.end(), y);
  return levels_[std::size_t(it - points_.begin())];
}

double DiscreteMixture::quantile(double alpha) const {
  if (alpha < 0.0 || alpha > 1.0) {
    throw std::domain_error("DiscreteMixture::quantile: alpha outside [0, 1]");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (levels_[i + 1] >= alpha) return points_[i];
  }
  return points_.back();
}

double DiscreteMixture::moment(int k) const {
  if (k < 1) throw std::invalid_argument("DiscreteMixture::moment: k >= 1");
  KahanSum acc;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    acc.add(weights_[i] * std::pow(points_[i], k));
  }
  return acc.value();
}

double DiscreteMixture::crps(double y) const {
  if (y < lo_ || y > hi_) throw std::domain_error("DiscreteMixture::crps: y outside support");
  // (F(z) - 1{z >= y})^2 is piecewise constant between breakpoints.
  std::vector<double> pts;
  pts.reserve(points_.size() + 3);
  pts.push_back(lo_);
  for (double p : points_) {
    if (p > lo_ && p < hi_) pts.push_back(p);
  }
  if (y > lo_ && y < hi_) pts.push_back(y);
  pts.push_back(hi_);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  KahanSum acc;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double mid = 0.5 * (pts[i] + pts[i + 1]);
    double v = cdf(mid) - (mid >= y ? 1.0 : 0.0);
    acc.add(v * v * (pts[i + 1] - pts[i]));
  }
  return acc.value();
}

Forecast Forecast::from_atoms(const std::vector<double>& engine_edges, DiscreteMixture mix) {
  // Density realization: each atom's mass dropped into its engine bin.
  std::size_t bins = engine_edges.size() - 1;
  std::vector<double> masses(bins, 0.0);
  for (std::size_t i = 0; i < mix.points().size(); ++i) {
    double y = mix.points()[i];
    auto it = std::upper_bound(engine_edges.begin(), engine_edges.end(), y);
    std::size_t b = it == engine_edges.begin() ? 0 : std::size_t(it - engine_edges.begin()) - 1;
    b = std::min(b, bins - 1);
    masses[b] += mix.weights()[i];
  }
  double total = 0.0;
  for (double m : masses) total += m;
  for (double& m : masses) m /= total;
  PiecewiseDensity d(engine_edges, std::move(masses));
  mix.set_support(engine_edges.front(), engine_edges.back());
  return Forecast(std::move(d), std::move(mix));
}

double linearized_pit_leq(double f_y, double q, double a_minus, double a_plus) {
  if (a_plus <= a_minus) return f_y <= q ? 1.0 : 0.0;
  double lambda = (a_plus - q) / (a_plus - a_minus);
  double lo = f_y <= a_minus ? 1.0 : 0.0;
  double hi = f_y <= a_plus ? 1.0 : 0.0;
  return lambda * lo + (1.0 - lambda) * hi;
}

double Forecast::pit_leq_weight(double y, double q) const {
  if (!atoms) {
    // Continuous piecewise-linear CDF achieves every level in [0, 1].
    return density.cdf(y) <= q ? 1.0 : 0.0;
  }
  const auto& lv = atoms->cdf_levels(); // sorted, lv.front() = 0, lv.back() = 1
  auto hi_it = std::lower_bound(lv.begin(), lv.end(), q);
  double a_plus = hi_it == lv.end() ? 1.0 : *hi_it; // min achieved level >= q
  double a_minus = (hi_it != lv.end() && *hi_it == q)
                       ? q
                       : (hi_it == lv.begin() ? 0.0 : *(hi_it - 1)); // max level <= q
  return linearized_pit_leq(atoms->cdf(y), q, a_minus, a_plus);
}

} // namespace cal
