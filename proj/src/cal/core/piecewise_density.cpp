#include "cal/core/piecewise_density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cal/core/kahan.hpp"

namespace cal {

PiecewiseDensity::PiecewiseDensity(std::vector<double> edges, std::vector<double> masses)
    : edges_(std::move(edges)), masses_(std::move(masses)) {
  if (edges_.size() < 2 || masses_.size() + 1 != edges_.size()) {
    throw std::invalid_argument("PiecewiseDensity: need B+1 edges for B >= 1 bins");
  }
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i) {
    if (!(edges_[i] < edges_[i + 1])) {
      throw std::invalid_argument("PiecewiseDensity: edges must be strictly increasing");
    }
  }
  KahanSum total;
  for (double m : masses_) {
    if (m < 0.0 || !std::isfinite(m)) {
      throw std::invalid_argument("PiecewiseDensity: masses must be finite and nonnegative");
    }
    total.add(m);
  }
  if (std::abs(total.value() - 1.0) > 1e-12) {
    throw std::invalid_argument("PiecewiseDensity: masses must sum to 1 (got " +
                                std::to_string(total.value()) + ")");
  }
  cum_.resize(edges_.size());
  KahanSum run;
  cum_[0] = 0.0;
  for (std::size_t b = 0; b < masses_.size(); ++b) {
    run.add(masses_[b]);
    cum_[b + 1] = std::min(1.0, run.value());
  }
  cum_.back() = 1.0;
}

PiecewiseDensity PiecewiseDensity::uniform(double y_min, double y_max, int bins) {
  std::vector<double> m(std::size_t(bins), 1.0 / bins);
  return from_masses(y_min, y_max, std::move(m));
}

PiecewiseDensity PiecewiseDensity::from_masses(double y_min, double y_max,
                                               std::vector<double> masses) {
  if (!(y_min < y_max)) throw std::invalid_argument("PiecewiseDensity: y_min must be < y_max");
  std::size_t n = masses.size();
  std::vector<double> edges(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    edges[i] = y_min + (y_max - y_min) * (double(i) / double(n));
  }
  edges.front() = y_min;
  edges.back() = y_max;
  return PiecewiseDensity(std::move(edges), std::move(masses));
}

std::size_t PiecewiseDensity::bin_index(double y) const {
  // First edge strictly greater than y, minus one; y == y_max maps to last bin.
  auto it = std::upper_bound(edges_.begin(), edges_.end(), y);
  if (it == edges_.begin()) return 0;
  std::size_t idx = std::size_t(it - edges_.begin()) - 1;
  return std::min(idx, masses_.size() - 1);
}

double PiecewiseDensity::cdf(double y) const {
  if (y < y_min() || y > y_max()) {
    throw std::domain_error("PiecewiseDensity::cdf: y outside [y_min, y_max]");
  }
  std::size_t b = bin_index(y);
  double w = edges_[b + 1] - edges_[b];
  double f = cum_[b] + masses_[b] * (y - edges_[b]) / w;
  return std::clamp(f, 0.0, 1.0);
}

double PiecewiseDensity::quantile(double alpha) const {
  if (alpha < 0.0 || alpha > 1.0) {
    throw std::domain_error("PiecewiseDensity::quantile: alpha outside [0, 1]");
  }
  if (alpha <= 0.0) return y_min();
  // Smallest edge index with cum_ >= alpha; the answer lies in the bin before.
  auto it = std::lower_bound(cum_.begin(), cum_.end(), alpha);
  std::size_t i = std::size_t(it - cum_.begin());
  if (i == 0) return y_min();
  std::size_t b = i - 1;
  if (masses_[b] <= 0.0) {
    // alpha == cum_[b] on a flat stretch; deterministic tie-break to the left
    // endpoint of the flat region.
    return edges_[b];
  }
  double w = edges_[b + 1] - edges_[b];
  double y = edges_[b] + (alpha - cum_[b]) / masses_[b] * w;
  return std::clamp(y, edges_[b], edges_[b + 1]);
}

double PiecewiseDensity::moment(int k) const {
  if (k < 1) throw std::invalid_argument("PiecewiseDensity::moment: k >= 1");
  // E[y^k] = sum_b m_b (e_b^{k+1} - e_{b-1}^{k+1}) / ((k+1)(e_b - e_{b-1}))
  KahanSum acc;
  for (std::size_t b = 0; b < masses_.size(); ++b) {
    if (masses_[b] == 0.0) continue;
    double lo = edges_[b], hi = edges_[b + 1];
    double num = std::pow(hi, k + 1) - std::pow(lo, k + 1);
    acc.add(masses_[b] * num / (double(k + 1) * (hi - lo)));
  }
  return acc.value();
}

namespace {

// Integral over [0, L] of (a + s*u)^2 du.
double quad_int(double a, double s, double L) {
  return a * a * L + a * s * L * L + s * s * L * L * L / 3.0;
}

} // namespace

double PiecewiseDensity::crps(double y) const {
  if (y < y_min() || y > y_max()) {
    throw std::domain_error("PiecewiseDensity::crps: y outside [y_min, y_max]");
  }
  KahanSum acc;
  for (std::size_t b = 0; b < masses_.size(); ++b) {
    double lo = edges_[b], hi = edges_[b + 1];
    double w = hi - lo;
    double slope = masses_[b] / w;
    double f_lo = cum_[b];
    if (y >= hi) {
      // indicator is 0 on the whole bin
      acc.add(quad_int(f_lo, slope, w));
    } else if (y <= lo) {
      acc.add(quad_int(f_lo - 1.0, slope, w));
    } else {
      double left = y - lo;
      acc.add(quad_int(f_lo, slope, left));
      double f_y = f_lo + slope * left;
      acc.add(quad_int(f_y - 1.0, slope, w - left));
    }
  }
  return std::max(0.0, acc.value());
}

double PiecewiseDensity::wasserstein1(const PiecewiseDensity& a, const PiecewiseDensity& b) {
  // Merge breakpoints; F - G is linear between consecutive ones (taking F = 0
  // before a support and 1 after it). Integrate |linear| exactly, splitting at
  // sign changes.
  std::vector<double> pts;
  pts.reserve(a.edges_.size() + b.edges_.size());
  pts.insert(pts.end(), a.edges_.begin(), a.edges_.end());
  pts.insert(pts.end(), b.edges_.begin(), b.edges_.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto eval = [](const PiecewiseDensity& d, double z) {
    if (z <= d.y_min()) return 0.0;
    if (z >= d.y_max()) return 1.0;
    return d.cdf(z);
  };

  KahanSum acc;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double z0 = pts[i], z1 = pts[i + 1];
    double d0 = eval(a, z0) - eval(b, z0);
    double d1 = eval(a, z1) - eval(b, z1);
    double w = z1 - z0;
    if (d0 * d1 >= 0.0) {
      acc.add(0.5 * (std::abs(d0) + std::abs(d1)) * w);
    } else {
      double root = d0 / (d0 - d1); // fraction of the segment
      acc.add(0.5 * std::abs(d0) * root * w);
      acc.add(0.5 * std::abs(d1) * (1.0 - root) * w);
    }
  }
  return acc.value();
}

} // namespace cal
