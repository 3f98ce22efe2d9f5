#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cal/payoffs/payoff_spec.hpp"

namespace cal {

namespace {

// Distribution calibration against a finite grid of reference forecasts:
// coordinate per (reference cell, CDF evaluation point z) with value
// K_W1(p_t, cell) * (F_{p_t}(z) - 1{y <= z}). Small grids only; the index set
// blows up exponentially in any faithful discretization.
class DistributionPayoff final : public PayoffSpec {
public:
  DistributionPayoff(std::vector<PiecewiseDensity> cells, std::vector<double> zs,
                     double bandwidth)
      : PayoffSpec("distribution", build_labels(cells, zs),
                   double(cells.size() * zs.size()), false),
        cells_(std::move(cells)),
        zs_(std::move(zs)),
        bandwidth_(bandwidth > 0.0 ? bandwidth : median_pairwise_w1(cells_)) {
    if (!(bandwidth_ > 0.0)) {
      throw std::invalid_argument("distribution payoff: could not derive a positive bandwidth");
    }
  }

  PayoffVector evaluate(const Features&, const Forecast& p, double y) const override {
    std::vector<double> v(dim(), 0.0);
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      double k = 1.0 - PiecewiseDensity::wasserstein1(p.density, cells_[c]) / bandwidth_;
      if (k <= 0.0) continue;
      for (std::size_t j = 0; j < zs_.size(); ++j) {
        double fz = p.cdf(zs_[j]);
        v[c * zs_.size() + j] = k * (fz - (y <= zs_[j] ? 1.0 : 0.0));
      }
    }
    return wrap(std::move(v));
  }

private:
  static LabelsPtr build_labels(const std::vector<PiecewiseDensity>& cells,
                                const std::vector<double>& zs) {
    if (cells.empty() || zs.empty()) {
      throw std::invalid_argument("distribution payoff: empty grid");
    }
    if (cells.size() > 50 || zs.size() > 50) {
      throw std::invalid_argument("distribution payoff: grids capped at 50 entries");
    }
    Labels l;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (double z : zs) {
        l.push_back("cell=" + std::to_string(c) + "|z=" + format_number_label(z));
      }
    }
    return make_labels(std::move(l));
  }

  static double median_pairwise_w1(const std::vector<PiecewiseDensity>& cells) {
    std::vector<double> d;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (std::size_t j = i + 1; j < cells.size(); ++j) {
        d.push_back(PiecewiseDensity::wasserstein1(cells[i], cells[j]));
      }
    }
    if (d.empty()) return 1.0;
    std::sort(d.begin(), d.end());
    return std::max(1e-12, d[d.size() / 2]);
  }

  std::vector<PiecewiseDensity> cells_;
  std::vector<double> zs_;
  double bandwidth_;
};

} // namespace

PayoffSpecPtr make_distribution_payoff(std::vector<PiecewiseDensity> forecast_grid,
                                       std::vector<double> cdf_grid, double bandwidth) {
  return std::make_shared<DistributionPayoff>(std::move(forecast_grid), std::move(cdf_grid),
                                              bandwidth);
}

} // namespace cal
