#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cal/core/features.hpp"
#include "cal/core/forecast.hpp"
#include "cal/core/payoff_vector.hpp"

namespace cal {

// Differentiable surrogate of the inner product <avg, payoff(x, p, y)>;
// the gradient is with respect to the density masses of p.
struct SmoothedInner {
  double value = 0.0;
  std::vector<double> d_mass;
};

struct PayoffBlock {
  std::string name;
  std::size_t offset = 0;
  std::size_t size = 0;
  double bound = 0.0; // raw (pre-normalization) bound of the block
  double scale = 1.0; // factor applied to block values at evaluation
};

// One calibration notion turned into a payoff constructor: labels, bound B
// (sup of the squared norm), and the evaluation map.
class PayoffSpec {
public:
  virtual ~PayoffSpec() = default;

  const std::string& name() const { return name_; }
  const LabelsPtr& labels() const { return labels_; }
  std::size_t dim() const { return labels_->size(); }
  double bound() const { return bound_; }
  bool smoothable() const { return smoothable_; }

  virtual PayoffVector evaluate(const Features& x, const Forecast& p, double y) const = 0;

  // Smoothed <avg, payoff> with mass gradient; only for smoothable specs.
  virtual SmoothedInner smoothed_inner(const Features& x, const PiecewiseDensity& p, double y,
                                       const PayoffVector& avg, double tau) const;

  // Unsmoothed inner product; specs may override with a faster path.
  virtual double inner(const Features& x, const Forecast& p, double y,
                       const PayoffVector& avg) const;

  virtual std::vector<PayoffBlock> blocks() const;

  PayoffVector zero() const { return PayoffVector::zeros(labels_, bound_); }

protected:
  PayoffSpec(std::string name, LabelsPtr labels, double bound, bool smoothable)
      : name_(std::move(name)), labels_(std::move(labels)), bound_(bound),
        smoothable_(smoothable) {}

  PayoffVector wrap(std::vector<double> v) const {
    return PayoffVector(labels_, std::move(v), bound_);
  }

private:
  std::string name_;
  LabelsPtr labels_;
  double bound_;
  bool smoothable_;
};

using PayoffSpecPtr = std::shared_ptr<const PayoffSpec>;

std::string format_number_label(double v);

// ---- constructors -----------------------------------------------------------

// Kernel-smoothed binary calibration on a probability grid; outcomes in {0,1},
// forecast reduced to its mean. Value at grid point g: K(p_t, g)*(y - p_t)
// with a triangular kernel of the given bandwidth.
PayoffSpecPtr make_binary_payoff(std::vector<double> grid, double bandwidth);

// Quantile calibration over the given levels; linearizes across CDF jumps for
// discrete forecasts. B = sum of max(a, 1-a)^2.
PayoffSpecPtr make_quantile_payoff(std::vector<double> levels);
std::vector<double> default_quantile_levels(); // 0.01 .. 0.99

// Moment matching for the given orders; outcomes rescaled to [0,1] by
// [y_min, y_max] so B <= #orders.
PayoffSpecPtr make_moment_payoff(std::vector<int> orders, double y_min, double y_max);

// Decision calibration. utility(a, y, x) must be bounded on the outcome range;
// the expectation under the forecast is exact per bin (Gauss-Legendre).
struct DecisionUtility {
  std::vector<std::string> action_names;
  std::function<double(std::size_t, double, const Features&)> value;
};
PayoffSpecPtr make_decision_payoff(DecisionUtility utility, bool swap, double y_min,
                                   double y_max);

// Distribution calibration on a small grid of reference forecasts and CDF
// evaluation points; kernel weight is triangular in W1 distance. bandwidth <= 0
// means the median pairwise W1 distance of the grid.
PayoffSpecPtr make_distribution_payoff(std::vector<PiecewiseDensity> forecast_grid,
                                       std::vector<double> cdf_grid, double bandwidth);

// Excess loss against each of the K expert forecasts found in the features.
enum class RegretLoss { Crps, Mse };
PayoffSpecPtr make_regret_payoff(std::size_t num_experts, RegretLoss loss, double y_min,
                                 double y_max);

// Direct sum of payoffs. Concat keeps raw values (B = sum B_i); Normalized
// scales block i by 1/sqrt(B_i) so every block's bound becomes 1 (B = n).
enum class CombineMode { Concat, Normalized };
PayoffSpecPtr combine(std::vector<PayoffSpecPtr> specs, CombineMode mode);

} // namespace cal
