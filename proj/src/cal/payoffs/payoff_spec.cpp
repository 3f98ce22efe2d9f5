#include "cal/payoffs/payoff_spec.hpp"

#include <cstdio>

namespace cal {

SmoothedInner PayoffSpec::smoothed_inner(const Features&, const PiecewiseDensity&, double,
                                         const PayoffVector&, double) const {
  throw ContractViolation("payoff '" + name_ + "' has no differentiable surrogate");
}

double PayoffSpec::inner(const Features& x, const Forecast& p, double y,
                         const PayoffVector& avg) const {
  return inner_product(avg, evaluate(x, p, y));
}

std::vector<PayoffBlock> PayoffSpec::blocks() const {
  return {{name_, 0, dim(), bound_, 1.0}};
}

std::string format_number_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::vector<double> default_quantile_levels() {
  std::vector<double> q;
  q.reserve(99);
  for (int i = 1; i <= 99; ++i) q.push_back(i / 100.0);
  return q;
}

} // namespace cal
