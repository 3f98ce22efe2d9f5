#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace cal {

// Compensated (Kahan-Neumaier) summation. Long streams (T up to 1e5) must not
// drift the average-payoff bookkeeping that the budget assertions rely on.
class KahanSum {
public:
  KahanSum() = default;
  explicit KahanSum(double v) : sum_(v) {}

  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double kahan_total(const std::vector<double>& xs) {
  KahanSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

} // namespace cal
