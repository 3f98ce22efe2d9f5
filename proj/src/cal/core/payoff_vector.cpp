#include "cal/core/payoff_vector.hpp"

#include <algorithm>
#include <cmath>

#include "cal/core/kahan.hpp"

namespace cal {

PayoffVector::PayoffVector(LabelsPtr labels, std::vector<double> values, double bound)
    : labels_(std::move(labels)), values_(std::move(values)), bound_(bound) {
  if (!labels_ || labels_->size() != values_.size()) {
    throw ContractViolation("PayoffVector: labels and values must have equal size");
  }
  if (!(bound_ >= 0.0)) {
    throw ContractViolation("PayoffVector: bound must be nonnegative");
  }
}

PayoffVector PayoffVector::zeros(LabelsPtr labels, double bound) {
  std::vector<double> v(labels->size(), 0.0);
  return PayoffVector(std::move(labels), std::move(v), bound);
}

double PayoffVector::norm2() const {
  KahanSum acc;
  for (double x : values_) acc.add(x * x);
  return acc.value();
}

PayoffVector PayoffVector::positive_part() const {
  std::vector<double> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(0.0, values_[i]);
  return PayoffVector(labels_, std::move(v), bound_);
}

double PayoffVector::max_coordinate() const {
  return *std::max_element(values_.begin(), values_.end());
}

PayoffVector& PayoffVector::scale(double s) {
  for (double& x : values_) x *= s;
  return *this;
}

PayoffVector& PayoffVector::add_scaled(const PayoffVector& other, double s) {
  require_same_labels(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += s * other.values_[i];
  return *this;
}

void require_same_labels(const PayoffVector& a, const PayoffVector& b) {
  if (a.labels_ptr() == b.labels_ptr()) return;
  if (a.labels() == b.labels()) return;
  throw ContractViolation("PayoffVector: coordinate labels do not match");
}

double inner_product(const PayoffVector& a, const PayoffVector& b) {
  require_same_labels(a, b);
  KahanSum acc;
  for (std::size_t i = 0; i < a.dim(); ++i) acc.add(a.values()[i] * b.values()[i]);
  return acc.value();
}

} // namespace cal
