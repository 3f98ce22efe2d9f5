#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cal/core/errors.hpp"

namespace cal {

using Labels = std::vector<std::string>;
using LabelsPtr = std::shared_ptr<const Labels>;

inline LabelsPtr make_labels(Labels v) { return std::make_shared<const Labels>(std::move(v)); }

// Finite-dimensional payoff with named coordinates and the bound B
// (sup of the squared norm) inherited from the spec that produced it.
class PayoffVector {
public:
  PayoffVector(LabelsPtr labels, std::vector<double> values, double bound);
  static PayoffVector zeros(LabelsPtr labels, double bound);

  const Labels& labels() const { return *labels_; }
  const LabelsPtr& labels_ptr() const { return labels_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }
  double bound() const { return bound_; }
  std::size_t dim() const { return values_.size(); }

  double norm2() const;
  PayoffVector positive_part() const;
  double max_coordinate() const;

  PayoffVector& scale(double s);
  PayoffVector& add_scaled(const PayoffVector& other, double s);

private:
  LabelsPtr labels_;
  std::vector<double> values_;
  double bound_;
};

// Throws ContractViolation unless the two label sets match exactly.
void require_same_labels(const PayoffVector& a, const PayoffVector& b);

double inner_product(const PayoffVector& a, const PayoffVector& b);

} // namespace cal
