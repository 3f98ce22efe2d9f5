#include "cal/core/game_state.hpp"

#include <cmath>

#include "cal/core/errors.hpp"
#include "cal/core/kahan.hpp"

namespace cal {

GameState::GameState(LabelsPtr labels, double bound)
    : labels_(std::move(labels)),
      bound_(bound),
      sum_(labels_->size(), 0.0),
      comp_(labels_->size(), 0.0) {}

PayoffVector GameState::average() const {
  if (!labels_) throw ContractViolation("GameState: uninitialized");
  std::vector<double> v(sum_.size());
  if (t_ > 0) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (sum_[i] + comp_[i]) / double(t_);
  }
  return PayoffVector(labels_, std::move(v), bound_);
}

void GameState::append(StepRecord rec) {
  if (!labels_) throw ContractViolation("GameState: uninitialized");
  if (rec.payoff.size() != sum_.size()) {
    throw ContractViolation("GameState: payoff dimension mismatch");
  }
  for (std::size_t i = 0; i < sum_.size(); ++i) {
    double x = rec.payoff[i];
    double t = sum_[i] + x;
    if (std::abs(sum_[i]) >= std::abs(x)) {
      comp_[i] += (sum_[i] - t) + x;
    } else {
      comp_[i] += (x - t) + sum_[i];
    }
    sum_[i] = t;
  }
  ++t_;
  rec.t = t_;
  pos_inner_ += std::max(0.0, rec.inner_with_prev_avg);
  pos_cert_ += std::max(0.0, rec.certificate.bound);
  history_.push_back(std::move(rec));
}

std::vector<double> GameState::recompute_average() const {
  std::vector<double> v(sum_.size(), 0.0);
  if (t_ == 0) return v;
  for (std::size_t i = 0; i < v.size(); ++i) {
    KahanSum acc;
    for (const auto& rec : history_) acc.add(rec.payoff[i]);
    v[i] = acc.value() / double(t_);
  }
  return v;
}

} // namespace cal
