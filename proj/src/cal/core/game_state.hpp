#pragma once

#include <cstdint>
#include <vector>

#include "cal/core/forecast.hpp"
#include "cal/core/payoff_vector.hpp"

namespace cal {

// Pre-outcome bound reported by an oracle: the claimed sup over outcomes of
// the inner product between the current average payoff and the next payoff.
// Exact oracles always report bound <= 0.
struct Certificate {
  double bound = 0.0;
  bool exact = true;
};

struct StepRecord {
  explicit StepRecord(Forecast f) : play(std::move(f)) {}

  std::int64_t t = 0;
  std::uint64_t features_digest = 0;
  Forecast play;
  double outcome = 0.0;
  std::vector<double> payoff;
  double payoff_norm2 = 0.0;
  double inner_with_prev_avg = 0.0;
  Certificate certificate;
};

// Step counter, compensated running sum of payoffs, and the append-only log.
// The average payoff is always sum/t, so it matches a from-scratch
// recomputation to rounding.
class GameState {
public:
  GameState() = default;
  GameState(LabelsPtr labels, double bound);

  std::int64_t steps() const { return t_; }
  const LabelsPtr& labels() const { return labels_; }
  double bound() const { return bound_; }

  PayoffVector average() const;

  // Appends one step; rec.payoff must match the label set.
  void append(StepRecord rec);

  const std::vector<StepRecord>& history() const { return history_; }

  // Naive average recomputed from the log, for audits.
  std::vector<double> recompute_average() const;

  // Running sums of max(0, .) of realized inner products / certificate bounds.
  double positive_inner_sum() const { return pos_inner_; }
  double positive_certificate_sum() const { return pos_cert_; }

private:
  std::int64_t t_ = 0;
  LabelsPtr labels_;
  double bound_ = 0.0;
  std::vector<double> sum_;
  std::vector<double> comp_; // Kahan compensation per coordinate
  double pos_inner_ = 0.0;
  double pos_cert_ = 0.0;
  std::vector<StepRecord> history_;
};

} // namespace cal
