#pragma once

#include <cstdint>

#include "cal/payoffs/payoff_spec.hpp"

namespace cal {

// Randomized audits of the payoff conditions: boundedness, (semi-)consistency
// under y ~ p, and continuity in the forecast. Deterministic given the seed.
struct AuditSampler {
  double y_min = 0.0;
  double y_max = 1.0;
  int bins = 20;
  std::size_t num_experts = 0;
  bool binary_outcomes = false;

  PiecewiseDensity random_density(RngStream& rng) const;
  Features random_features(RngStream& rng) const;
  double random_outcome(RngStream& rng) const;
};

struct BoundednessReport {
  double worst_norm2 = 0.0;
  double bound = 0.0;
  bool pass = false;
};
BoundednessReport audit_boundedness(const PayoffSpec& spec, const AuditSampler& sampler,
                                    int samples, std::uint64_t seed);

struct ConsistencyReport {
  double worst_z = 0.0;       // max standardized coordinate mean over forecasts
  double worst_mean = 0.0;    // the raw mean behind worst_z
  bool pass = false;
};
// semi = true checks only the positive side (Condition 4); otherwise |mean|.
ConsistencyReport audit_consistency(const PayoffSpec& spec, const AuditSampler& sampler,
                                    int num_forecasts, int samples_per_forecast,
                                    std::uint64_t seed, bool semi);

struct ContinuityReport {
  double worst_ratio = 0.0; // payoff change per unit mass perturbation
  double limit = 0.0;
  bool pass = false;
};
// Perturbs masses by ~1e-4 and checks the change is Lipschitz-bounded. For
// smoothable specs the differentiable surrogate is the audited object (the
// raw indicators are only continuous after smoothing); tau is its temperature.
ContinuityReport audit_continuity(const PayoffSpec& spec, const AuditSampler& sampler,
                                  int samples, std::uint64_t seed, double limit, double tau);

} // namespace cal
