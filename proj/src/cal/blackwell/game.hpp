#pragma once

#include <cstdint>
#include <map>
#include <memory>

#include "cal/core/game_state.hpp"
#include "cal/payoffs/payoff_spec.hpp"

namespace cal {

struct OracleResponse {
  Forecast play;
  Certificate certificate;
};

// A half-space oracle: given the running average payoff and the step's
// features, return a forecast whose payoff has nonpositive inner product with
// the average for every outcome (exact oracles), or the best found bound.
class Oracle {
public:
  virtual ~Oracle() = default;
  virtual OracleResponse respond(const PayoffVector& average_payoff, const Features& x,
                                 RngStream rng) = 0;
  virtual const char* name() const = 0;
};

struct BlockReport {
  double norm2_raw = 0.0;        // block norm^2 before normalization scaling
  double norm2_scaled = 0.0;     // block norm^2 as it enters the combined vector
  double bound = 0.0;
};

struct MiscalibrationReport {
  std::int64_t steps = 0;
  double norm2 = 0.0;
  double bound_over_t = 0.0;       // B/t
  double realized_budget = 0.0;    // B/t + (2/t) sum max(0, realized inner)
  double certificate_budget = 0.0; // B/t + (2/t) sum max(0, certificate bound)
  std::map<std::string, BlockReport> per_block;
};

// The repeated forecasting game: query the oracle, announce, observe, update.
class Game {
public:
  Game(PayoffSpecPtr spec, std::uint64_t seed);

  const PayoffSpec& spec() const { return *spec_; }
  const GameState& state() const { return state_; }
  std::uint64_t seed() const { return seed_; }
  PayoffVector average() const { return state_.average(); }

  // Query the oracle for step t+1. The per-step RNG is keyed by (seed, t+1)
  // so randomized oracles replay exactly.
  OracleResponse announce(const Features& x, Oracle& oracle);

  // Ingest the outcome for a previously announced play.
  const StepRecord& resolve(const Features& x, const OracleResponse& response, double outcome);

  const StepRecord& play_step(const Features& x, Oracle& oracle, double outcome);

  MiscalibrationReport report() const;

private:
  PayoffSpecPtr spec_;
  GameState state_;
  std::uint64_t seed_;
};

} // namespace cal
