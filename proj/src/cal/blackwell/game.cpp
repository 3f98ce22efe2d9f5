#include "cal/blackwell/game.hpp"

#include <stdexcept>
#include <string>

namespace cal {

Game::Game(PayoffSpecPtr spec, std::uint64_t seed)
    : spec_(std::move(spec)), state_(spec_->labels(), spec_->bound()), seed_(seed) {}

OracleResponse Game::announce(const Features& x, Oracle& oracle) {
  std::uint64_t t_next = std::uint64_t(state_.steps()) + 1;
  try {
    return oracle.respond(state_.average(), x, RngStream::keyed(seed_, t_next, 1));
  } catch (const std::exception& e) {
    throw ContractViolation("oracle '" + std::string(oracle.name()) + "' failed at step " +
                            std::to_string(t_next) + ": " + e.what());
  }
}

const StepRecord& Game::resolve(const Features& x, const OracleResponse& response,
                                double outcome) {
  PayoffVector avg = state_.average();
  PayoffVector payoff = spec_->evaluate(x, response.play, outcome);
  StepRecord rec(response.play);
  rec.features_digest = x.digest();
  rec.outcome = outcome;
  rec.payoff_norm2 = payoff.norm2();
  rec.inner_with_prev_avg = state_.steps() == 0 ? 0.0 : inner_product(avg, payoff);
  rec.certificate = response.certificate;
  rec.payoff = std::move(payoff.values());
  state_.append(std::move(rec));
  return state_.history().back();
}

const StepRecord& Game::play_step(const Features& x, Oracle& oracle, double outcome) {
  OracleResponse r = announce(x, oracle);
  return resolve(x, r, outcome);
}

MiscalibrationReport Game::report() const {
  MiscalibrationReport rep;
  rep.steps = state_.steps();
  if (rep.steps == 0) return rep;
  PayoffVector avg = state_.average();
  rep.norm2 = avg.norm2();
  double t = double(rep.steps);
  rep.bound_over_t = spec_->bound() / t;
  rep.realized_budget = rep.bound_over_t + 2.0 / t * state_.positive_inner_sum();
  rep.certificate_budget = rep.bound_over_t + 2.0 / t * state_.positive_certificate_sum();
  for (const auto& block : spec_->blocks()) {
    BlockReport br;
    br.bound = block.bound;
    for (std::size_t j = 0; j < block.size; ++j) {
      double v = avg.values()[block.offset + j];
      br.norm2_scaled += v * v;
    }
    br.norm2_raw = block.scale > 0.0 ? br.norm2_scaled / (block.scale * block.scale)
                                     : br.norm2_scaled;
    rep.per_block[block.name] = br;
  }
  return rep;
}

} // namespace cal
