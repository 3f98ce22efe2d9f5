#include "cal/payoffs/audit.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cal {

PiecewiseDensity AuditSampler::random_density(RngStream& rng) const {
  // Dirichlet-style draw, occasionally sharpened so degenerate shapes appear.
  std::vector<double> m(static_cast<std::size_t>(bins));
  double total = 0.0;
  double sharp = rng.uniform() < 0.3 ? 8.0 : 1.0;
  for (double& v : m) {
    v = std::pow(rng.exponential(), sharp);
    total += v;
  }
  for (double& v : m) v /= total;
  // Exact renormalization against accumulated rounding.
  double s2 = 0.0;
  for (double v : m) s2 += v;
  for (double& v : m) v /= s2;
  return PiecewiseDensity::from_masses(y_min, y_max, std::move(m));
}

Features AuditSampler::random_features(RngStream& rng) const {
  Features x;
  for (int i = 0; i < 4; ++i) x.lags.push_back(rng.uniform(y_min, y_max));
  for (std::size_t i = 0; i < num_experts; ++i) {
    x.expert_names.push_back("e" + std::to_string(i));
    x.experts.emplace_back(random_density(rng));
  }
  return x;
}

double AuditSampler::random_outcome(RngStream& rng) const {
  if (binary_outcomes) return rng.uniform() < 0.5 ? 0.0 : 1.0;
  return rng.uniform(y_min, y_max);
}

BoundednessReport audit_boundedness(const PayoffSpec& spec, const AuditSampler& sampler,
                                    int samples, std::uint64_t seed) {
  BoundednessReport rep;
  rep.bound = spec.bound();
  for (int i = 0; i < samples; ++i) {
    RngStream rng = RngStream::keyed(seed, std::uint64_t(i), 11);
    Features x = sampler.random_features(rng);
    Forecast p(sampler.random_density(rng));
    double y = sampler.random_outcome(rng);
    double n2 = spec.evaluate(x, p, y).norm2();
    rep.worst_norm2 = std::max(rep.worst_norm2, n2);
  }
  rep.pass = rep.worst_norm2 <= rep.bound * (1.0 + 1e-9) + 1e-12;
  return rep;
}

ConsistencyReport audit_consistency(const PayoffSpec& spec, const AuditSampler& sampler,
                                    int num_forecasts, int samples_per_forecast,
                                    std::uint64_t seed, bool semi) {
  ConsistencyReport rep;
  std::size_t dim = spec.dim();
  for (int f = 0; f < num_forecasts; ++f) {
    RngStream rng = RngStream::keyed(seed, std::uint64_t(f), 13);
    Features x = sampler.random_features(rng);
    Forecast p(sampler.random_density(rng));
    std::vector<double> mean(dim, 0.0), m2(dim, 0.0);
    for (int s = 0; s < samples_per_forecast; ++s) {
      double y = sampler.binary_outcomes ? (rng.uniform() < p.mean() ? 1.0 : 0.0)
                                         : p.density.sample(rng);
      PayoffVector pay = spec.evaluate(x, p, y);
      // Welford accumulation
      for (std::size_t i = 0; i < dim; ++i) {
        double d = pay.values()[i] - mean[i];
        mean[i] += d / double(s + 1);
        m2[i] += d * (pay.values()[i] - mean[i]);
      }
    }
    for (std::size_t i = 0; i < dim; ++i) {
      double sd = std::sqrt(std::max(m2[i] / double(samples_per_forecast - 1), 0.0));
      double se = sd / std::sqrt(double(samples_per_forecast)) + 1e-12;
      double signed_z = mean[i] / se;
      double z = semi ? signed_z : std::abs(signed_z);
      if (z > rep.worst_z) {
        rep.worst_z = z;
        rep.worst_mean = mean[i];
      }
    }
  }
  rep.pass = rep.worst_z <= 4.0;
  return rep;
}

ContinuityReport audit_continuity(const PayoffSpec& spec, const AuditSampler& sampler,
                                  int samples, std::uint64_t seed, double limit, double tau) {
  ContinuityReport rep;
  rep.limit = limit;
  const double delta = 1e-4;
  for (int i = 0; i < samples; ++i) {
    RngStream rng = RngStream::keyed(seed, std::uint64_t(i), 17);
    Features x = sampler.random_features(rng);
    PiecewiseDensity base = sampler.random_density(rng);
    double y = sampler.random_outcome(rng);

    std::vector<double> m = base.masses();
    double norm_dm = 0.0;
    std::vector<double> m2(m.size());
    {
      std::vector<double> dir(m.size());
      double mean_dir = 0.0;
      for (double& d : dir) {
        d = rng.uniform(-1.0, 1.0);
        mean_dir += d;
      }
      mean_dir /= double(dir.size());
      double total = 0.0;
      for (std::size_t j = 0; j < m.size(); ++j) {
        m2[j] = std::max(1e-12, m[j] + delta * (dir[j] - mean_dir));
        total += m2[j];
      }
      for (double& v : m2) v /= total;
      for (std::size_t j = 0; j < m.size(); ++j) {
        norm_dm += (m2[j] - m[j]) * (m2[j] - m[j]);
      }
      norm_dm = std::sqrt(norm_dm);
    }
    if (norm_dm < 1e-12) continue;
    PiecewiseDensity pert(base.edges(), m2);

    double change;
    if (spec.smoothable()) {
      PayoffVector dir = PayoffVector::zeros(spec.labels(), spec.bound());
      double nu = 0.0;
      for (double& v : dir.values()) {
        v = rng.uniform(-1.0, 1.0);
        nu += v * v;
      }
      nu = std::sqrt(nu);
      for (double& v : dir.values()) v /= nu;
      double a = spec.smoothed_inner(x, base, y, dir, tau).value;
      double b = spec.smoothed_inner(x, pert, y, dir, tau).value;
      change = std::abs(b - a);
    } else {
      PayoffVector a = spec.evaluate(x, Forecast(base), y);
      PayoffVector b = spec.evaluate(x, Forecast(pert), y);
      double acc = 0.0;
      for (std::size_t j = 0; j < a.dim(); ++j) {
        double d = b.values()[j] - a.values()[j];
        acc += d * d;
      }
      change = std::sqrt(acc);
    }
    rep.worst_ratio = std::max(rep.worst_ratio, change / norm_dm);
  }
  rep.pass = rep.worst_ratio <= limit;
  return rep;
}

} // namespace cal
