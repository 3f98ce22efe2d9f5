#pragma once

#include <cmath>
#include <cstdint>

namespace cal {

// Counter-based deterministic RNG (splitmix64 core). Streams are keyed by
// (seed, step, tag) so any draw can be replayed from the run config alone,
// without carrying generator state across steps.
class RngStream {
public:
  explicit RngStream(std::uint64_t key) : state_(key) {}

  static RngStream keyed(std::uint64_t seed, std::uint64_t step, std::uint64_t tag = 0) {
    std::uint64_t k = mix(seed ^ 0x9e3779b97f4a7c15ull);
    k = mix(k ^ (step + 0x6a09e667f3bcc909ull));
    k = mix(k ^ (tag * 0xbf58476d1ce4e5b9ull + 0x3c6ef372fe94f82bull));
    return RngStream(k);
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // Uniform in [0, 1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform in {0, ..., n-1}, n > 0. Modulo bias is irrelevant at our n.
  int uniform_int(int n) { return int(next_u64() % std::uint64_t(n)); }

  double normal() {
    // Box-Muller; two fresh uniforms per call keeps the stream stateless.
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  double exponential() {
    double u = uniform();
    if (u <= 0.0) u = 0x1.0p-53;
    return -std::log(u);
  }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

} // namespace cal
