#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "cal/core/forecast.hpp"

namespace cal {

// Per-step side information: lagged outcomes plus any expert forecasts.
struct Features {
  std::vector<double> lags;
  std::vector<std::string> expert_names;
  std::vector<Forecast> experts;

  std::uint64_t digest() const {
    std::uint64_t h = 1469598103934665603ull; // FNV-1a over the raw doubles
    auto fold = [&h](double x) {
      std::uint64_t bits;
      std::memcpy(&bits, &x, sizeof(bits));
      for (int i = 0; i < 8; ++i) {
        h ^= (bits >> (8 * i)) & 0xffu;
        h *= 1099511628211ull;
      }
    };
    for (double x : lags) fold(x);
    for (const auto& e : experts) {
      for (double m : e.density.masses()) fold(m);
    }
    return h;
  }
};

} // namespace cal
