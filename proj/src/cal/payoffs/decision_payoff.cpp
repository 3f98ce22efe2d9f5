#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cal/core/quadrature.hpp"
#include "cal/payoffs/payoff_spec.hpp"

namespace cal {

namespace {

// Per-action: E_{y~p}[u(a, y, x)] - u(a, y_t, x). Swap variant indexes pairs
// (a, a') and gates on a' being the Bayes action under p (argmax of expected
// utility, ties to the smallest index).
class DecisionPayoff final : public PayoffSpec {
public:
  DecisionPayoff(DecisionUtility utility, bool swap, double y_min, double y_max)
      : PayoffSpec(swap ? "decision_swap" : "decision",
                   build_labels(utility, swap),
                   scan_bound(utility, swap, y_min, y_max), true),
        utility_(std::move(utility)),
        swap_(swap),
        y_min_(y_min),
        y_max_(y_max) {}

  PayoffVector evaluate(const Features& x, const Forecast& p, double y) const override {
    std::size_t n = utility_.action_names.size();
    std::vector<double> eu = expected_utilities(x, p);
    std::vector<double> v;
    if (!swap_) {
      v.resize(n);
      for (std::size_t a = 0; a < n; ++a) v[a] = eu[a] - utility_.value(a, y, x);
    } else {
      std::size_t bayes = argmax_first(eu);
      v.assign(n * n, 0.0);
      for (std::size_t a = 0; a < n; ++a) {
        v[a * n + bayes] = eu[a] - utility_.value(a, y, x);
      }
    }
    return wrap(std::move(v));
  }

  SmoothedInner smoothed_inner(const Features& x, const PiecewiseDensity& p, double y,
                               const PayoffVector& avg, double tau) const override {
    std::size_t n = utility_.action_names.size();
    Forecast fp(p);
    std::vector<double> eu = expected_utilities(x, fp);
    // d eu[a] / d m_b = mean utility of action a over bin b
    std::vector<std::vector<double>> bin_mean(n, std::vector<double>(p.bins(), 0.0));
    const auto& edges = p.edges();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < p.bins(); ++b) {
        double w = edges[b + 1] - edges[b];
        bin_mean[a][b] =
            gl32_integrate(edges[b], edges[b + 1],
                           [&](double s) { return utility_.value(a, s, x); }) /
            w;
      }
    }
    std::vector<double> d_mass(p.bins(), 0.0);
    double value = 0.0;
    if (!swap_) {
      for (std::size_t a = 0; a < n; ++a) {
        double c = avg.values()[a];
        value += c * (eu[a] - utility_.value(a, y, x));
        for (std::size_t b = 0; b < p.bins(); ++b) d_mass[b] += c * bin_mean[a][b];
      }
      return {value, std::move(d_mass)};
    }
    // Smooth the Bayes gate with a softmax over expected utilities.
    std::vector<double> gate(n);
    double mx = *std::max_element(eu.begin(), eu.end());
    double z = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      gate[a] = std::exp((eu[a] - mx) / tau);
      z += gate[a];
    }
    for (double& g : gate) g /= z;
    // value = sum_{a,a'} avg[a,a'] * gate[a'] * (eu[a] - u(a, y))
    std::vector<double> excess(n);
    for (std::size_t a = 0; a < n; ++a) excess[a] = eu[a] - utility_.value(a, y, x);
    std::vector<double> gate_coeff(n, 0.0); // sum_a avg[a,a'] * excess[a]
    std::vector<double> eu_coeff(n, 0.0);   // sum_a' avg[a,a'] * gate[a']
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t ap = 0; ap < n; ++ap) {
        double c = avg.values()[a * n + ap];
        value += c * gate[ap] * excess[a];
        gate_coeff[ap] += c * excess[a];
        eu_coeff[a] += c * gate[ap];
      }
    }
    // d gate[a'] / d eu[c] = gate[a'] (1{a'=c} - gate[c]) / tau
    std::vector<double> d_eu(n, 0.0);
    double gdot = 0.0;
    for (std::size_t ap = 0; ap < n; ++ap) gdot += gate_coeff[ap] * gate[ap];
    for (std::size_t c = 0; c < n; ++c) {
      d_eu[c] = eu_coeff[c] + gate[c] * (gate_coeff[c] - gdot) / tau;
    }
    for (std::size_t b = 0; b < p.bins(); ++b) {
      for (std::size_t c = 0; c < n; ++c) d_mass[b] += d_eu[c] * bin_mean[c][b];
    }
    return {value, std::move(d_mass)};
  }

private:
  std::vector<double> expected_utilities(const Features& x, const Forecast& p) const {
    std::size_t n = utility_.action_names.size();
    std::vector<double> eu(n, 0.0);
    if (p.atoms) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t i = 0; i < p.atoms->points().size(); ++i) {
          eu[a] += p.atoms->weights()[i] * utility_.value(a, p.atoms->points()[i], x);
        }
      }
      return eu;
    }
    const auto& edges = p.density.edges();
    for (std::size_t a = 0; a < n; ++a) {
      double acc = 0.0;
      for (std::size_t b = 0; b < p.density.bins(); ++b) {
        double m = p.density.masses()[b];
        if (m == 0.0) continue;
        double w = edges[b + 1] - edges[b];
        acc += m *
               gl32_integrate(edges[b], edges[b + 1],
                              [&](double s) { return utility_.value(a, s, x); }) /
               w;
      }
      eu[a] = acc;
    }
    return eu;
  }

  static std::size_t argmax_first(const std::vector<double>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i] > v[best]) best = i;
    }
    return best;
  }

  static LabelsPtr build_labels(const DecisionUtility& u, bool swap) {
    if (u.action_names.empty()) throw std::invalid_argument("decision payoff: empty action set");
    Labels l;
    if (!swap) {
      for (const auto& a : u.action_names) l.push_back("a=" + a);
    } else {
      for (const auto& a : u.action_names) {
        for (const auto& ap : u.action_names) l.push_back("a=" + a + "|gate=" + ap);
      }
    }
    return make_labels(std::move(l));
  }

  // Bound from the utility range per action over a dense outcome scan. The
  // expectation stays inside [min, max] of the utility, so each coordinate is
  // at most the per-action range.
  static double scan_bound(const DecisionUtility& u, bool swap, double y_min, double y_max) {
    if (u.action_names.empty()) throw std::invalid_argument("decision payoff: empty action set");
    Features none;
    double b = 0.0;
    const int steps = 512;
    for (std::size_t a = 0; a < u.action_names.size(); ++a) {
      double lo = 0.0, hi = 0.0;
      for (int i = 0; i <= steps; ++i) {
        double y = y_min + (y_max - y_min) * i / steps;
        double val = u.value(a, y, none);
        if (!std::isfinite(val)) throw std::invalid_argument("decision payoff: unbounded utility");
        if (i == 0) {
          lo = hi = val;
        } else {
          lo = std::min(lo, val);
          hi = std::max(hi, val);
        }
      }
      double r = hi - lo;
      b += r * r;
    }
    // Swap gating activates a single column, so the same sum bounds it.
    (void)swap;
    return b;
  }

  DecisionUtility utility_;
  bool swap_;
  double y_min_;
  double y_max_;
};

} // namespace

PayoffSpecPtr make_decision_payoff(DecisionUtility utility, bool swap, double y_min,
                                   double y_max) {
  return std::make_shared<DecisionPayoff>(std::move(utility), swap, y_min, y_max);
}

} // namespace cal
