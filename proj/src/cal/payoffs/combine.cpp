#include <cmath>
#include <set>
#include <stdexcept>

#include "cal/payoffs/payoff_spec.hpp"

namespace cal {

namespace {

// Direct sum of payoffs. Normalized mode scales block i by 1/sqrt(B_i), which
// makes every block's bound 1 and keeps the block-norm bookkeeping exact:
// combined norm^2 = sum_i block_norm2_i / B_i.
class CombinedPayoff final : public PayoffSpec {
public:
  CombinedPayoff(std::vector<PayoffSpecPtr> specs, CombineMode mode)
      : PayoffSpec("combined", build_labels(specs), build_bound(specs, mode),
                   all_smoothable(specs)),
        specs_(std::move(specs)) {
    std::size_t off = 0;
    for (const auto& s : specs_) {
      double scale = mode == CombineMode::Normalized ? 1.0 / std::sqrt(s->bound()) : 1.0;
      blocks_.push_back({s->name(), off, s->dim(), s->bound(), scale});
      off += s->dim();
    }
  }

  PayoffVector evaluate(const Features& x, const Forecast& p, double y) const override {
    std::vector<double> v(dim());
    for (std::size_t i = 0; i < specs_.size(); ++i) {
      PayoffVector part = specs_[i]->evaluate(x, p, y);
      const auto& b = blocks_[i];
      for (std::size_t j = 0; j < b.size; ++j) v[b.offset + j] = b.scale * part.values()[j];
    }
    return wrap(std::move(v));
  }

  double inner(const Features& x, const Forecast& p, double y,
               const PayoffVector& avg) const override {
    double acc = 0.0;
    for (std::size_t i = 0; i < specs_.size(); ++i) {
      acc += blocks_[i].scale * specs_[i]->inner(x, p, y, slice_avg(avg, i));
    }
    return acc;
  }

  SmoothedInner smoothed_inner(const Features& x, const PiecewiseDensity& p, double y,
                               const PayoffVector& avg, double tau) const override {
    SmoothedInner out;
    out.d_mass.assign(p.bins(), 0.0);
    for (std::size_t i = 0; i < specs_.size(); ++i) {
      SmoothedInner part = specs_[i]->smoothed_inner(x, p, y, slice_avg(avg, i), tau);
      out.value += blocks_[i].scale * part.value;
      for (std::size_t b = 0; b < out.d_mass.size(); ++b) {
        out.d_mass[b] += blocks_[i].scale * part.d_mass[b];
      }
    }
    return out;
  }

  std::vector<PayoffBlock> blocks() const override { return blocks_; }

private:
  PayoffVector slice_avg(const PayoffVector& avg, std::size_t i) const {
    const auto& b = blocks_[i];
    std::vector<double> v(avg.values().begin() + b.offset,
                          avg.values().begin() + b.offset + b.size);
    return PayoffVector(specs_[i]->labels(), std::move(v), b.bound);
  }

  static LabelsPtr build_labels(const std::vector<PayoffSpecPtr>& specs) {
    if (specs.empty()) throw std::invalid_argument("combine: empty spec list");
    std::set<std::string> names;
    for (const auto& s : specs) {
      if (!names.insert(s->name()).second) {
        throw std::invalid_argument("combine: duplicate payoff name '" + s->name() + "'");
      }
    }
    Labels l;
    std::set<std::string> seen;
    for (const auto& s : specs) {
      for (const auto& lab : *s->labels()) {
        std::string full = s->name() + "/" + lab;
        if (!seen.insert(full).second) {
          throw std::invalid_argument("combine: duplicate label '" + full + "'");
        }
        l.push_back(std::move(full));
      }
    }
    return make_labels(std::move(l));
  }

  static double build_bound(const std::vector<PayoffSpecPtr>& specs, CombineMode mode) {
    if (mode == CombineMode::Normalized) return double(specs.size());
    double b = 0.0;
    for (const auto& s : specs) b += s->bound();
    return b;
  }

  static bool all_smoothable(const std::vector<PayoffSpecPtr>& specs) {
    for (const auto& s : specs) {
      if (!s->smoothable()) return false;
    }
    return true;
  }

  std::vector<PayoffSpecPtr> specs_;
  std::vector<PayoffBlock> blocks_;
};

} // namespace

PayoffSpecPtr combine(std::vector<PayoffSpecPtr> specs, CombineMode mode) {
  return std::make_shared<CombinedPayoff>(std::move(specs), mode);
}

} // namespace cal
