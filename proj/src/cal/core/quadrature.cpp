#include "cal/core/quadrature.hpp"

#include <cmath>

namespace cal {

namespace {

std::vector<QuadNode> build_gl(int n) {
  std::vector<QuadNode> nodes(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = {-x, w};
    nodes[n - 1 - i] = {x, w};
  }
  return nodes;
}

} // namespace

const std::vector<QuadNode>& gauss_legendre_32() {
  static const std::vector<QuadNode> nodes = build_gl(32);
  return nodes;
}

double gl32_integrate(double a, double b, const std::function<double(double)>& f) {
  const auto& nodes = gauss_legendre_32();
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (const auto& n : nodes) acc += n.w * f(mid + half * n.x);
  return acc * half;
}

} // namespace cal
