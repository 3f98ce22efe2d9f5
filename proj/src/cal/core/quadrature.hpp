#pragma once

#include <functional>
#include <vector>

namespace cal {

struct QuadNode {
  double x; // abscissa on [-1, 1]
  double w;
};

// 32-point Gauss-Legendre rule (nodes computed once via Newton on the
// Legendre recurrence; exact for polynomials up to degree 63).
const std::vector<QuadNode>& gauss_legendre_32();

// Integral of f over [a, b] with the 32-point rule.
double gl32_integrate(double a, double b, const std::function<double(double)>& f);

} // namespace cal
