#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ytab {

/// Gauss–Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Exact for polynomials of degree <= 2*points - 1.
GaussRule gauss_legendre(int points);

/// a*log(b) with the convention 0*log(0) = 0.
double xlogy(double a, double b);

/// Bracketed root of a nondecreasing function on [lo, hi]; f(lo) <= 0 <= f(hi).
/// Newton steps from `df` are taken when they stay inside the bracket,
/// otherwise bisection. Stops when the bracket is narrower than `tol`.
double monotone_root(const std::function<double(double)>& f,
                     const std::function<double(double)>& df, double lo, double hi, double tol);

/// Shortest "%.4g" rendering, for messages.
std::string format_number(double v);

}  // namespace ytab
