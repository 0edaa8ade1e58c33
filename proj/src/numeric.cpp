#include "ytab/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "ytab/error.hpp"

namespace ytab {

GaussRule gauss_legendre(int points) {
  if (points < 1) throw DomainError("Gauss-Legendre rule needs at least one node");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(points));
  rule.weights.resize(static_cast<std::size_t>(points));
  const int half = (points + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= points; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = points * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[points - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[points - 1 - i] = w;
  }
  if (points % 2 == 1) rule.nodes[points / 2] = 0.0;
  return rule;
}

double xlogy(double a, double b) {
  if (a == 0.0) return 0.0;
  return a * std::log(b);
}

double monotone_root(const std::function<double(double)>& f,
                     const std::function<double(double)>& df, double lo, double hi, double tol) {
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 400; ++iter) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (fx < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    if (hi - lo <= tol) return 0.5 * (lo + hi);
    const double d = df ? df(x) : 0.0;
    if (d > 0.0) {
      const double step = fx / d;
      const double next = x - step;
      if (next > lo && next < hi) {
        if (std::abs(step) < tol) return next;
        x = next;
        continue;
      }
    }
    x = 0.5 * (lo + hi);
  }
  return x;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace ytab
