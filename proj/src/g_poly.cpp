#include "ytab/g_poly.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ytab/error.hpp"
#include "ytab/numeric.hpp"

namespace ytab {

double vandermonde(std::span<const double> xs) {
  double v = 1.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) v *= std::abs(xs[j] - xs[i]);
  }
  return v;
}

int g_arity(int i, int n) {
  if (n < 1 || i < 1 || i > 2 * n - 1) {
    throw DomainError("g index " + std::to_string(i) + " outside [1, " +
                      std::to_string(2 * n - 1) + "] for n = " + std::to_string(n));
  }
  return i <= n ? i : 2 * n - i;
}

namespace {

void check_arity(int i, int n, std::span<const double> xs) {
  const int arity = g_arity(i, n);
  if (static_cast<int>(xs.size()) != arity) {
    throw StructuralError("g_" + std::to_string(i) + " (n = " + std::to_string(n) + ") takes " +
                          std::to_string(arity) + " arguments, got " +
                          std::to_string(xs.size()));
  }
}

// Upper bound on the total degree of g_i, from the recursion alone: each
// integration variable raises the degree by at most one.
int degree_bound(int i, int n) {
  int degree = 0;
  for (int j = 1; j < i; ++j) degree += g_arity(j, n);
  return degree;
}

class IteratedIntegral {
 public:
  IteratedIntegral(int n, const GQuadratureConfig& cfg) : n_(n), cfg_(cfg) {}

  double eval(int i, const std::vector<double>& x) const {
    if (i == 1) return 1.0;
    const int inner = i - 1;
    const int dims = g_arity(inner, n_);
    // Integration box for the arguments of g_{i-1}.
    std::vector<double> lo(static_cast<std::size_t>(dims));
    std::vector<double> hi(static_cast<std::size_t>(dims));
    if (inner < n_) {
      for (int j = 0; j < dims; ++j) {
        lo[j] = x[j];
        hi[j] = x[j + 1];
      }
    } else {
      for (int j = 0; j < dims; ++j) {
        lo[j] = j == 0 ? 0.0 : x[j - 1];
        hi[j] = j == dims - 1 ? 1.0 : x[j];
      }
    }
    const int points =
        cfg_.nodes_per_dim > 0 ? cfg_.nodes_per_dim : degree_bound(inner, n_) / 2 + 1;
    const GaussRule rule = gauss_legendre(points);

    std::vector<int> idx(static_cast<std::size_t>(dims), 0);
    std::vector<double> y(static_cast<std::size_t>(dims));
    double total = 0.0;
    while (true) {
      double weight = 1.0;
      for (int j = 0; j < dims; ++j) {
        const double half = 0.5 * (hi[j] - lo[j]);
        y[j] = lo[j] + half * (1.0 + rule.nodes[idx[j]]);
        weight *= half * rule.weights[idx[j]];
      }
      total += weight * eval(inner, y);
      int d = 0;
      while (d < dims && ++idx[d] == points) idx[d++] = 0;
      if (d == dims) break;
    }
    return total;
  }

 private:
  int n_;
  GQuadratureConfig cfg_;
};

}  // namespace

double g_poly_closed(int i, int n, std::span<const double> xs) {
  check_arity(i, n, xs);
  double value = vandermonde(xs);
  if (i > n) {
    const int e = i - n;
    for (double x : xs) value *= std::pow(x * (1.0 - x), e);
  }
  return value;
}

double g_poly_integral(int i, int n, std::span<const double> xs, const GQuadratureConfig& cfg) {
  check_arity(i, n, xs);
  if (i > cfg.max_index) {
    throw InfeasibleError("iterated integral for g_" + std::to_string(i) +
                          " refused: index cap is " + std::to_string(cfg.max_index));
  }
  return IteratedIntegral(n, cfg).eval(i, std::vector<double>(xs.begin(), xs.end()));
}

}  // namespace ytab
