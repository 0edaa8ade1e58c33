#pragma once

#include <span>

namespace ytab {

/// prod_{i<j} |x_j - x_i|; on ascending input this is the nonnegative
/// Vandermonde. A single point (or none) gives 1.
double vandermonde(std::span<const double> xs);

/// Number of arguments of g_i in an n x n square: i for i <= n, 2n-i beyond.
int g_arity(int i, int n);

/// Closed form of the diagonal volume polynomial g_i up to its constant:
///   i <= n:          Delta(x)
///   n <= i <= 2n-1:  Delta(x) prod_j (x_j (1-x_j))^{i-n}
/// Throws StructuralError when xs.size() != g_arity(i, n).
double g_poly_closed(int i, int n, std::span<const double> xs);

struct GQuadratureConfig {
  /// Recursion depth refused beyond this index; cost grows exponentially.
  int max_index = 6;
  /// Gauss–Legendre nodes per dimension. 0 picks, at every level, the
  /// smallest rule that is exact for the integrand's degree bound.
  int nodes_per_dim = 0;
};

/// g_i evaluated from its defining iterated integrals,
///   g_1 = 1,
///   g_{i+1}(x) = int_{x_1}^{x_2} ... int_{x_i}^{x_{i+1}} g_i(y) dy        (i < n)
///   g_{i+1}(x) = int_0^{x_1} int_{x_1}^{x_2} ... int_{x_L}^1 g_i(y) dy    (i >= n)
/// by nested tensor Gauss–Legendre quadrature. Verification oracle only.
double g_poly_integral(int i, int n, std::span<const double> xs,
                       const GQuadratureConfig& cfg = {});

}  // namespace ytab
