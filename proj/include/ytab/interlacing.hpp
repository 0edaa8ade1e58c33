#pragma once

#include <span>
#include <vector>

#include "ytab/jacobi.hpp"
#include "ytab/rng.hpp"

namespace ytab {

/// How the target diagonal sits relative to the given (outer) one in an
/// n x n square, numbering diagonals D_1 (top-right corner) .. D_{2n-1}.
enum class InterlaceDirection {
  /// Toward D_1: target D_i, i < n, from D_{i+1}; one point fewer, each point
  /// clamped between consecutive outer points. Weight Delta.
  kShrink,
  /// Away from D_1 up to the main diagonal: target D_i, i <= n, from D_{i-1};
  /// one point more, with 0 and 1 acting as outer endpoints. Weight
  /// Delta * prod (y(1-y))^{n-i}, the volume of everything beyond D_i.
  kGrow,
  /// Away from D_1 past the main diagonal: target D_i, i > n, from D_{i-1};
  /// one point fewer, clamped between consecutive outer points. Weight Delta.
  kGrowClamped,
};

/// Draws the target diagonal given its neighbour `outer`. The target lives on
/// a box prod_j [lo_j, hi_j] fixed by the interlacing constraint, with density
/// proportional to the weight above. Gibbs sweeps invert each coordinate's
/// one-dimensional polynomial CDF exactly (cfg.conditional = kGibbs), or the
/// box is sampled by rejection under a product bound (kRejection).
std::vector<double> sample_interlacing_conditional(std::span<const double> outer,
                                                   InterlaceDirection direction, int n,
                                                   int target_index, const SamplerConfig& cfg,
                                                   Rng& rng);

namespace detail {

/// Polynomial on [0,1] in Bernstein form, sum_k c_k C(d,k) u^k (1-u)^{d-k},
/// with nonnegative coefficients.
class BernsteinPoly {
 public:
  BernsteinPoly() : coeffs_{1.0} {}
  explicit BernsteinPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// Multiplies by the linear factor with values v0 at u=0 and v1 at u=1.
  void multiply_linear(double v0, double v1);
  double operator()(double u) const;
  /// Antiderivative vanishing at 0.
  BernsteinPoly antiderivative() const;

 private:
  std::vector<double> coeffs_;
};

/// Density ∝ Delta(y) prod (y(1-y))^exponent on prod_j [lo_j, hi_j], where the
/// intervals are ordered (hi_j <= lo_{j+1}).
std::vector<double> sample_ordered_box(std::span<const double> lo, std::span<const double> hi,
                                       int exponent, const SamplerConfig& cfg, Rng& rng);

}  // namespace detail
}  // namespace ytab
