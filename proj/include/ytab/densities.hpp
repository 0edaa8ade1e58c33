#pragma once

#include <vector>

#include "ytab/corner_law.hpp"
#include "ytab/shape.hpp"

namespace ytab {

/// Density of the k-th smallest of mn i.i.d. uniforms,
/// x^{k-1}(1-x)^{mn-k} (mn)! / ((k-1)!(mn-k)!), evaluated in log space.
double beta_order_density(const Shape& shape, int k, double x);

/// Closed-form density of the corner Y_{1,n} of a uniform continuous
/// tableau: x^{n-1}(1-x)^{m-1} (m+n-1)! / ((m-1)!(n-1)!).
double corner_marginal_density(const Shape& shape, double x);

/// |f_{1,n}(x) - sum_k P(X_{1,n}=k) h_k(x)|: the gap between the continuous
/// corner density and its mixture over the discrete corner law.
double mixture_residual(const CornerLaw& law, double x);
double mixture_residual(const Shape& shape, double x);

/// Exact one-cell marginals of a uniform continuous tableau of a small shape.
/// The discrete law of every X_{i,j} comes from full enumeration; through the
/// order-statistic coupling Y_{i,j} then has CDF
///   sum_k P(X_{i,j} = k) I_y(k, mn - k + 1).
class CellLaw {
 public:
  /// Throws InfeasibleError when the shape has more than `cap` tableaux.
  explicit CellLaw(const Shape& shape, std::uint64_t cap = 10000);
  const Shape& shape() const { return shape_; }
  /// P(X_cell = k), k in 1..mn.
  double pmf(const Cell& cell, int k) const;
  double cdf(const Cell& cell, double y) const;

 private:
  Shape shape_;
  std::vector<std::vector<double>> pmf_;  // per cell, index k-1
};

}  // namespace ytab
