#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "ytab/combinatorics.hpp"

namespace ytab {

/// Shapes up to this many cells keep an exact rational pmf alongside the
/// log-space one.
inline constexpr int kExactCellLimit = 400;

/// Law of the top-right corner entry X_{1,n} of a uniform standard Young
/// tableau:
///
///   P(X_{1,n} = k) = C(k-1, n-1) C(mn-k, m-1) / C(mn, m+n-1),
///   n <= k <= mn-m+1,
///
/// i.e. the position of the n-th smallest of m+n-1 distinct values drawn from
/// {1..mn}.
class CornerLaw {
 public:
  explicit CornerLaw(Shape shape, int exact_cell_limit = kExactCellLimit);

  const Shape& shape() const { return shape_; }
  int support_min() const { return shape_.cols(); }
  int support_max() const { return shape_.cells() - shape_.rows() + 1; }

  /// 0 outside the support.
  double pmf(int k) const;
  /// -inf outside the support.
  double log_pmf(int k) const;

  bool has_exact() const { return !exact_.empty(); }
  /// Throws DomainError when the exact form was not built for this shape.
  Rational exact_pmf(int k) const;

  /// Columns k, p_exact_num, p_exact_den, log_p. The exact columns are empty
  /// when has_exact() is false.
  void write_csv(std::ostream& os) const;

 private:
  Shape shape_;
  std::vector<double> log_pmf_;
  std::vector<Rational> exact_;
};

/// Calls fn(k, w_k) over the support, where w_k = C(k-1,n-1) C(mn-k,m-1) is
/// the exact unnormalised weight; returns the normaliser C(mn, m+n-1).
BigInt for_each_corner_weight(const Shape& shape,
                              const std::function<void(int, const BigInt&)>& fn);

struct CornerMoments {
  Rational mean;
  Rational variance;
};

/// Exact mean and variance, summed in big-integer arithmetic over the whole
/// support regardless of the shape size.
CornerMoments corner_moments(const CornerLaw& law);

}  // namespace ytab
