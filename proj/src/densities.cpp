#include "ytab/densities.hpp"

#include <cmath>

#include <boost/math/special_functions/beta.hpp>

#include "ytab/enumerate.hpp"
#include "ytab/error.hpp"
#include "ytab/numeric.hpp"

namespace ytab {
namespace {

void check_unit(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("density argument " + std::to_string(x) + " outside [0,1]");
  }
}

// log of x^a (1-x)^b / B(a+1, b+1) for integer-valued a, b >= 0.
double log_beta_kernel(double a, double b, double x) {
  return xlogy(a, x) + xlogy(b, 1.0 - x) + std::lgamma(a + b + 2) - std::lgamma(a + 1) -
         std::lgamma(b + 1);
}

}  // namespace

double beta_order_density(const Shape& shape, int k, double x) {
  const int mn = shape.cells();
  if (k < 1 || k > mn) {
    throw DomainError("order statistic index " + std::to_string(k) + " outside [1, " +
                      std::to_string(mn) + "]");
  }
  check_unit(x);
  return std::exp(log_beta_kernel(k - 1, mn - k, x));
}

double corner_marginal_density(const Shape& shape, double x) {
  check_unit(x);
  return std::exp(log_beta_kernel(shape.cols() - 1, shape.rows() - 1, x));
}

double mixture_residual(const CornerLaw& law, double x) {
  check_unit(x);
  const int mn = law.shape().cells();
  double mixture = 0.0;
  for (int k = law.support_min(); k <= law.support_max(); ++k) {
    mixture += std::exp(law.log_pmf(k) + log_beta_kernel(k - 1, mn - k, x));
  }
  return std::abs(corner_marginal_density(law.shape(), x) - mixture);
}

double mixture_residual(const Shape& shape, double x) {
  return mixture_residual(CornerLaw(shape, 0), x);
}

CellLaw::CellLaw(const Shape& shape, std::uint64_t cap) : shape_(shape) {
  const int mn = shape.cells();
  std::vector<std::vector<std::uint64_t>> hits(static_cast<std::size_t>(mn),
                                               std::vector<std::uint64_t>(mn, 0));
  SytEnumeration e(shape, cap);
  while (auto t = e.next()) {
    const auto v = t->values();
    for (int c = 0; c < mn; ++c) hits[c][static_cast<std::size_t>(v[c]) - 1]++;
  }
  const auto total = static_cast<double>(e.count());
  pmf_.assign(static_cast<std::size_t>(mn), std::vector<double>(mn, 0.0));
  for (int c = 0; c < mn; ++c) {
    for (int k = 0; k < mn; ++k) pmf_[c][k] = static_cast<double>(hits[c][k]) / total;
  }
}

double CellLaw::pmf(const Cell& cell, int k) const {
  if (k < 1 || k > shape_.cells()) return 0.0;
  return pmf_[static_cast<std::size_t>(cell.row * shape_.cols() + cell.col)][k - 1];
}

double CellLaw::cdf(const Cell& cell, double y) const {
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  const int mn = shape_.cells();
  double f = 0.0;
  for (int k = 1; k <= mn; ++k) {
    const double p = pmf(cell, k);
    if (p > 0.0) f += p * boost::math::ibeta(k, mn - k + 1, y);
  }
  return f;
}

}  // namespace ytab
