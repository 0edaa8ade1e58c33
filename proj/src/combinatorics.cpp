#include "ytab/combinatorics.hpp"

#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace ytab {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

double log_binomial(double n, double k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

BigInt syt_count(const Shape& shape) {
  const int m = shape.rows();
  const int n = shape.cols();
  BigInt hooks = 1;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) hooks *= (m - 1 - r) + (n - 1 - c) + 1;
  }
  return factorial(m * n) / hooks;
}

double to_double(const Rational& q) {
  return boost::multiprecision::cpp_bin_float_double(q).convert_to<double>();
}

}  // namespace ytab
