#include "ytab/corner_law.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "ytab/error.hpp"

namespace ytab {

BigInt for_each_corner_weight(const Shape& shape,
                              const std::function<void(int, const BigInt&)>& fn) {
  const int m = shape.rows();
  const int n = shape.cols();
  const int mn = shape.cells();
  const int lo = n;
  const int hi = mn - m + 1;
  // w_k = C(k-1, n-1) C(mn-k, m-1), stepped k -> k+1 with exact divisions.
  BigInt left = 1;                   // C(k-1, n-1) at k = n
  BigInt right = binomial(mn - n, m - 1);
  for (int k = lo; k <= hi; ++k) {
    fn(k, left * right);
    if (k == hi) break;
    left *= k;
    left /= k - n + 1;
    right *= mn - k - m + 1;
    right /= mn - k;
  }
  return binomial(mn, m + n - 1);
}

CornerLaw::CornerLaw(Shape shape, int exact_cell_limit) : shape_(shape) {
  const int m = shape.rows();
  const int n = shape.cols();
  const int mn = shape.cells();
  const double log_norm = log_binomial(mn, m + n - 1);
  for (int k = support_min(); k <= support_max(); ++k) {
    log_pmf_.push_back(log_binomial(k - 1, n - 1) + log_binomial(mn - k, m - 1) - log_norm);
  }
  if (mn <= exact_cell_limit) {
    std::vector<BigInt> weights;
    const BigInt norm =
        for_each_corner_weight(shape, [&](int, const BigInt& w) { weights.push_back(w); });
    exact_.reserve(weights.size());
    for (const auto& w : weights) exact_.emplace_back(w, norm);
  }
}

double CornerLaw::log_pmf(int k) const {
  if (k < support_min() || k > support_max()) return -std::numeric_limits<double>::infinity();
  return log_pmf_[static_cast<std::size_t>(k - support_min())];
}

double CornerLaw::pmf(int k) const { return std::exp(log_pmf(k)); }

Rational CornerLaw::exact_pmf(int k) const {
  if (!has_exact()) {
    throw DomainError("exact corner pmf not built for shape " + shape_.to_string());
  }
  if (k < support_min() || k > support_max()) return Rational(0);
  return exact_[static_cast<std::size_t>(k - support_min())];
}

void CornerLaw::write_csv(std::ostream& os) const {
  const auto precision = os.precision();
  os << "k,p_exact_num,p_exact_den,log_p\n" << std::setprecision(17);
  for (int k = support_min(); k <= support_max(); ++k) {
    os << k << ',';
    if (has_exact()) {
      const Rational p = exact_pmf(k);
      os << numerator(p) << ',' << denominator(p);
    } else {
      os << ',';
    }
    os << ',' << log_pmf(k) << '\n';
  }
  os.precision(precision);
}

CornerMoments corner_moments(const CornerLaw& law) {
  BigInt s1 = 0;
  BigInt s2 = 0;
  const BigInt norm = for_each_corner_weight(law.shape(), [&](int k, const BigInt& w) {
    s1 += w * k;
    s2 += w * k * k;
  });
  const Rational mean(s1, norm);
  const Rational second(s2, norm);
  return {mean, second - mean * mean};
}

}  // namespace ytab
