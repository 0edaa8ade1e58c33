#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "ytab/shape.hpp"

namespace ytab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(int n, int k);

/// log C(n, k) through lgamma; -inf when the coefficient is zero.
double log_binomial(double n, double k);

/// Number of standard Young tableaux of the rectangle (hook length formula).
BigInt syt_count(const Shape& shape);

/// Nearest double to an exact rational.
double to_double(const Rational& q);

}  // namespace ytab
