#include "ytab/interlacing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ytab/error.hpp"
#include "ytab/numeric.hpp"

namespace ytab {
namespace detail {

void BernsteinPoly::multiply_linear(double v0, double v1) {
  const int d = degree();
  std::vector<double> out(coeffs_.size() + 1, 0.0);
  double peak = 0.0;
  for (int k = 0; k <= d + 1; ++k) {
    double v = 0.0;
    if (k <= d) v += coeffs_[k] * v0 * (d + 1 - k) / (d + 1);
    if (k >= 1) v += coeffs_[k - 1] * v1 * k / (d + 1);
    out[k] = v;
    peak = std::max(peak, v);
  }
  // Only the shape matters to the sampler; keep magnitudes near 1.
  if (peak > 0.0) {
    for (double& v : out) v /= peak;
  }
  coeffs_ = std::move(out);
}

double BernsteinPoly::operator()(double u) const {
  const int d = degree();
  if (d == 0) return coeffs_[0];
  if (d > 900) {
    std::vector<double> b = coeffs_;
    for (int r = 1; r <= d; ++r) {
      for (int k = 0; k <= d - r; ++k) b[k] = (1.0 - u) * b[k] + u * b[k + 1];
    }
    return b[0];
  }
  // All terms are nonnegative, so this Horner form has no cancellation.
  const bool mirrored = u > 0.5;
  const double s = mirrored ? 1.0 - u : u;
  const double ratio = s / (1.0 - s);
  auto coeff = [&](int k) { return mirrored ? coeffs_[d - k] : coeffs_[k]; };
  double acc = coeff(d);
  for (int k = d - 1; k >= 0; --k) acc = coeff(k) + ratio * acc * (d - k) / (k + 1);
  return acc * std::pow(1.0 - s, d);
}

BernsteinPoly BernsteinPoly::antiderivative() const {
  const int d = degree();
  std::vector<double> out(coeffs_.size() + 1, 0.0);
  double running = 0.0;
  for (int k = 1; k <= d + 1; ++k) {
    running += coeffs_[k - 1];
    out[k] = running / (d + 1);
  }
  return BernsteinPoly(std::move(out));
}

namespace {

double box_density(std::span<const double> y, int exponent) {
  double v = 1.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = i + 1; j < y.size(); ++j) v *= y[j] - y[i];
    if (exponent > 0) v *= std::pow(y[i] * (1.0 - y[i]), exponent);
  }
  return v;
}

double gibbs_coordinate(const std::vector<double>& y, std::size_t j, double lo, double hi,
                        int exponent, const SamplerConfig& cfg, Rng& rng) {
  if (!(hi > lo)) return lo;
  BernsteinPoly density;
  for (std::size_t l = 0; l < y.size(); ++l) {
    if (l != j) density.multiply_linear(std::abs(lo - y[l]), std::abs(hi - y[l]));
  }
  for (int e = 0; e < exponent; ++e) {
    density.multiply_linear(lo, hi);
    density.multiply_linear(1.0 - lo, 1.0 - hi);
  }
  const BernsteinPoly cdf = density.antiderivative();
  const double total = cdf.coeffs().back();
  const double width = hi - lo;
  if (!(total > 0.0)) return lo + width * rng.uniform();
  const double target = total * rng.uniform();
  const double u = monotone_root([&](double v) { return cdf(v) - target; },
                                 [&](double v) { return density(v); }, 0.0, 1.0,
                                 cfg.root_tolerance / width);
  return lo + width * std::clamp(u, 0.0, 1.0);
}

std::vector<double> sample_gibbs(std::span<const double> lo, std::span<const double> hi,
                                 int exponent, const SamplerConfig& cfg, Rng& rng) {
  const std::size_t len = lo.size();
  std::vector<double> y(len);
  for (std::size_t j = 0; j < len; ++j) y[j] = 0.5 * (lo[j] + hi[j]);
  // With one coordinate the conditional is the target law: one draw is exact.
  const int sweeps =
      len == 1 ? 1 : (cfg.gibbs_sweeps > 0 ? cfg.gibbs_sweeps : 8 * static_cast<int>(len));
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (std::size_t j = 0; j < len; ++j) {
      y[j] = gibbs_coordinate(y, j, lo[j], hi[j], exponent, cfg, rng);
    }
  }
  return y;
}

std::vector<double> sample_rejection(std::span<const double> lo, std::span<const double> hi,
                                     int exponent, const SamplerConfig& cfg, Rng& rng) {
  const std::size_t len = lo.size();
  double bound = 1.0;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) bound *= hi[j] - lo[i];
    if (exponent > 0) {
      const double x = std::clamp(0.5, lo[i], hi[i]);
      bound *= std::pow(x * (1.0 - x), exponent);
    }
  }
  std::vector<double> y(len);
  for (std::uint64_t attempt = 0; attempt < cfg.rejection_cap; ++attempt) {
    for (std::size_t j = 0; j < len; ++j) y[j] = lo[j] + (hi[j] - lo[j]) * rng.uniform();
    if (rng.uniform() * bound <= box_density(y, exponent)) return y;
  }
  throw InfeasibleError("interlacing rejection exceeded its proposal cap of " +
                        std::to_string(cfg.rejection_cap));
}

}  // namespace

std::vector<double> sample_ordered_box(std::span<const double> lo, std::span<const double> hi,
                                       int exponent, const SamplerConfig& cfg, Rng& rng) {
  if (cfg.conditional == ConditionalMethod::kRejection) {
    return sample_rejection(lo, hi, exponent, cfg, rng);
  }
  return sample_gibbs(lo, hi, exponent, cfg, rng);
}

}  // namespace detail

std::vector<double> sample_interlacing_conditional(std::span<const double> outer,
                                                   InterlaceDirection direction, int n,
                                                   int target_index, const SamplerConfig& cfg,
                                                   Rng& rng) {
  const int len = static_cast<int>(outer.size());
  for (int j = 0; j < len; ++j) {
    if (!(outer[j] >= 0.0 && outer[j] <= 1.0) || (j > 0 && outer[j] < outer[j - 1])) {
      throw StructuralError("outer diagonal must be ascending within [0,1]");
    }
  }
  auto mismatch = [&](int expected_len) {
    return StructuralError("diagonal D_" + std::to_string(target_index) + " of an n=" +
                           std::to_string(n) + " square needs an outer tuple of length " +
                           std::to_string(expected_len) + ", got " + std::to_string(len));
  };

  std::vector<double> lo;
  std::vector<double> hi;
  int exponent = 0;
  switch (direction) {
    case InterlaceDirection::kShrink:
      if (target_index < 1 || target_index >= n) {
        throw DomainError("shrink targets D_1..D_{n-1}");
      }
      if (len != target_index + 1) throw mismatch(target_index + 1);
      for (int j = 0; j + 1 < len; ++j) {
        lo.push_back(outer[j]);
        hi.push_back(outer[j + 1]);
      }
      break;
    case InterlaceDirection::kGrow:
      if (target_index < 2 || target_index > n) throw DomainError("grow targets D_2..D_n");
      if (len != target_index - 1) throw mismatch(target_index - 1);
      for (int j = 0; j <= len; ++j) {
        lo.push_back(j == 0 ? 0.0 : outer[j - 1]);
        hi.push_back(j == len ? 1.0 : outer[j]);
      }
      exponent = n - target_index;
      break;
    case InterlaceDirection::kGrowClamped:
      if (target_index <= n || target_index > 2 * n - 1) {
        throw DomainError("grow-clamped targets D_{n+1}..D_{2n-1}");
      }
      if (len != 2 * n - target_index + 1) throw mismatch(2 * n - target_index + 1);
      for (int j = 0; j + 1 < len; ++j) {
        lo.push_back(outer[j]);
        hi.push_back(outer[j + 1]);
      }
      break;
  }
  return detail::sample_ordered_box(lo, hi, exponent, cfg, rng);
}

}  // namespace ytab
