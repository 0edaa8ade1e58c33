#include "ytab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ytab/error.hpp"
#include "ytab/numeric.hpp"

namespace ytab {

namespace {

void require_t(double t) {
  if (!(t > 0.0 && t <= 1.0)) throw DomainError("t must lie in (0, 1]");
}

Endpoints projection_edges(double p, double q) {
  const double centre = p + q - 2.0 * p * q;
  const double spread = 2.0 * std::sqrt(std::max(0.0, p * q * (1.0 - p) * (1.0 - q)));
  return {centre - spread, centre + spread};
}

}  // namespace

Endpoints lambda_pm(double t) {
  require_t(t);
  const double h = 0.5 * std::sqrt(t * (2.0 - t));
  return {0.5 - h, 0.5 + h};
}

Endpoints jacobi_edges(const JacobiParams& params) {
  params.validate();
  if (params.k < 2) throw DomainError("edges need a diagonal with at least two points");
  const double total = 2.0 * params.k + params.a + params.b;
  return projection_edges(params.k / total, (params.k + params.a) / total);
}

Endpoints lambda_pm_rect(const DiagonalSpec& diag) {
  return jacobi_edges(diagonal_jacobi_params(diag));
}

Endpoints lambda_pm_rect(double t, double alpha) {
  require_t(t);
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in (0, 1]");
  // Limits of k/N and (k+a)/N for the parameters (i, n-i, m-i) when i <= m
  // and (m, n-i, i-m) beyond.
  if (t <= alpha) return projection_edges(t / (1.0 + alpha), 1.0 / (1.0 + alpha));
  return projection_edges(alpha / (1.0 + alpha), (alpha + 1.0 - t) / (1.0 + alpha));
}

double equilibrium_density(double t, double x) {
  const Endpoints e = lambda_pm(t);
  if (!(x > e.lower && x < e.upper)) return 0.0;
  return std::sqrt((e.upper - x) * (x - e.lower)) / (std::numbers::pi * t * x * (1.0 - x));
}

LimitShapeModel::LimitShapeModel(double t, double tolerance, int panels)
    : t_(t), tolerance_(tolerance), edges_(lambda_pm(t)) {
  if (panels < 1) throw DomainError("need at least one panel");
  width_ = edges_.upper - edges_.lower;
  panel_ = 0.5 * std::numbers::pi / panels;
  cache_.assign(static_cast<std::size_t>(panels) + 1, 0.0);
  for (int j = 1; j <= panels; ++j) {
    cache_[j] = cache_[j - 1] + boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
                                    [this](double th) { return integrand(th); },
                                    panel_ * (j - 1), panel_ * j, 10, tolerance_);
  }
}

double LimitShapeModel::integrand(double theta) const {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double s2 = s * s;
  const double c2 = c * c;
  const double below = edges_.lower + width_ * s2;  // x
  const double above = edges_.lower + width_ * c2;  // 1 - x
  if (edges_.lower == 0.0) {
    // t = 1: the factors s² and c² cancel exactly (arcsine law).
    return 2.0 * width_ * width_ / (std::numbers::pi * t_ * width_ * width_);
  }
  return 2.0 * width_ * width_ * s2 * c2 / (std::numbers::pi * t_ * below * above);
}

double LimitShapeModel::cdf_theta(double theta) const {
  const double last = panel_ * static_cast<double>(cache_.size() - 1);
  theta = std::clamp(theta, 0.0, last);
  auto j = static_cast<std::size_t>(theta / panel_);
  j = std::min(j, cache_.size() - 1);
  const double start = panel_ * static_cast<double>(j);
  if (theta <= start) return cache_[j];
  return cache_[j] + boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
                         [this](double th) { return integrand(th); }, start, theta, 10,
                         tolerance_);
}

double LimitShapeModel::theta_of(double x) const {
  const double u = std::clamp((x - edges_.lower) / width_, 0.0, 1.0);
  return std::asin(std::sqrt(u));
}

double LimitShapeModel::cdf(double x) const {
  if (x <= edges_.lower) return 0.0;
  if (x >= edges_.upper) return 1.0;
  return std::clamp(cdf_theta(theta_of(x)), 0.0, 1.0);
}

double LimitShapeModel::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile level must lie in [0, 1]");
  if (p == 0.0) return edges_.lower;
  if (p == 1.0) return edges_.upper;
  // dx/dθ <= width, so a θ bracket of 1e-11 keeps x well inside 1e-10.
  const double theta = monotone_root([&](double th) { return cdf_theta(th) - p; },
                                     [&](double th) { return integrand(th); }, 0.0,
                                     0.5 * std::numbers::pi, 1e-11);
  const double s = std::sin(theta);
  return edges_.lower + width_ * s * s;
}

double shape_cdf(double t, double x) { return LimitShapeModel(t).cdf(x); }

double limit_shape_quantile(double t, double p) { return LimitShapeModel(t).quantile(p); }

double limit_shape_g(double r, double s) {
  if (!(r >= 0.0 && r <= 1.0 && s >= 0.0 && s <= 1.0)) {
    throw DomainError("(r, s) must lie in [0,1]^2");
  }
  const double t = 1.0 - std::abs(r - s);
  if (!(t > 0.0)) throw DomainError("the corners (1,0) and (0,1) carry no diagonal");
  const double p = std::min(r, s) / t;
  if (p > 1.0 + 1e-12) throw DomainError("position along the diagonal exceeds its length");
  return limit_shape_quantile(t, std::min(p, 1.0));
}

double r_of_t(double t) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("r(t) is defined for 0 < t < 1 only");
  return std::pow(4.0, 2.0 / 3.0) * std::pow(t * (2.0 - t), 1.0 / 6.0) /
         std::pow(1.0 - t, 4.0 / 3.0);
}

double corner_scaling(int n, double t) {
  if (n < 1) throw DomainError("n must be positive");
  if (!(t > 0.0)) throw DomainError("t must be positive");
  return std::pow((1.0 + t) / t, 1.5) / std::pow(static_cast<double>(n), 1.5);
}

std::vector<double> gue_rescale(const DiagonalSample& diagonal, int n) {
  if (n < 1) throw DomainError("n must be positive");
  const double scale = std::sqrt(2.0 * n);
  std::vector<double> out;
  out.reserve(diagonal.values.size());
  for (double y : diagonal.values) out.push_back(scale * (1.0 - 2.0 * y));
  return out;
}

double EdgeScaling::factor() const {
  if (n < 1) throw DomainError("n must be positive");
  return r_t() * std::pow(static_cast<double>(n), 2.0 / 3.0);
}

std::vector<double> EdgeScaling::standardize(std::span<const double> largest) const {
  if (largest.empty()) throw DomainError("nothing to standardise");
  const double centre =
      centering == Centering::kLambdaPlus
          ? lambda_pm(t).upper
          : std::accumulate(largest.begin(), largest.end(), 0.0) /
                static_cast<double>(largest.size());
  const double f = factor();
  std::vector<double> out;
  out.reserve(largest.size());
  for (double y : largest) out.push_back(f * (y - centre));
  return out;
}

void write_shape_curve_csv(std::ostream& os, double t, int points) {
  if (points < 2) throw DomainError("need at least two points");
  const LimitShapeModel model(t);
  const Endpoints e = model.support();
  os.precision(17);
  os << "t,x,f,F\n";
  for (int i = 0; i < points; ++i) {
    const double x = e.lower + (e.upper - e.lower) * i / (points - 1);
    os << t << ',' << x << ',' << model.density(x) << ',' << model.cdf(x) << '\n';
  }
}

void write_limit_surface_csv(std::ostream& os, int points) {
  if (points < 2) throw DomainError("need at least two points");
  os.precision(17);
  os << "r,s,g\n";
  for (int i = 0; i < points; ++i) {
    for (int j = 0; j < points; ++j) {
      const double r = static_cast<double>(i) / (points - 1);
      const double s = static_cast<double>(j) / (points - 1);
      if (1.0 - std::abs(r - s) <= 0.0) continue;
      os << r << ',' << s << ',' << limit_shape_g(r, s) << '\n';
    }
  }
}

}  // namespace ytab
