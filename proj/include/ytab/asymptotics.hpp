#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "ytab/jacobi.hpp"
#include "ytab/shape.hpp"

namespace ytab {

struct Endpoints {
  double lower = 0.0;
  double upper = 0.0;
};

/// Support of the limiting diagonal law of a square at t = k/n:
/// (1 ± sqrt(t(2-t))) / 2. Requires 0 < t <= 1.
Endpoints lambda_pm(double t);

/// Soft edges of a beta = 2 Jacobi ensemble with k points and weight
/// x^a (1-x)^b, read as the spectrum of a product of two free projections
/// of traces p = k/N and q = (k+a)/N, N = 2k+a+b:
///   p + q - 2pq ± 2 sqrt(p q (1-p)(1-q)).
/// Refuses k < 2, where there is no spread to speak of.
Endpoints jacobi_edges(const JacobiParams& params);

/// Finite-size edges of a rectangle diagonal, through its Jacobi parameters.
Endpoints lambda_pm_rect(const DiagonalSpec& diag);

/// Large-n edges for an m x n rectangle, alpha = m/n in (0,1], along the
/// diagonal D_i with i = t n, t in (0,1]. Equals lambda_pm(t) at alpha = 1.
Endpoints lambda_pm_rect(double t, double alpha);

/// Probability density of the limiting diagonal law,
///   sqrt((λ+ - x)(x - λ-)) / (π t x (1 - x))  on (λ-, λ+), 0 elsewhere.
double equilibrium_density(double t, double x);

/// The limiting diagonal law at a fixed t with its CDF and quantile.
///
/// Everything is computed in the variable θ of x = λ- + (λ+ - λ-) sin²θ,
/// θ in [0, π/2], where the density becomes a smooth bounded integrand and
/// the square-root edges disappear. The CDF is cached at the panel breaks of
/// a uniform θ grid; each evaluation adds one adaptive Gauss–Kronrod panel.
class LimitShapeModel {
 public:
  explicit LimitShapeModel(double t, double tolerance = 1e-12, int panels = 64);

  double t() const { return t_; }
  Endpoints support() const { return edges_; }
  double density(double x) const { return equilibrium_density(t_, x); }
  double cdf(double x) const;
  /// Inverse of cdf on [0,1], accurate to 1e-10 in x.
  double quantile(double p) const;
  /// Integral of the density over the whole support.
  double total_mass() const { return cache_.back(); }

 private:
  double integrand(double theta) const;
  double cdf_theta(double theta) const;
  double theta_of(double x) const;

  double t_;
  double tolerance_;
  Endpoints edges_;
  double width_;
  double panel_;
  std::vector<double> cache_;
};

double shape_cdf(double t, double x);
double limit_shape_quantile(double t, double p);

/// Limit of Y at the cell (⌊rn⌋, ⌊sn⌋) of a large square. The cell sits on
/// the diagonal of relative length t = 1 - |r - s|, at relative position
/// min(r, s)/t along it, so g(r, s) = F_t^{-1}(min(r, s)/t).
double limit_shape_g(double r, double s);

/// Soft-edge constant: r(t) n^{2/3} (Y_max - centre) is asymptotically
/// Tracy–Widom for the diagonal at t. With f_t ≈ κ sqrt(λ+ - x) at the edge
/// and k = tn points, Airy matching gives the scale (π k κ)^{-2/3}, i.e.
///   r(t) = 4^{2/3} (t(2-t))^{1/6} / (1-t)^{4/3}.
/// Refuses t outside (0, 1).
double r_of_t(double t);

/// Multiplier taking the centred corner X_{1,n} of an (tn) x n rectangle to
/// unit variance: ((1+t)/t)^{3/2} / n^{3/2}; 2 sqrt(2) / n^{3/2} for squares.
double corner_scaling(int n, double t);

/// T_i = sqrt(2n) (1 - 2 Y_i), index by index. For a fixed short diagonal of
/// a large square the tuple approaches the GUE law ∝ Δ(T)² ∏ exp(-T_i²/2).
std::vector<double> gue_rescale(const DiagonalSample& diagonal, int n);

enum class Centering { kEmpiricalMean, kLambdaPlus };

/// Standardisation of largest diagonal points at the soft edge.
struct EdgeScaling {
  double t = 0.5;
  int n = 1;
  Centering centering = Centering::kEmpiricalMean;

  double r_t() const { return r_of_t(t); }
  double factor() const;
  /// r(t) n^{2/3} (y - c), with c the sample mean or λ+(t). λ+ centring
  /// carries the finite-n bias of the mean.
  std::vector<double> standardize(std::span<const double> largest) const;
};

/// t,x,f,F on `points` equally spaced x in the support.
void write_shape_curve_csv(std::ostream& os, double t, int points);
/// r,s,g on a (points x points) grid of [0,1]^2; cells with t = 0 are skipped.
void write_limit_surface_csv(std::ostream& os, int points);

}  // namespace ytab
