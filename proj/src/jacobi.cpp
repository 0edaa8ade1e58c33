#include "ytab/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "ytab/error.hpp"
#include "ytab/numeric.hpp"
#include "ytab/g_poly.hpp"

namespace ytab {

void JacobiParams::validate() const {
  if (k < 1 || !(a >= 0.0) || !(b >= 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("Jacobi parameters need k >= 1, a >= 0, b >= 0; got k=" +
                      std::to_string(k) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
  }
}

JacobiMethod parse_jacobi_method(const std::string& name) {
  if (name == "tridiagonal") return JacobiMethod::kTridiagonal;
  if (name == "mcmc") return JacobiMethod::kMcmc;
  if (name == "rejection") return JacobiMethod::kRejection;
  throw ConfigError("unknown Jacobi method '" + name + "'");
}

std::string to_string(JacobiMethod method) {
  switch (method) {
    case JacobiMethod::kTridiagonal: return "tridiagonal";
    case JacobiMethod::kMcmc: return "mcmc";
    case JacobiMethod::kRejection: return "rejection";
  }
  return "?";
}

namespace {

// Edelman–Sutton beta-Jacobi model at beta = 2:
//   c_j^2 ~ Beta(a + j, b + j),      j = k..1
//   c'_j^2 ~ Beta(j, a + b + 1 + j), j = k-1..1
// B11 is upper bidiagonal with diagonal (c_k, c_{k-1} s'_{k-1}, ..., c_1 s'_1)
// and superdiagonal (-s_k c'_{k-1}, ..., -s_2 c'_1). The squared singular
// values of B11 are the ensemble.
std::vector<double> sample_tridiagonal(const JacobiParams& p, Rng& rng) {
  const int k = p.k;
  std::vector<double> c(static_cast<std::size_t>(k) + 1), s(c.size());
  std::vector<double> cp(c.size()), sp(c.size());
  for (int j = k; j >= 1; --j) {
    const auto [x, y] = rng.beta_pair(p.a + j, p.b + j);
    c[j] = std::sqrt(x);
    s[j] = std::sqrt(y);
  }
  for (int j = k - 1; j >= 1; --j) {
    const auto [x, y] = rng.beta_pair(j, p.a + p.b + 1 + j);
    cp[j] = std::sqrt(x);
    sp[j] = std::sqrt(y);
  }
  Eigen::VectorXd d(k), e(std::max(k - 1, 0));
  d(0) = c[k];
  for (int r = 1; r < k; ++r) d(r) = c[k - r] * sp[k - r];
  for (int r = 0; r + 1 < k; ++r) e(r) = -s[k - r] * cp[k - r - 1];

  if (k == 1) return {d(0) * d(0)};
  // B B^T is symmetric tridiagonal.
  Eigen::VectorXd diag(k), sub(k - 1);
  for (int r = 0; r < k; ++r) diag(r) = d(r) * d(r) + (r + 1 < k ? e(r) * e(r) : 0.0);
  for (int r = 0; r + 1 < k; ++r) sub(r) = e(r) * d(r + 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + k);
  for (double& x : out) x = std::clamp(x, 0.0, 1.0);
  std::sort(out.begin(), out.end());
  return out;
}

double log_density_coordinate(const std::vector<double>& x, std::size_t i, double v,
                              const JacobiParams& p) {
  double logp = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j != i) logp += 2.0 * std::log(std::abs(v - x[j]));
  }
  if (p.a > 0) logp += p.a * std::log(v);
  if (p.b > 0) logp += p.b * std::log1p(-v);
  return logp;
}

// Gibbs over coordinates with shrinkage slice sampling (Neal 2003); each
// coordinate lives between its ordered neighbours, so the interval is bounded
// and no stepping-out is needed.
std::vector<double> sample_mcmc(const JacobiParams& p, const SamplerConfig& cfg, Rng& rng) {
  const int k = p.k;
  std::vector<double> x(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) x[i] = (i + 0.5) / k;
  for (int sweep = 0; sweep < cfg.mcmc_sweeps; ++sweep) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      double lo = i == 0 ? 0.0 : x[i - 1];
      double hi = i + 1 == x.size() ? 1.0 : x[i + 1];
      const double level = log_density_coordinate(x, i, x[i], p) + std::log(rng.uniform());
      while (true) {
        const double v = lo + (hi - lo) * rng.uniform();
        if (v > lo && v < hi && log_density_coordinate(x, i, v, p) > level) {
          x[i] = v;
          break;
        }
        if (v < x[i]) {
          lo = v;
        } else {
          hi = v;
        }
        if (hi - lo < 1e-300) break;
      }
    }
  }
  return x;
}

std::vector<double> sample_rejection(const JacobiParams& p, const SamplerConfig& cfg, Rng& rng) {
  const double acceptance = jacobi_rejection_acceptance(p);
  if (acceptance < cfg.min_acceptance) {
    throw InfeasibleError("Jacobi rejection refused: acceptance " + format_number(acceptance) +
                          " below " + format_number(cfg.min_acceptance));
  }
  std::vector<double> x(static_cast<std::size_t>(p.k));
  for (std::uint64_t attempt = 0; attempt < cfg.rejection_cap; ++attempt) {
    for (double& v : x) v = rng.beta(p.a + 1.0, p.b + 1.0);
    const double delta = vandermonde(x);
    if (rng.uniform() < delta * delta) {
      std::sort(x.begin(), x.end());
      return x;
    }
  }
  throw InfeasibleError("Jacobi rejection exhausted its proposal cap");
}

}  // namespace

double jacobi_rejection_acceptance(const JacobiParams& p) {
  p.validate();
  const int k = p.k;
  // Moments of Beta(a+1, b+1): mu_r = prod_{j<r} (a+1+j) / (a+b+2+j).
  std::vector<double> mu(static_cast<std::size_t>(2 * k - 1), 1.0);
  for (int r = 1; r < 2 * k - 1; ++r) {
    mu[r] = mu[r - 1] * (p.a + r) / (p.a + p.b + 1 + r);
  }
  Eigen::MatrixXd hankel(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) hankel(i, j) = mu[i + j];
  }
  return std::tgamma(k + 1.0) * hankel.determinant();
}

std::vector<double> sample_jacobi(const JacobiParams& params, const SamplerConfig& cfg, Rng& rng) {
  params.validate();
  switch (cfg.method) {
    case JacobiMethod::kTridiagonal: return sample_tridiagonal(params, rng);
    case JacobiMethod::kMcmc: return sample_mcmc(params, cfg, rng);
    case JacobiMethod::kRejection: return sample_rejection(params, cfg, rng);
  }
  throw DomainError("unknown Jacobi method");
}

JacobiParams diagonal_jacobi_params(const DiagonalSpec& diag) {
  int m = diag.shape().rows();
  int n = diag.shape().cols();
  int i = diag.index();
  if (m > n) {
    // Transpose: offset col-row flips sign, which maps index i to m+n-i.
    std::swap(m, n);
    i = m + n - i;
  }
  if (i > n) {
    // Rotation by 180°: D_i becomes 1 - D_{m+n-i} read backwards.
    const int j = m + n - i;
    return {j, static_cast<double>(m - j), static_cast<double>(n - j)};
  }
  if (i <= m) return {i, static_cast<double>(n - i), static_cast<double>(m - i)};
  return {m, static_cast<double>(n - i), static_cast<double>(i - m)};
}

DiagonalSample sample_diagonal(const DiagonalSpec& diag, const SamplerConfig& cfg, Rng& rng) {
  const JacobiParams params = diagonal_jacobi_params(diag);
  return {diag.shape(), diag.index(), params, sample_jacobi(params, cfg, rng)};
}

nlohmann::json to_json(const DiagonalSample& s) {
  return {{"m", s.shape.rows()},
          {"n", s.shape.cols()},
          {"diagonal", s.index},
          {"jacobi", {{"k", s.params.k}, {"a", s.params.a}, {"b", s.params.b}}},
          {"values", s.values}};
}

}  // namespace ytab
