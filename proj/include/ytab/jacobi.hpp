#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ytab/rng.hpp"
#include "ytab/shape.hpp"

namespace ytab {

/// beta = 2 Jacobi ensemble on [0,1]:
///   density of (x_1 <= ... <= x_k)  ∝  Delta(x)^2 prod_i x_i^a (1-x_i)^b.
struct JacobiParams {
  int k = 1;
  double a = 0.0;
  double b = 0.0;

  bool operator==(const JacobiParams&) const = default;
  void validate() const;
};

enum class JacobiMethod { kTridiagonal, kMcmc, kRejection };
enum class ConditionalMethod { kGibbs, kRejection };

JacobiMethod parse_jacobi_method(const std::string& name);
std::string to_string(JacobiMethod method);

struct SamplerConfig {
  JacobiMethod method = JacobiMethod::kTridiagonal;
  ConditionalMethod conditional = ConditionalMethod::kGibbs;
  /// Gibbs sweeps for interlacing conditionals; 0 means 8 * tuple length.
  int gibbs_sweeps = 0;
  /// Slice-sampling sweeps for the MCMC Jacobi cross-check.
  int mcmc_sweeps = 400;
  /// Proposal budget for every rejection sampler.
  std::uint64_t rejection_cap = 100'000'000;
  /// Rejection is refused below this acceptance probability.
  double min_acceptance = 1e-6;
  /// Width of the bracket when inverting univariate CDFs.
  double root_tolerance = 1e-12;
};

/// Ascending k-tuple from the Jacobi ensemble.
///
/// kTridiagonal: squared singular values of the upper bidiagonal block of the
/// beta-Jacobi CS matrix model (O(k^2)). kMcmc: coordinate-wise slice
/// sampling of the joint density from a deterministic start, an independent
/// route used as a cross-check. kRejection: i.i.d. Beta(a+1, b+1) proposals
/// accepted with probability Delta^2 (<= 1); refused when the exact
/// acceptance rate is below cfg.min_acceptance.
std::vector<double> sample_jacobi(const JacobiParams& params, const SamplerConfig& cfg, Rng& rng);

/// E[Delta^2] under i.i.d. Beta(a+1, b+1) points (Heine's identity
/// k! det[moment_{i+j}]); the acceptance probability of kRejection.
double jacobi_rejection_acceptance(const JacobiParams& params);

/// Jacobi parameters of the anti-diagonal D_i of a uniform continuous
/// tableau. For m <= n and i <= n: (i, n-i, m-i) when i <= m, else
/// (m, n-i, i-m). Diagonals past column 1 (i > n) follow from the 180°
/// rotation Y -> 1-Y, and m > n from transposition.
JacobiParams diagonal_jacobi_params(const DiagonalSpec& diag);

struct DiagonalSample {
  Shape shape;
  int index;
  JacobiParams params;
  std::vector<double> values;  // ascending, i.e. in cell order along the diagonal
};

/// Fast path: draw one diagonal without building a tableau.
DiagonalSample sample_diagonal(const DiagonalSpec& diag, const SamplerConfig& cfg, Rng& rng);

nlohmann::json to_json(const DiagonalSample& s);

}  // namespace ytab
