#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "ytab/asymptotics.hpp"
#include "ytab/jacobi.hpp"
#include "ytab/rng.hpp"

namespace ytab {

enum class ExperimentKind {
  kSample,
  kCornerLaw,
  kCornerClt,
  kEdgeTw,
  kLimitShape,
  kGueLink,
  kVerify,
  kExploreConjecture,
};
ExperimentKind parse_experiment_kind(const std::string& name);
std::string to_string(ExperimentKind kind);

/// What `sample` draws.
enum class SampleKind {
  kHookWalk,           // discrete tableau, GNW hook walk
  kCoupled,            // hook walk pushed to a continuous tableau
  kDiagonalAlgorithm,  // continuous square tableau built diagonal by diagonal
  kRejection,          // continuous tableau by rejection from i.i.d. uniforms
  kDiagonal,           // one diagonal from its Jacobi law
};
SampleKind parse_sample_kind(const std::string& name);
std::string to_string(SampleKind kind);

ConditionalMethod parse_conditional_method(const std::string& name);
std::string to_string(ConditionalMethod method);
Centering parse_centering(const std::string& name);
std::string to_string(Centering centering);

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "YTAB_OUTPUT_DIR";
std::string default_output_dir();

/// Everything a run depends on. A run is a pure function of this config;
/// output_dir and parallelism do not change any output byte and are left out
/// of the hash.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kVerify;
  /// Rows; 0 means square (m = n).
  int m = 0;
  int n = 50;
  /// Diagonal index (sample, gue-link) or starting diagonal of the diagonal
  /// algorithm; 0 picks a default for the experiment.
  int k = 0;
  double t = 0.5;
  int replicates = 1000;
  SeedSpec seed{1, 0};
  SampleKind sample = SampleKind::kDiagonalAlgorithm;
  SamplerConfig sampler;
  Centering centering = Centering::kEmpiricalMean;
  int bins = 50;
  /// Window sizes a_n for explore-conjecture.
  std::vector<int> windows;
  std::string output_dir;
  int parallelism = 1;

  /// Throws ConfigError.
  void validate() const;
  int rows() const { return m > 0 ? m : n; }
};

nlohmann::json to_json(const ExperimentConfig& cfg);
/// Missing keys keep their defaults; unknown keys are a ConfigError.
ExperimentConfig experiment_config_from_json(const nlohmann::json& j,
                                             ExperimentConfig base = {});
/// 16 hex digits of FNV-1a over the canonical JSON of the hashed fields.
std::string config_hash(const ExperimentConfig& cfg);

struct ExperimentResult {
  std::vector<std::filesystem::path> files;
  nlohmann::json summary;
  /// False only when a verification step failed.
  bool passed = true;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);
ExperimentResult run_sample(const ExperimentConfig& cfg);
ExperimentResult run_corner_law(const ExperimentConfig& cfg);
ExperimentResult run_corner_clt(const ExperimentConfig& cfg);
ExperimentResult run_edge_tw(const ExperimentConfig& cfg);
ExperimentResult run_limit_shape(const ExperimentConfig& cfg);
ExperimentResult run_gue_link(const ExperimentConfig& cfg);
ExperimentResult run_verify(const ExperimentConfig& cfg);
ExperimentResult run_explore_conjecture(const ExperimentConfig& cfg);

/// CDF of the smallest (index 0) or largest (index 1) point of the
/// two-point GUE law ∝ (t2 - t1)² exp(-(t1² + t2²)/2), by nested
/// Gauss–Kronrod quadrature of the joint density.
double gue2_marginal_cdf(int index, double s);

/// fn(r) for r = 0..count-1 on `width` threads. Results are stored by index,
/// so the output does not depend on scheduling. The exception of the lowest
/// failing replicate is rethrown.
template <typename Fn>
auto run_replicates(int count, int width, Fn fn) -> std::vector<decltype(fn(0))> {
  using T = decltype(fn(0));
  std::vector<T> out(static_cast<std::size_t>(std::max(count, 0)));
  std::vector<std::exception_ptr> errors(out.size());
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next++; r < count; r = next++) {
      try {
        out[static_cast<std::size_t>(r)] = fn(r);
      } catch (...) {
        errors[static_cast<std::size_t>(r)] = std::current_exception();
      }
    }
  };
  const int threads = std::clamp(width, 1, std::max(count, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace ytab
