#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace ytab {

/// (master seed, stream index). Distinct stream indices address disjoint
/// counter ranges of the same keyed generator.
struct SeedSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  bool operator==(const SeedSpec&) const = default;
};

/// Philox4x32-10 counter-based generator. The key is the master seed; the
/// 128-bit counter is (block index, stream index), so any (seed, stream)
/// pair yields the same sequence everywhere and streams never overlap.
class Philox4x32 {
 public:
  using result_type = std::uint64_t;
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  explicit Philox4x32(SeedSpec spec);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  /// The raw bijection, exposed for known-answer tests.
  static Block encrypt(Block counter, Key key);

 private:
  Key key_;
  std::uint64_t block_ = 0;
  std::uint64_t stream_;
  Block buffer_{};
  int used_ = 4;
};

/// Generator plus the handful of variates the samplers need. Every variate
/// is computed here from raw bits, so results do not depend on the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(SeedSpec spec) : engine_(spec) {}

  std::uint64_t bits() { return engine_(); }
  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();
  /// Uniform on {0, ..., n-1}; n >= 1.
  std::uint64_t below(std::uint64_t n);
  double normal();
  /// Gamma(shape, 1), shape > 0.
  double gamma(double shape);
  /// Beta(a, b) as the pair (X, 1-X), computed without cancellation.
  std::array<double, 2> beta_pair(double a, double b);
  double beta(double a, double b) { return beta_pair(a, b)[0]; }

 private:
  Philox4x32 engine_;
};

}  // namespace ytab
