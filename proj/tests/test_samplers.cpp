#include <doctest.h>

#include <cmath>
#include <complex>
#include <map>
#include <numeric>

#include <Eigen/Dense>
#include <boost/math/special_functions/beta.hpp>

#include "ytab/combinatorics.hpp"
#include "ytab/densities.hpp"
#include "ytab/enumerate.hpp"
#include "ytab/error.hpp"
#include "ytab/interlacing.hpp"
#include "ytab/numeric.hpp"
#include "ytab/stats.hpp"
#include "ytab/tableau_samplers.hpp"

using namespace ytab;

namespace {

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sd_of(const std::vector<double>& v) {
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

// Tensor Gauss–Legendre over the ordered pair x1 < x2 in [lo1,hi1]x[lo2,hi2]
// of w(x1, x2) f(x1, x2) / Z; boxes are disjoint or ordered so no clipping.
template <typename W, typename F>
double box_expectation(double lo1, double hi1, double lo2, double hi2, W w, F f) {
  const GaussRule g = gauss_legendre(40);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      const double x1 = lo1 + 0.5 * (hi1 - lo1) * (g.nodes[i] + 1);
      const double x2 = lo2 + 0.5 * (hi2 - lo2) * (g.nodes[j] + 1);
      const double wt = g.weights[i] * g.weights[j] * w(x1, x2);
      num += wt * f(x1, x2);
      den += wt;
    }
  }
  return num / den;
}

// Expectation under the ordered two-point Jacobi density on [0,1]^2 by
// quadrature on the triangle x1 < x2 (mapped from the square).
template <typename F>
double jacobi2_expectation(double a, double b, F f) {
  const GaussRule g = gauss_legendre(60);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const double x2 = 0.5 * (g.nodes[i] + 1);
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      const double x1 = x2 * 0.5 * (g.nodes[j] + 1);
      const double d = x2 - x1;
      const double w = g.weights[i] * g.weights[j] * 0.25 * x2 * d * d *
                       std::pow(x1 * x2, a) * std::pow((1 - x1) * (1 - x2), b);
      num += w * f(x1, x2);
      den += w;
    }
  }
  return num / den;
}

// Eigenvalues of A (A + B)^{-1} with A = X X*, B = Y Y*, X: k x (k+a) and
// Y: k x (k+b) complex gaussian. This is the beta = 2 Jacobi law with weight
// x^a (1-x)^b for integer a, b.
std::vector<double> complex_manova(int k, int a, int b, Rng& rng) {
  using C = std::complex<double>;
  auto gaussian = [&](int rows, int cols) {
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m(i, j) = C(rng.normal(), rng.normal());
    }
    return m;
  };
  const Eigen::MatrixXcd x = gaussian(k, k + a);
  const Eigen::MatrixXcd y = gaussian(k, k + b);
  const Eigen::MatrixXcd A = x * x.adjoint();
  const Eigen::MatrixXcd S = A + y * y.adjoint();
  const Eigen::LLT<Eigen::MatrixXcd> llt(S);
  const Eigen::MatrixXcd L = llt.matrixL();
  const Eigen::MatrixXcd Li = L.inverse();
  const Eigen::MatrixXcd M = Li * A * Li.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + k);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("samplers") {

TEST_CASE("Philox known answers") {
  using B = Philox4x32::Block;
  CHECK(Philox4x32::encrypt({0, 0, 0, 0}, {0, 0}) ==
        B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::encrypt({~0u, ~0u, ~0u, ~0u}, {~0u, ~0u}) ==
        B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::encrypt({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                            {0xa4093822, 0x299f31d0}) ==
        B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("seeded streams reproduce and separate") {
  Rng a({42, 3});
  Rng b({42, 3});
  Rng c({42, 4});
  int same_c = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.bits();
    CHECK(x == b.bits());
    same_c += x == c.bits();
  }
  CHECK(same_c == 0);
  Rng d({42, 3});
  const auto t1 = sample_tableau_diagonal_algorithm(4, 2, SamplerConfig{}, d);
  Rng e({42, 3});
  CHECK(sample_tableau_diagonal_algorithm(4, 2, SamplerConfig{}, e) == t1);
}

TEST_CASE("basic variates") {
  Rng rng({5, 0});
  std::vector<std::uint64_t> counts(7, 0);
  std::vector<double> u;
  std::vector<double> z;
  std::vector<double> be;
  for (int i = 0; i < 70000; ++i) {
    counts[rng.below(7)]++;
    const double x = rng.uniform();
    CHECK((x > 0.0 && x < 1.0));
    u.push_back(x);
    z.push_back(rng.normal());
    be.push_back(rng.beta(0.5, 2.5));
  }
  CHECK(chi_square_uniformity(counts).chi_square->p_value > 1e-3);
  CHECK(ks_statistic(EmpiricalSample(u), ReferenceDistribution::beta(1, 1)) < 0.01);
  CHECK(ks_statistic(EmpiricalSample(z), ReferenceDistribution::normal()) < 0.01);
  CHECK(ks_statistic(EmpiricalSample(be), ReferenceDistribution::beta(0.5, 2.5)) < 0.01);
  const auto pair = rng.beta_pair(3.0, 4.0);
  CHECK(pair[0] + pair[1] == doctest::Approx(1.0));
}

TEST_CASE("hook walk") {
  Rng rng({11, 0});
  const auto only = sample_syt_hook_walk(Shape(1, 5), rng);
  CHECK(only == DiscreteTableau::from_rows({{1, 2, 3, 4, 5}}));

  int row_major = 0;
  for (int i = 0; i < 100000; ++i) {
    row_major += sample_syt_hook_walk(Shape(2, 2), rng) == DiscreteTableau::from_rows({{1, 2}, {3, 4}});
  }
  CHECK(std::abs(row_major / 1e5 - 0.5) < 0.01);

  const auto all = enumerate_syt(Shape(2, 3));
  std::vector<std::uint64_t> counts(all.size(), 0);
  for (int i = 0; i < 100000; ++i) {
    const auto t = sample_syt_hook_walk(Shape(2, 3), rng);
    const auto it = std::find(all.begin(), all.end(), t);
    REQUIRE(it != all.end());
    counts[static_cast<std::size_t>(it - all.begin())]++;
  }
  CHECK(chi_square_uniformity(counts).chi_square->p_value > 1e-3);

  for (int i = 0; i < 2000; ++i) {
    CHECK(validate_discrete(sample_syt_hook_walk(Shape(3 + i % 4, 5), rng)).empty());
  }
}

TEST_CASE("coupling to continuous tableaux") {
  Rng rng({12, 0});
  std::vector<double> single;
  for (int i = 0; i < 20000; ++i) {
    single.push_back(couple_to_continuous(DiscreteTableau::from_rows({{1}}), rng)(0, 0));
  }
  CHECK(ks_statistic(EmpiricalSample(single), ReferenceDistribution::beta(1, 1)) < 0.015);

  for (int i = 0; i < 500; ++i) {
    const auto x = sample_syt_hook_walk(Shape(3, 4), rng);
    const auto y = couple_to_continuous(x, rng);
    CHECK(validate_continuous(y).empty());
    // Ranks of the continuous entries reproduce X.
    std::vector<int> order(12);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int p, int q) { return y.values()[p] < y.values()[q]; });
    for (int r = 0; r < 12; ++r) CHECK(x.values()[order[r]] == r + 1);
  }

  // Coupled hook-walk samples have the exact cell marginals at n = 2.
  const CellLaw law(Shape(2, 2));
  std::vector<std::vector<double>> cells(4);
  for (int i = 0; i < 10000; ++i) {
    const auto y = couple_to_continuous(sample_syt_hook_walk(Shape(2, 2), rng), rng);
    for (int c = 0; c < 4; ++c) cells[c].push_back(y.values()[c]);
  }
  for (int c = 0; c < 4; ++c) {
    const Cell cell{c / 2, c % 2};
    const auto ref =
        ReferenceDistribution::custom([&](double v) { return law.cdf(cell, v); }, 0, 0, "cell");
    CHECK(ks_statistic(EmpiricalSample(cells[c]), ref) < 0.02);
  }
}

TEST_CASE("one-point Jacobi is Beta(a+1, b+1)") {
  Rng rng({13, 0});
  SamplerConfig cfg;
  for (double a : {0.0, 1.0, 3.0}) {
    for (double b : {0.0, 1.0, 3.0}) {
      std::vector<double> xs;
      for (int i = 0; i < 100000; ++i) xs.push_back(sample_jacobi({1, a, b}, cfg, rng)[0]);
      CHECK(ks_statistic(EmpiricalSample(xs), ReferenceDistribution::jacobi_k1(a, b)) < 0.01);
    }
  }
}

TEST_CASE("two-point Jacobi against quadrature") {
  Rng rng({14, 0});
  SamplerConfig cfg;
  for (auto [a, b] : {std::pair{0.0, 0.0}, std::pair{1.0, 2.0}, std::pair{4.0, 0.0}}) {
    std::vector<double> mx;
    std::vector<double> gap;
    for (int i = 0; i < 100000; ++i) {
      const auto x = sample_jacobi({2, a, b}, cfg, rng);
      REQUIRE(x[0] <= x[1]);
      mx.push_back(x[1]);
      gap.push_back(x[1] - x[0]);
    }
    const double e_max = jacobi2_expectation(a, b, [](double, double x2) { return x2; });
    const double e_gap = jacobi2_expectation(a, b, [](double x1, double x2) { return x2 - x1; });
    CHECK(std::abs(mean_of(mx) - e_max) < 4 * sd_of(mx) / std::sqrt(1e5));
    CHECK(std::abs(mean_of(gap) - e_gap) < 4 * sd_of(gap) / std::sqrt(1e5));
    if (a == 0.0 && b == 0.0) CHECK(e_max == doctest::Approx(0.8).epsilon(1e-10));
  }
}

TEST_CASE("tridiagonal, MCMC, rejection and complex MANOVA agree") {
  const JacobiParams p{3, 1.0, 2.0};
  SamplerConfig tri;
  SamplerConfig mcmc;
  mcmc.method = JacobiMethod::kMcmc;
  SamplerConfig rej;
  rej.method = JacobiMethod::kRejection;
  Rng rng({15, 0});
  const int reps = 20000;
  std::array<std::vector<double>, 4> lo;
  std::array<std::vector<double>, 4> hi;
  for (int i = 0; i < reps; ++i) {
    const std::array<std::vector<double>, 4> draws = {
        sample_jacobi(p, tri, rng), sample_jacobi(p, mcmc, rng), sample_jacobi(p, rej, rng),
        complex_manova(3, 1, 2, rng)};
    for (int m = 0; m < 4; ++m) {
      lo[m].push_back(draws[m].front());
      hi[m].push_back(draws[m].back());
    }
  }
  for (int m = 1; m < 4; ++m) {
    const double se_lo = std::sqrt(2.0 / reps) * sd_of(lo[0]);
    const double se_hi = std::sqrt(2.0 / reps) * sd_of(hi[0]);
    CHECK(std::abs(mean_of(lo[m]) - mean_of(lo[0])) < 4.5 * se_lo);
    CHECK(std::abs(mean_of(hi[m]) - mean_of(hi[0])) < 4.5 * se_hi);
  }
}

TEST_CASE("Jacobi rejection acceptance and refusal") {
  // k = 2, a = b = 0: E (U1 - U2)^2 = 1/6.
  CHECK(jacobi_rejection_acceptance({2, 0, 0}) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(jacobi_rejection_acceptance({1, 3, 2}) == doctest::Approx(1.0));
  Rng rng({16, 0});
  double acc = 0.0;
  for (int i = 0; i < 200000; ++i) {
    const double x = rng.beta(2.0, 3.0);
    const double y = rng.beta(2.0, 3.0);
    const double z = rng.beta(2.0, 3.0);
    acc += std::pow((x - y) * (x - z) * (y - z), 2);
  }
  CHECK(acc / 2e5 == doctest::Approx(jacobi_rejection_acceptance({3, 1, 2})).epsilon(0.03));
  SamplerConfig rej;
  rej.method = JacobiMethod::kRejection;
  CHECK_THROWS_AS(sample_jacobi({12, 5, 5}, rej, rng), InfeasibleError);
  CHECK_THROWS_AS(sample_jacobi({0, 0, 0}, SamplerConfig{}, rng), DomainError);
}

TEST_CASE("diagonal Jacobi parameters") {
  CHECK(diagonal_jacobi_params(DiagonalSpec(Shape(6, 6), 6)) == JacobiParams{6, 0, 0});
  CHECK(diagonal_jacobi_params(DiagonalSpec(Shape(6, 6), 1)) == JacobiParams{1, 5, 5});
  CHECK(diagonal_jacobi_params(DiagonalSpec(Shape(2, 5), 4)) == JacobiParams{2, 1, 2});
  CHECK(diagonal_jacobi_params(DiagonalSpec(Shape(2, 5), 1)) == JacobiParams{1, 4, 1});
  Rng rng({17, 0});
  std::vector<double> corner;
  for (int i = 0; i < 20000; ++i) {
    corner.push_back(sample_diagonal(DiagonalSpec(Shape(9, 9), 1), SamplerConfig{}, rng).values[0]);
  }
  CHECK(std::abs(mean_of(corner) - 0.5) < 4 * sd_of(corner) / std::sqrt(2e4));
  CHECK(ks_statistic(EmpiricalSample(corner), ReferenceDistribution::beta(9, 9)) < 0.015);
}

TEST_CASE("every diagonal of small rectangles has the exact cell marginals") {
  // Rotation and transposition cases included: (2,3), (3,2), (3,4), (4,3).
  Rng rng({18, 0});
  for (const Shape& s : {Shape(2, 3), Shape(3, 2), Shape(3, 4), Shape(4, 3)}) {
    const CellLaw law(s);
    for (int i = 1; i <= s.rows() + s.cols() - 1; ++i) {
      const DiagonalSpec d(s, i);
      const auto cells = d.cells();
      std::vector<std::vector<double>> vals(cells.size());
      for (int r = 0; r < 5000; ++r) {
        const auto x = sample_diagonal(d, SamplerConfig{}, rng).values;
        for (std::size_t j = 0; j < cells.size(); ++j) vals[j].push_back(x[j]);
      }
      for (std::size_t j = 0; j < cells.size(); ++j) {
        const Cell c = cells[j];
        const auto ref =
            ReferenceDistribution::custom([&](double v) { return law.cdf(c, v); }, 0, 0, "cell");
        INFO(s.to_string(), " D_", i, " cell ", c.to_string());
        CHECK(ks_statistic(EmpiricalSample(vals[j]), ref) < 0.03);
      }
    }
  }
}

TEST_CASE("Bernstein polynomials") {
  using detail::BernsteinPoly;
  BernsteinPoly p;
  const std::vector<std::pair<double, double>> factors{{0.3, 0.9}, {1.0, 0.2}, {0.5, 0.5},
                                                       {0.0, 0.7}};
  for (auto [v0, v1] : factors) p.multiply_linear(v0, v1);
  CHECK(p.degree() == 4);
  const double scale = p(0.37) / [&] {
    double v = 1.0;
    for (auto [v0, v1] : factors) v *= v0 + (v1 - v0) * 0.37;
    return v;
  }();
  for (double u : {0.0, 0.1, 0.5, 0.77, 1.0}) {
    double direct = 1.0;
    for (auto [v0, v1] : factors) direct *= v0 + (v1 - v0) * u;
    CHECK(p(u) == doctest::Approx(direct * scale).epsilon(1e-12));
  }
  // The antiderivative differentiates back to p.
  const BernsteinPoly q = p.antiderivative();
  CHECK(q(0.0) == 0.0);
  for (double u : {0.2, 0.5, 0.8}) {
    const double h = 1e-5;
    CHECK((q(u + h) - q(u - h)) / (2 * h) == doctest::Approx(p(u)).epsilon(1e-7));
  }
  // High degree: de Casteljau and the Horner path agree near the switch.
  BernsteinPoly a;
  BernsteinPoly b;
  for (int i = 0; i < 900; ++i) a.multiply_linear(0.4 + 0.0001 * i, 0.6);
  b = a;
  b.multiply_linear(1.0, 1.0);
  for (double u : {0.3, 0.5, 0.7}) CHECK(b(u) == doctest::Approx(a(u)).epsilon(1e-9));
}

TEST_CASE("interlacing conditionals") {
  Rng rng({19, 0});
  SamplerConfig gibbs;
  SamplerConfig rej;
  rej.conditional = ConditionalMethod::kRejection;

  // One point between two: uniform.
  std::vector<double> one;
  const std::vector<double> ab{0.2, 0.7};
  for (int i = 0; i < 20000; ++i) {
    const auto x = sample_interlacing_conditional(ab, InterlaceDirection::kShrink, 5, 1, gibbs, rng);
    REQUIRE(x.size() == 1);
    one.push_back((x[0] - 0.2) / 0.5);
  }
  CHECK(ks_statistic(EmpiricalSample(one), ReferenceDistribution::beta(1, 1)) < 0.015);

  // Two points from three: density ∝ x2 - x1 on [a,b] x [b,c].
  const std::vector<double> abc{0.1, 0.4, 0.8};
  const double e_gap = box_expectation(
      0.1, 0.4, 0.4, 0.8, [](double x1, double x2) { return x2 - x1; },
      [](double x1, double x2) { return x2 - x1; });
  for (const SamplerConfig& cfg : {gibbs, rej}) {
    std::vector<double> gap;
    for (int i = 0; i < 20000; ++i) {
      const auto x = sample_interlacing_conditional(abc, InterlaceDirection::kShrink, 5, 2, cfg, rng);
      CHECK((x[0] >= 0.1 && x[0] <= 0.4 && x[1] >= 0.4 && x[1] <= 0.8));
      gap.push_back(x[1] - x[0]);
    }
    CHECK(mean_of(gap) == doctest::Approx(e_gap).epsilon(0.01));
  }

  // Growing from a single point in a 2 x 2 square: density ∝ x2 - x1 on
  // [0,a] x [a,1].
  const std::vector<double> a{0.35};
  const double e_x1 = box_expectation(
      0.0, 0.35, 0.35, 1.0, [](double x1, double x2) { return x2 - x1; },
      [](double x1, double) { return x1; });
  const double e_x2 = box_expectation(
      0.0, 0.35, 0.35, 1.0, [](double x1, double x2) { return x2 - x1; },
      [](double, double x2) { return x2; });
  std::vector<double> x1s;
  std::vector<double> x2s;
  for (int i = 0; i < 20000; ++i) {
    const auto x = sample_interlacing_conditional(a, InterlaceDirection::kGrow, 2, 2, gibbs, rng);
    x1s.push_back(x[0]);
    x2s.push_back(x[1]);
  }
  CHECK(std::abs(mean_of(x1s) - e_x1) < 4 * sd_of(x1s) / std::sqrt(2e4));
  CHECK(std::abs(mean_of(x2s) - e_x2) < 4 * sd_of(x2s) / std::sqrt(2e4));

  // Grow inside a larger square carries the weight (y(1-y))^{n-i}.
  const double e_w = box_expectation(
      0.0, 0.35, 0.35, 1.0,
      [](double x1, double x2) { return (x2 - x1) * std::pow(x1 * (1 - x1) * x2 * (1 - x2), 2); },
      [](double x1, double) { return x1; });
  for (const SamplerConfig& cfg : {gibbs, rej}) {
    std::vector<double> w;
    for (int i = 0; i < 20000; ++i) {
      w.push_back(sample_interlacing_conditional(a, InterlaceDirection::kGrow, 4, 2, cfg, rng)[0]);
    }
    CHECK(std::abs(mean_of(w) - e_w) < 4 * sd_of(w) / std::sqrt(2e4));
  }

  // Gibbs and rejection agree on a three-point clamped target.
  const std::vector<double> outer{0.05, 0.3, 0.55, 0.9};
  std::array<std::vector<double>, 2> mids;
  for (int m = 0; m < 2; ++m) {
    for (int i = 0; i < 20000; ++i) {
      mids[m].push_back(sample_interlacing_conditional(outer, InterlaceDirection::kGrowClamped, 5,
                                                       7, m == 0 ? gibbs : rej, rng)[1]);
    }
  }
  CHECK(std::abs(mean_of(mids[0]) - mean_of(mids[1])) <
        4.5 * std::sqrt(2.0 / 2e4) * sd_of(mids[1]));

  CHECK_THROWS_AS(sample_interlacing_conditional(abc, InterlaceDirection::kShrink, 5, 1, gibbs, rng),
                  StructuralError);
  CHECK_THROWS_AS(sample_interlacing_conditional(std::vector<double>{0.5, 0.2},
                                                 InterlaceDirection::kShrink, 5, 1, gibbs, rng),
                  StructuralError);
  SamplerConfig capped = rej;
  capped.rejection_cap = 0;
  CHECK_THROWS_AS(sample_interlacing_conditional(abc, InterlaceDirection::kShrink, 5, 2, capped, rng),
                  InfeasibleError);
}

TEST_CASE("diagonal algorithm") {
  Rng rng({20, 0});
  SamplerConfig cfg;
  std::vector<double> single;
  for (int i = 0; i < 20000; ++i) {
    single.push_back(sample_tableau_diagonal_algorithm(1, 1, cfg, rng)(0, 0));
  }
  CHECK(ks_statistic(EmpiricalSample(single), ReferenceDistribution::beta(1, 1)) < 0.015);

  for (int i = 0; i < 10000; ++i) {
    REQUIRE(validate_continuous(sample_tableau_diagonal_algorithm(3, 1 + i % 3, cfg, rng)).empty());
  }

  // Y_{1,2} at n = 2 has density 6y(1-y), CDF 3y^2 - 2y^3.
  for (int k : {1, 2}) {
    std::vector<double> corner;
    for (int i = 0; i < 100000; ++i) {
      corner.push_back(sample_tableau_diagonal_algorithm(2, k, cfg, rng)(0, 1));
    }
    const auto ref = ReferenceDistribution::custom(
        [](double y) { return y <= 0 ? 0.0 : y >= 1 ? 1.0 : 3 * y * y - 2 * y * y * y; }, 0.5,
        std::sqrt(0.05), "corner");
    CHECK(ks_statistic(EmpiricalSample(corner), ref) < 0.01);
  }

  CHECK_THROWS_AS(sample_tableau_diagonal_algorithm(3, 4, cfg, rng), DomainError);
  SamplerConfig capped;
  capped.conditional = ConditionalMethod::kRejection;
  capped.rejection_cap = 0;
  try {
    sample_tableau_diagonal_algorithm(3, 1, capped, rng);
    FAIL("expected a refusal");
  } catch (const InfeasibleError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("stage 3") != std::string::npos);
    CHECK(msg.find("D_2") != std::string::npos);
  }
}

TEST_CASE("diagonal algorithm against exact cell laws, every starting diagonal") {
  Rng rng({21, 0});
  for (int n = 2; n <= 3; ++n) {
    const CellLaw law(Shape(n, n));
    for (int k = 1; k <= n; ++k) {
      std::vector<std::vector<double>> cells(static_cast<std::size_t>(n * n));
      for (int i = 0; i < 4000; ++i) {
        const auto t = sample_tableau_diagonal_algorithm(n, k, SamplerConfig{}, rng);
        for (int c = 0; c < n * n; ++c) cells[c].push_back(t.values()[c]);
      }
      for (int c = 0; c < n * n; ++c) {
        const Cell cell{c / n, c % n};
        const auto ref =
            ReferenceDistribution::custom([&](double v) { return law.cdf(cell, v); }, 0, 0, "c");
        INFO("n=", n, " k=", k, " cell ", cell.to_string());
        CHECK(ks_statistic(EmpiricalSample(cells[c]), ref) < 0.035);
      }
    }
  }
}

TEST_CASE("rejection sampler of tableaux") {
  CHECK(rejection_tableau_acceptance(Shape(1, 2)) == doctest::Approx(0.5));
  CHECK(rejection_tableau_acceptance(Shape(2, 2)) == doctest::Approx(2.0 / 24.0));
  Rng rng({22, 0});
  SamplerConfig cfg;
  for (int i = 0; i < 2000; ++i) {
    CHECK(validate_continuous(rejection_uniform_tableau(Shape(2, 3), cfg, rng)).empty());
  }
  try {
    rejection_uniform_tableau(Shape(4, 4), cfg, rng);
    FAIL("expected a refusal");
  } catch (const InfeasibleError& e) {
    CHECK(std::string(e.what()).find("acceptance") != std::string::npos);
  }
}

TEST_CASE("sample records") {
  Rng rng({23, 0});
  const auto j = sample_record(sample_tableau_diagonal_algorithm(2, 1, SamplerConfig{}, rng),
                               SeedSpec{23, 0});
  CHECK(j["seed"] == 23);
  CHECK(j["m"] == 2);
  const auto d = sample_record(sample_diagonal(DiagonalSpec(Shape(3, 5), 2), SamplerConfig{}, rng),
                               SeedSpec{23, 1});
  CHECK(d["diagonal"] == 2);
  CHECK(d["stream"] == 1);
  CHECK(d["values"].size() == 2);
}

}  // TEST_SUITE
