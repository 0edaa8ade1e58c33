#include "ytab/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "ytab/asymptotics.hpp"
#include "ytab/corner_law.hpp"
#include "ytab/densities.hpp"
#include "ytab/enumerate.hpp"
#include "ytab/error.hpp"
#include "ytab/experiments.hpp"
#include "ytab/g_poly.hpp"
#include "ytab/stats.hpp"
#include "ytab/tableau_samplers.hpp"

namespace ytab {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

Outcome corner_law_vs_enumeration() {
  int shapes = 0;
  for (int m = 1; m <= 6; ++m) {
    for (int n = m; n <= 12; ++n) {
      const Shape shape(m, n);
      if (syt_count(shape) > 10000) continue;
      const CornerLaw law(shape);
      std::vector<BigInt> hits(static_cast<std::size_t>(shape.cells()) + 1, 0);
      SytEnumeration e(shape, 10000);
      while (auto t = e.next()) hits[static_cast<std::size_t>((*t)(0, n - 1))] += 1;
      for (int k = 1; k <= shape.cells(); ++k) {
        const Rational observed(hits[static_cast<std::size_t>(k)], BigInt(e.count()));
        const Rational expected =
            k >= law.support_min() && k <= law.support_max() ? law.exact_pmf(k) : Rational(0);
        if (observed != expected) {
          return {false, shape.to_string() + " differs at k=" + std::to_string(k)};
        }
      }
      ++shapes;
    }
  }
  return {true, std::to_string(shapes) + " shapes, exact equality"};
}

Outcome corner_law_normalised() {
  int shapes = 0;
  for (int m = 1; m <= 20; ++m) {
    for (int n = m; m * n <= 400; ++n) {
      BigInt total = 0;
      const BigInt norm =
          for_each_corner_weight(Shape(m, n), [&](int, const BigInt& w) { total += w; });
      if (total != norm) return {false, Shape(m, n).to_string() + " does not sum to 1"};
      ++shapes;
    }
  }
  return {true, std::to_string(shapes) + " shapes with mn <= 400"};
}

Outcome mixture_identity() {
  double worst = 0.0;
  for (int m = 1; m <= 30; ++m) {
    for (int n = 1; m * n <= 30; ++n) {
      const CornerLaw law(Shape(m, n));
      for (int i = 0; i <= 100; ++i) worst = std::max(worst, mixture_residual(law, i / 100.0));
    }
  }
  return {worst < 1e-10, "max residual " + fmt(worst)};
}

Outcome g_polynomials(Rng& rng) {
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n) {
    for (int i = 1; i <= std::min(6, 2 * n - 1); ++i) {
      const int len = g_arity(i, n);
      std::vector<double> ratios;
      for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> xs(static_cast<std::size_t>(len));
        for (double& x : xs) x = rng.uniform();
        std::sort(xs.begin(), xs.end());
        ratios.push_back(g_poly_integral(i, n, xs) / g_poly_closed(i, n, xs));
      }
      double mean = 0.0;
      for (double r : ratios) mean += r;
      mean /= static_cast<double>(ratios.size());
      double var = 0.0;
      for (double r : ratios) var += (r - mean) * (r - mean);
      const double cv = std::sqrt(var / static_cast<double>(ratios.size())) / std::abs(mean);
      worst = std::max(worst, cv);
    }
  }
  return {worst < 1e-6, "max coefficient of variation " + fmt(worst)};
}

Outcome validators() {
  for (const Shape& shape : {Shape(2, 3), Shape(3, 3), Shape(2, 4)}) {
    for (const DiscreteTableau& t : enumerate_syt(shape)) {
      if (!validate_discrete(t).empty()) return {false, "rejected an enumerated tableau"};
      const int mn = shape.cells();
      auto v = std::vector<int>(t.values().begin(), t.values().end());
      // Swapping two labels keeps the multiset; it must break monotonicity
      // exactly when the swapped filling is not standard.
      for (int a = 0; a < mn; ++a) {
        for (int b = a + 1; b < mn; ++b) {
          std::swap(v[a], v[b]);
          const DiscreteTableau s(shape, v);
          bool standard = true;
          for (int r = 0; r < shape.rows(); ++r) {
            for (int c = 0; c < shape.cols(); ++c) {
              if (c + 1 < shape.cols() && s(r, c) > s(r, c + 1)) standard = false;
              if (r + 1 < shape.rows() && s(r, c) > s(r + 1, c)) standard = false;
            }
          }
          if (validate_discrete(s).empty() != standard) {
            return {false, "validator disagrees on a transposition"};
          }
          std::swap(v[a], v[b]);
        }
      }
    }
  }
  return {true, "enumerated tableaux accepted, transpositions classified"};
}

Outcome sampler_validity(const SeedSpec& seed) {
  SamplerConfig cfg;
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    if (!validate_continuous(sample_tableau_diagonal_algorithm(3, 1 + i % 3, cfg, rng)).empty()) {
      return {false, "diagonal algorithm produced an invalid tableau"};
    }
    const DiscreteTableau x = sample_syt_hook_walk(Shape(3, 4), rng);
    if (!validate_discrete(x).empty()) return {false, "hook walk produced an invalid tableau"};
    if (!validate_continuous(couple_to_continuous(x, rng)).empty()) {
      return {false, "coupling produced an invalid tableau"};
    }
    if (!validate_continuous(rejection_uniform_tableau(Shape(2, 3), cfg, rng)).empty()) {
      return {false, "rejection produced an invalid tableau"};
    }
  }
  return {true, "1000 draws per sampler, all valid"};
}

Outcome diagonal_algorithm_marginals(const SeedSpec& seed) {
  double worst = 0.0;
  SamplerConfig cfg;
  for (int n = 2; n <= 3; ++n) {
    const CellLaw law(Shape(n, n));
    Rng rng({seed.seed, seed.stream + 1});
    std::vector<std::vector<double>> cells(static_cast<std::size_t>(n * n));
    for (int i = 0; i < 4000; ++i) {
      const auto t = sample_tableau_diagonal_algorithm(n, n, cfg, rng);
      for (int c = 0; c < n * n; ++c) cells[c].push_back(t.values()[c]);
    }
    for (int c = 0; c < n * n; ++c) {
      const Cell cell{c / n, c % n};
      const auto ref = ReferenceDistribution::custom(
          [&law, cell](double y) { return law.cdf(cell, y); }, 0.0, 0.0, "cell");
      worst = std::max(worst, ks_statistic(EmpiricalSample(cells[c]), ref));
    }
  }
  // 4000 draws: the KS 99.9% point is about 0.031.
  return {worst < 0.031, "max per-cell KS " + fmt(worst) + " at 4000 draws"};
}

Outcome jacobi_k1(const SeedSpec& seed) {
  double worst = 0.0;
  SamplerConfig cfg;
  Rng rng({seed.seed, seed.stream + 2});
  for (double a : {0.0, 1.0, 3.0}) {
    for (double b : {0.0, 1.0, 3.0}) {
      std::vector<double> xs;
      for (int i = 0; i < 10000; ++i) xs.push_back(sample_jacobi({1, a, b}, cfg, rng)[0]);
      worst = std::max(worst, ks_statistic(EmpiricalSample(xs),
                                           ReferenceDistribution::jacobi_k1(a, b)));
    }
  }
  return {worst < 0.02, "max KS " + fmt(worst) + " at 10^4 draws"};
}

Outcome limit_shape_numerics() {
  double worst_mass = 0.0;
  double worst_inverse = 0.0;
  double worst_edge = 0.0;
  double worst_rect = 0.0;
  for (double t : {0.1, 0.25, 0.5, 0.75, 1.0}) {
    const LimitShapeModel model(t);
    worst_mass = std::max(worst_mass, std::abs(model.total_mass() - 1.0));
    for (int i = 1; i <= 50; ++i) {
      const double p = i / 51.0;
      worst_inverse = std::max(worst_inverse, std::abs(model.cdf(model.quantile(p)) - p));
    }
    const Endpoints e = lambda_pm(t);
    const Endpoints r = lambda_pm_rect(t, 1.0);
    worst_rect = std::max({worst_rect, std::abs(e.lower - r.lower), std::abs(e.upper - r.upper)});
    if (t < 1.0) {
      worst_edge = std::max(worst_edge, std::abs(limit_shape_g(t, 1.0) - e.upper));
    }
  }
  const bool ok = worst_mass < 1e-8 && worst_inverse < 1e-8 && worst_edge < 1e-8 &&
                  worst_rect < 1e-12;
  return {ok, "mass " + fmt(worst_mass) + ", F(F^-1) " + fmt(worst_inverse) + ", edge " +
                  fmt(worst_edge) + ", rect " + fmt(worst_rect)};
}

Outcome tracy_widom_table() {
  const TwGrid& g = tw_grid();
  for (std::size_t i = 1; i < g.cdf.size(); ++i) {
    if (g.cdf[i] < g.cdf[i - 1]) return {false, "grid not monotone"};
  }
  const ReferenceDistribution tw = tw_reference();
  const double mean_gap = std::abs(tw.mean() - kTracyWidom2Mean);
  const double sd_gap = std::abs(tw.sd() - std::sqrt(kTracyWidom2Variance));
  // Interpolating from every other node must reproduce the skipped nodes.
  std::vector<double> xs;
  std::vector<double> fs;
  for (std::size_t i = 0; i < g.nodes.size(); i += 2) {
    xs.push_back(g.nodes[i]);
    fs.push_back(g.cdf[i]);
  }
  const auto coarse = ReferenceDistribution::custom_grid(xs, fs);
  double refine = 0.0;
  for (std::size_t i = 1; i < g.nodes.size(); i += 2) {
    refine = std::max(refine, std::abs(coarse.cdf(g.nodes[i]) - g.cdf[i]));
  }
  const bool ok = g.cdf.front() < 1e-8 && g.cdf.back() > 1.0 - 1e-8 && mean_gap < 1e-3 &&
                  sd_gap < 1e-3 && refine < 1e-4;
  return {ok, "mean gap " + fmt(mean_gap) + ", sd gap " + fmt(sd_gap) + ", refinement " +
                  fmt(refine)};
}

Outcome philox_known_answers() {
  using B = Philox4x32::Block;
  const B zero = Philox4x32::encrypt({0, 0, 0, 0}, {0, 0});
  const B ones = Philox4x32::encrypt({~0u, ~0u, ~0u, ~0u}, {~0u, ~0u});
  const B pi = Philox4x32::encrypt({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                                   {0xa4093822, 0x299f31d0});
  const bool ok = zero == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8} &&
                  ones == B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd} &&
                  pi == B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1};
  return {ok, ok ? "three reference vectors match" : "known-answer mismatch"};
}

Outcome determinism(const SeedSpec& seed) {
  SamplerConfig cfg;
  auto draw = [&](int r) {
    Rng rng({seed.seed, seed.stream + static_cast<std::uint64_t>(r)});
    const auto t = sample_tableau_diagonal_algorithm(4, 2, cfg, rng);
    return std::vector<double>(t.values().begin(), t.values().end());
  };
  const auto serial = run_replicates(16, 1, draw);
  const auto parallel = run_replicates(16, 8, draw);
  return {serial == parallel, serial == parallel ? "identical at widths 1 and 8"
                                                 : "outputs depend on the thread count"};
}

}  // namespace

std::vector<VerifyCheck> run_invariant_suite(const SeedSpec& seed) {
  Rng rng(seed);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> steps = {
      {"corner law equals enumeration", corner_law_vs_enumeration},
      {"corner law normalised", corner_law_normalised},
      {"mixture identity", mixture_identity},
      {"g polynomials match their integrals", [&] { return g_polynomials(rng); }},
      {"validators", validators},
      {"sampler outputs valid", [&] { return sampler_validity(seed); }},
      {"diagonal algorithm cell marginals", [&] { return diagonal_algorithm_marginals(seed); }},
      {"one-point Jacobi is Beta", [&] { return jacobi_k1(seed); }},
      {"limit shape numerics", limit_shape_numerics},
      {"Tracy-Widom table", tracy_widom_table},
      {"Philox known answers", philox_known_answers},
      {"determinism across thread counts", [&] { return determinism(seed); }},
  };
  std::vector<VerifyCheck> out;
  for (const auto& [name, fn] : steps) {
    try {
      const Outcome o = fn();
      out.push_back({name, o.passed, o.detail});
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("threw: ") + e.what()});
    }
  }
  return out;
}

nlohmann::json to_json(const std::vector<VerifyCheck>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return arr;
}

}  // namespace ytab
