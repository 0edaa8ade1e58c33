#include "ytab/tableau_samplers.hpp"

#include <algorithm>
#include <string>

#include "ytab/combinatorics.hpp"
#include "ytab/error.hpp"
#include "ytab/numeric.hpp"

namespace ytab {

DiscreteTableau sample_syt_hook_walk(const Shape& shape, Rng& rng) {
  const int m = shape.rows();
  const int n = shape.cols();
  std::vector<int> row_len(m, n);
  std::vector<int> col_height(n, m);
  std::vector<int> values(static_cast<std::size_t>(m) * n, 0);
  int remaining = m * n;

  for (int label = m * n; label >= 1; --label) {
    // Uniform cell of the current shape.
    auto pick = static_cast<int>(rng.below(static_cast<std::uint64_t>(remaining)));
    int r = 0;
    while (pick >= row_len[r]) pick -= row_len[r++];
    int c = pick;

    for (;;) {
      const int arm = row_len[r] - c - 1;
      const int leg = col_height[c] - r - 1;
      if (arm + leg == 0) break;
      const auto step = static_cast<int>(rng.below(static_cast<std::uint64_t>(arm + leg)));
      if (step < arm) {
        c += step + 1;
      } else {
        r += step - arm + 1;
      }
    }
    values[static_cast<std::size_t>(r) * n + c] = label;
    --row_len[r];
    --col_height[c];
    --remaining;
  }
  return DiscreteTableau(shape, std::move(values));
}

ContinuousTableau couple_to_continuous(const DiscreteTableau& x, Rng& rng) {
  const auto cells = static_cast<std::size_t>(x.shape().cells());
  std::vector<double> z(cells);
  for (double& v : z) v = rng.uniform();
  std::sort(z.begin(), z.end());
  std::vector<double> y(cells);
  const auto labels = x.values();
  for (std::size_t i = 0; i < cells; ++i) {
    const int label = labels[i];
    if (label < 1 || static_cast<std::size_t>(label) > cells) {
      throw StructuralError("coupling needs labels in 1..mn");
    }
    y[i] = z[static_cast<std::size_t>(label) - 1];
  }
  return ContinuousTableau(x.shape(), std::move(y));
}

namespace {

void place(ContinuousTableau& t, int index, const std::vector<double>& values) {
  const auto cells = DiagonalSpec(t.shape(), index).cells();
  for (std::size_t j = 0; j < cells.size(); ++j) t[cells[j]] = values[j];
}

std::vector<double> extract(const ContinuousTableau& t, int index) {
  std::vector<double> out;
  for (const Cell& c : DiagonalSpec(t.shape(), index).cells()) out.push_back(t[c]);
  return out;
}

}  // namespace

ContinuousTableau sample_tableau_diagonal_algorithm(int n, int k, const SamplerConfig& cfg,
                                                    Rng& rng) {
  if (n < 1) throw DomainError("n must be positive");
  if (k < 1 || k > n) {
    throw DomainError("starting diagonal must satisfy 1 <= k <= n, got k=" + std::to_string(k));
  }
  const Shape shape(n, n);
  ContinuousTableau t(shape, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0));

  int stage = 1;
  int index = k;
  try {
    place(t, k, sample_jacobi(JacobiParams{k, double(n - k), double(n - k)}, cfg, rng));

    stage = 2;
    for (index = k - 1; index >= 1; --index) {
      const auto outer = extract(t, index + 1);
      place(t, index,
            sample_interlacing_conditional(outer, InterlaceDirection::kShrink, n, index, cfg,
                                           rng));
    }
    stage = 3;
    for (index = k + 1; index <= n; ++index) {
      const auto outer = extract(t, index - 1);
      place(t, index,
            sample_interlacing_conditional(outer, InterlaceDirection::kGrow, n, index, cfg, rng));
    }
    stage = 4;
    for (index = n + 1; index <= 2 * n - 1; ++index) {
      const auto outer = extract(t, index - 1);
      place(t, index,
            sample_interlacing_conditional(outer, InterlaceDirection::kGrowClamped, n, index,
                                           cfg, rng));
    }
  } catch (const InfeasibleError& e) {
    throw InfeasibleError("stage " + std::to_string(stage) + ", diagonal D_" +
                          std::to_string(index) + ": " + e.what());
  }
  return t;
}

double rejection_tableau_acceptance(const Shape& shape) {
  return to_double(Rational(syt_count(shape), factorial(shape.cells())));
}

ContinuousTableau rejection_uniform_tableau(const Shape& shape, const SamplerConfig& cfg,
                                            Rng& rng) {
  const double acceptance = rejection_tableau_acceptance(shape);
  if (acceptance < cfg.min_acceptance) {
    throw InfeasibleError("rejection sampling of " + shape.to_string() +
                          " has acceptance " + format_number(acceptance) + " < " +
                          format_number(cfg.min_acceptance));
  }
  const int m = shape.rows();
  const int n = shape.cols();
  std::vector<double> y(static_cast<std::size_t>(m) * n);
  for (std::uint64_t attempt = 0; attempt < cfg.rejection_cap; ++attempt) {
    for (double& v : y) v = rng.uniform();
    bool ok = true;
    for (int r = 0; r < m && ok; ++r) {
      for (int c = 0; c < n && ok; ++c) {
        const double v = y[static_cast<std::size_t>(r) * n + c];
        if (c + 1 < n && !(v < y[static_cast<std::size_t>(r) * n + c + 1])) ok = false;
        if (r + 1 < m && !(v < y[static_cast<std::size_t>(r + 1) * n + c])) ok = false;
      }
    }
    if (ok) return ContinuousTableau(shape, y);
  }
  throw InfeasibleError("rejection sampling of " + shape.to_string() +
                        " exceeded its proposal cap");
}

template <typename T>
nlohmann::json sample_record(const Tableau<T>& t, const SeedSpec& seed) {
  nlohmann::json j = to_json(t);
  j["seed"] = seed.seed;
  j["stream"] = seed.stream;
  return j;
}

template nlohmann::json sample_record(const Tableau<int>&, const SeedSpec&);
template nlohmann::json sample_record(const Tableau<double>&, const SeedSpec&);

nlohmann::json sample_record(const DiagonalSample& d, const SeedSpec& seed) {
  nlohmann::json j = to_json(d);
  j["seed"] = seed.seed;
  j["stream"] = seed.stream;
  return j;
}

}  // namespace ytab
