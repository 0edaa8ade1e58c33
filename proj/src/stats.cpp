#include "ytab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

// Boost 1.74's pchip calls isnan unqualified.
using std::isnan;
#include <boost/math/interpolators/pchip.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "ytab/error.hpp"
#include "ytab/numeric.hpp"

namespace ytab {

EmpiricalSample::EmpiricalSample(std::vector<double> values, nlohmann::json metadata)
    : values_(std::move(values)), metadata_(std::move(metadata)) {
  if (values_.empty()) throw DomainError("empty sample");
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("sample contains a non-finite value");
  }
  sorted_ = values_;
  std::sort(sorted_.begin(), sorted_.end());
}

double Ecdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

Ecdf ecdf(const EmpiricalSample& sample) { return Ecdf(sample); }

std::string to_string(ReferenceKind kind) {
  switch (kind) {
    case ReferenceKind::kNormal: return "normal";
    case ReferenceKind::kTracyWidom2: return "tracy-widom-beta2";
    case ReferenceKind::kBeta: return "beta";
    case ReferenceKind::kJacobiK1: return "jacobi-k1";
    case ReferenceKind::kCustomGrid: return "custom-grid";
    case ReferenceKind::kCustom: return "custom";
  }
  return "unknown";
}

ReferenceDistribution ReferenceDistribution::normal(double mean, double sd) {
  if (!(sd > 0.0)) throw DomainError("normal reference needs sd > 0");
  return {ReferenceKind::kNormal, "normal",
          [mean, sd](double x) { return 0.5 * std::erfc(-(x - mean) / (sd * std::sqrt(2.0))); },
          mean, sd};
}

ReferenceDistribution ReferenceDistribution::beta(double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("beta reference needs a, b > 0");
  const double mean = a / (a + b);
  const double sd = std::sqrt(a * b / ((a + b) * (a + b) * (a + b + 1.0)));
  return {ReferenceKind::kBeta, "beta",
          [a, b](double x) {
            if (x <= 0.0) return 0.0;
            if (x >= 1.0) return 1.0;
            return boost::math::ibeta(a, b, x);
          },
          mean, sd};
}

ReferenceDistribution ReferenceDistribution::jacobi_k1(double a, double b) {
  ReferenceDistribution r = beta(a + 1.0, b + 1.0);
  r.kind_ = ReferenceKind::kJacobiK1;
  r.name_ = "jacobi-k1";
  return r;
}

ReferenceDistribution ReferenceDistribution::custom_grid(std::vector<double> nodes,
                                                         std::vector<double> cdf,
                                                         std::string name) {
  return grid(std::move(nodes), std::move(cdf), std::move(name), ReferenceKind::kCustomGrid);
}

ReferenceDistribution ReferenceDistribution::grid(std::vector<double> nodes,
                                                  std::vector<double> cdf, std::string name,
                                                  ReferenceKind kind) {
  if (nodes.size() != cdf.size() || nodes.size() < 4) {
    throw DomainError("custom grid needs at least 4 matching nodes and values");
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i] > nodes[i - 1])) throw DomainError("grid nodes must be increasing");
    if (cdf[i] < cdf[i - 1]) throw DomainError("grid CDF must be nondecreasing");
  }
  // E X = b - int_a^b F and E X^2 = b^2 - int_a^b 2xF, taking F(a)=0, F(b)=1.
  double int_f = 0.0;
  double int_xf = 0.0;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double h = nodes[i] - nodes[i - 1];
    int_f += 0.5 * h * (cdf[i] + cdf[i - 1]);
    int_xf += 0.5 * h * (nodes[i] * cdf[i] + nodes[i - 1] * cdf[i - 1]);
  }
  // Simpson's rule replaces the trapezoid sums on uniform grids with an even
  // number of intervals.
  const bool uniform = [&] {
    const double h = nodes[1] - nodes[0];
    for (std::size_t i = 2; i < nodes.size(); ++i) {
      if (std::abs(nodes[i] - nodes[i - 1] - h) > 1e-9 * std::abs(h)) return false;
    }
    return (nodes.size() - 1) % 2 == 0;
  }();
  if (uniform) {
    const double h = nodes[1] - nodes[0];
    double s_f = 0.0;
    double s_xf = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double w = (i == 0 || i + 1 == nodes.size()) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      s_f += w * cdf[i];
      s_xf += w * nodes[i] * cdf[i];
    }
    int_f = s_f * h / 3.0;
    int_xf = s_xf * h / 3.0;
  }
  const double b = nodes.back();
  const double mean = b - int_f;
  const double second = b * b - 2.0 * int_xf;
  const double sd = std::sqrt(std::max(0.0, second - mean * mean));

  const double lo = nodes.front();
  const double hi = nodes.back();
  const double f_lo = cdf.front();
  const double f_hi = cdf.back();
  auto spline = std::make_shared<boost::math::interpolators::pchip<std::vector<double>>>(
      std::move(nodes), std::move(cdf));
  auto fn = [spline, lo, hi, f_lo, f_hi](double x) {
    if (x <= lo) return x < lo ? 0.0 : f_lo;
    if (x >= hi) return x > hi ? 1.0 : f_hi;
    return std::clamp((*spline)(x), 0.0, 1.0);
  };
  return {kind, std::move(name), fn, mean, sd};
}

ReferenceDistribution ReferenceDistribution::custom(std::function<double(double)> cdf,
                                                    double mean, double sd, std::string name) {
  return {ReferenceKind::kCustom, std::move(name), std::move(cdf), mean, sd};
}

ReferenceDistribution ReferenceDistribution::shifted(double delta) const {
  ReferenceDistribution r = *this;
  r.cdf_ = [inner = cdf_, delta](double x) { return inner(x - delta); };
  r.mean_ = mean_ + delta;
  return r;
}

namespace {
#include "tw_table.inc"
}  // namespace

const TwGrid& tw_grid() {
  static const TwGrid grid = [] {
    TwGrid g;
    const std::size_t count = std::size(kTwCdfTable);
    g.nodes.reserve(count);
    for (std::size_t i = 0; i < count; ++i) g.nodes.push_back(kTwGridLeft + kTwGridStep * i);
    g.cdf.assign(std::begin(kTwCdfTable), std::end(kTwCdfTable));
    return g;
  }();
  return grid;
}

ReferenceDistribution tw_reference() {
  const TwGrid& g = tw_grid();
  return ReferenceDistribution::grid(g.nodes, g.cdf, to_string(ReferenceKind::kTracyWidom2),
                                     ReferenceKind::kTracyWidom2);
}

double ks_statistic(const EmpiricalSample& sample, const ReferenceDistribution& ref) {
  const auto xs = sample.sorted();
  const auto n = static_cast<double>(xs.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < xs.size()) {
    // Ties form one jump of the ECDF.
    std::size_t j = i;
    while (j + 1 < xs.size() && xs[j + 1] == xs[i]) ++j;
    const double f = ref.cdf(xs[i]);
    d = std::max({d, static_cast<double>(j + 1) / n - f, f - static_cast<double>(i) / n});
    i = j + 1;
  }
  return d;
}

double ks_p_value(double statistic, std::size_t n) {
  const double rn = std::sqrt(static_cast<double>(n));
  const double lambda = (rn + 0.12 + 0.11 / rn) * statistic;
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 ? 1.0 : -1.0) * term;
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

Moments moments(std::span<const double> values) {
  const std::size_t size = values.size();
  if (size < 4) throw DomainError("moments need at least 4 values");
  const double n = static_cast<double>(size);
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  for (double v : values) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  if (!(m2 > 0.0)) throw DomainError("constant sample: skewness and kurtosis are undefined");
  Moments m;
  m.mean = mean;
  m.sd = std::sqrt(m2 * n / (n - 1.0));
  m.skewness = m3 / std::pow(m2, 1.5);
  m.excess_kurtosis = m4 / (m2 * m2) - 3.0;
  return m;
}

nlohmann::json to_json(const StatReport& r) {
  nlohmann::json j;
  j["sample_size"] = r.sample_size;
  if (r.moments) {
    j["moments"] = {{"mean", r.moments->mean},
                    {"sd", r.moments->sd},
                    {"skewness", r.moments->skewness},
                    {"excess_kurtosis", r.moments->excess_kurtosis}};
  }
  if (r.ks) {
    j["ks"] = {{"reference", r.ks->reference},
               {"statistic", r.ks->statistic},
               {"p_value", r.ks->p_value}};
  }
  if (r.chi_square) {
    j["chi_square"] = {{"statistic", r.chi_square->statistic},
                       {"dof", r.chi_square->dof},
                       {"p_value", r.chi_square->p_value}};
  }
  return j;
}

StatReport stat_report_from_json(const nlohmann::json& j) {
  StatReport r;
  r.sample_size = j.at("sample_size").get<std::size_t>();
  if (j.contains("moments")) {
    const auto& m = j.at("moments");
    r.moments = Moments{m.at("mean").get<double>(), m.at("sd").get<double>(),
                        m.at("skewness").get<double>(), m.at("excess_kurtosis").get<double>()};
  }
  if (j.contains("ks")) {
    const auto& k = j.at("ks");
    r.ks = KsResult{k.at("reference").get<std::string>(), k.at("statistic").get<double>(),
                    k.at("p_value").get<double>()};
  }
  if (j.contains("chi_square")) {
    const auto& c = j.at("chi_square");
    r.chi_square = ChiSquareResult{c.at("statistic").get<double>(), c.at("dof").get<int>(),
                                   c.at("p_value").get<double>()};
  }
  return r;
}

StatReport ks_test(const EmpiricalSample& sample, const ReferenceDistribution& ref) {
  StatReport r;
  r.sample_size = sample.size();
  const double d = ks_statistic(sample, ref);
  r.ks = KsResult{ref.name(), d, ks_p_value(d, sample.size())};
  try {
    r.moments = moments(sample.values());
  } catch (const DomainError&) {
    // Degenerate samples still get a KS verdict.
  }
  return r;
}

StatReport chi_square_test(std::span<const std::uint64_t> counts,
                           std::span<const double> probabilities) {
  if (counts.size() != probabilities.size() || counts.size() < 2) {
    throw DomainError("chi-square needs at least two categories with matching probabilities");
  }
  const double mass = std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
  if (std::abs(mass - 1.0) > 1e-9) {
    throw DomainError("chi-square cell probabilities sum to " + format_number(mass) + ", not 1");
  }
  const double total =
      static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
  double stat = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = total * probabilities[i];
    if (expected < 5.0) {
      throw DomainError("category " + std::to_string(i) + " expects " +
                        std::to_string(expected) + " < 5 observations");
    }
    const double diff = static_cast<double>(counts[i]) - expected;
    stat += diff * diff / expected;
  }
  StatReport r;
  r.sample_size = static_cast<std::size_t>(total);
  const int dof = static_cast<int>(counts.size()) - 1;
  r.chi_square = ChiSquareResult{stat, dof, boost::math::gamma_q(0.5 * dof, 0.5 * stat)};
  return r;
}

StatReport chi_square_uniformity(std::span<const std::uint64_t> counts) {
  const std::vector<double> p(counts.size(), 1.0 / static_cast<double>(counts.size()));
  return chi_square_test(counts, p);
}

void write_histogram_csv(std::ostream& os, const EmpiricalSample& sample, int bins,
                         std::optional<std::pair<double, double>> range) {
  if (bins < 1) throw DomainError("histogram needs at least one bin");
  const auto xs = sample.sorted();
  double lo = range ? range->first : xs.front();
  double hi = range ? range->second : xs.back();
  if (!(hi > lo)) hi = lo + 1.0;
  const double width = (hi - lo) / bins;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(bins), 0);
  for (double x : xs) {
    if (x < lo || x > hi) continue;
    auto b = static_cast<int>((x - lo) / width);
    counts[static_cast<std::size_t>(std::min(b, bins - 1))]++;
  }
  const auto n = static_cast<double>(xs.size());
  os << "bin_left,bin_right,count,density\n";
  os.precision(17);
  for (int b = 0; b < bins; ++b) {
    const double left = lo + width * b;
    const double right = b + 1 == bins ? hi : lo + width * (b + 1);
    os << left << ',' << right << ',' << counts[b] << ','
       << static_cast<double>(counts[b]) / (n * width) << '\n';
  }
}

}  // namespace ytab
