#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace ytab {

/// Published moments of the beta = 2 Tracy–Widom law.
inline constexpr double kTracyWidom2Mean = -1.7710868074116;
inline constexpr double kTracyWidom2Variance = 0.8131947928329;

/// A sealed sample: values in draw order plus a sorted copy.
class EmpiricalSample {
 public:
  /// Throws DomainError when empty or non-finite.
  explicit EmpiricalSample(std::vector<double> values, nlohmann::json metadata = {});

  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  std::span<const double> sorted() const { return sorted_; }
  const nlohmann::json& metadata() const { return metadata_; }

 private:
  std::vector<double> values_;
  std::vector<double> sorted_;
  nlohmann::json metadata_;
};

/// Right-continuous empirical CDF.
class Ecdf {
 public:
  explicit Ecdf(const EmpiricalSample& sample) : sorted_(sample.sorted()) {}
  double operator()(double x) const;

 private:
  std::span<const double> sorted_;
};
Ecdf ecdf(const EmpiricalSample& sample);

enum class ReferenceKind { kNormal, kTracyWidom2, kBeta, kJacobiK1, kCustomGrid, kCustom };
std::string to_string(ReferenceKind kind);

/// A continuous law given by its CDF, with its mean and SD.
class ReferenceDistribution {
 public:
  static ReferenceDistribution normal(double mean = 0.0, double sd = 1.0);
  static ReferenceDistribution beta(double a, double b);
  /// One-point Jacobi ensemble with weight x^a (1-x)^b, i.e. Beta(a+1, b+1).
  static ReferenceDistribution jacobi_k1(double a, double b);
  /// Monotone piecewise-cubic (PCHIP) interpolation of CDF values on
  /// ascending nodes; 0 below and 1 above the grid. Mean and SD come from the
  /// grid by Simpson-type integration of the CDF.
  static ReferenceDistribution custom_grid(std::vector<double> nodes, std::vector<double> cdf,
                                           std::string name = "custom-grid");
  /// Any CDF supplied as a function together with its summary constants.
  static ReferenceDistribution custom(std::function<double(double)> cdf, double mean, double sd,
                                      std::string name);

  double cdf(double x) const { return cdf_(x); }
  double mean() const { return mean_; }
  double sd() const { return sd_; }
  ReferenceKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  /// Law of X + delta.
  ReferenceDistribution shifted(double delta) const;

 private:
  friend ReferenceDistribution tw_reference();
  static ReferenceDistribution grid(std::vector<double> nodes, std::vector<double> cdf,
                                    std::string name, ReferenceKind kind);
  ReferenceDistribution(ReferenceKind kind, std::string name, std::function<double(double)> cdf,
                        double mean, double sd)
      : kind_(kind), name_(std::move(name)), cdf_(std::move(cdf)), mean_(mean), sd_(sd) {}

  ReferenceKind kind_;
  std::string name_;
  std::function<double(double)> cdf_;
  double mean_;
  double sd_;
};

/// Embedded beta = 2 Tracy–Widom CDF grid on [-10, 6].
struct TwGrid {
  std::vector<double> nodes;
  std::vector<double> cdf;
};
const TwGrid& tw_grid();
/// PCHIP interpolation of tw_grid(); mean and SD are the grid's own moments.
ReferenceDistribution tw_reference();

double ks_statistic(const EmpiricalSample& sample, const ReferenceDistribution& ref);
/// Asymptotic Kolmogorov tail Q(lambda) = 2 sum_k (-1)^{k-1} exp(-2 k^2 lambda^2)
/// at lambda = (sqrt(n) + 0.12 + 0.11/sqrt(n)) D.
double ks_p_value(double statistic, std::size_t n);

struct Moments {
  double mean = 0.0;
  double sd = 0.0;        // sqrt of the unbiased variance
  double skewness = 0.0;  // m3 / m2^{3/2}, central moments with divisor n
  double excess_kurtosis = 0.0;  // m4 / m2^2 - 3
  bool operator==(const Moments&) const = default;
};
/// Needs at least 4 values and a nonzero spread; throws DomainError otherwise.
Moments moments(std::span<const double> values);

struct KsResult {
  std::string reference;
  double statistic = 0.0;
  double p_value = 0.0;
  bool operator==(const KsResult&) const = default;
};

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 0.0;
  bool operator==(const ChiSquareResult&) const = default;
};

struct StatReport {
  std::size_t sample_size = 0;
  std::optional<Moments> moments;
  std::optional<KsResult> ks;
  std::optional<ChiSquareResult> chi_square;
  bool operator==(const StatReport&) const = default;
};
nlohmann::json to_json(const StatReport& r);
StatReport stat_report_from_json(const nlohmann::json& j);

/// KS statistic and p-value, plus moments when the sample admits them.
StatReport ks_test(const EmpiricalSample& sample, const ReferenceDistribution& ref);

/// Pearson statistic against equal cell probabilities, dof = cells - 1.
/// Throws DomainError when some expected count is below 5.
StatReport chi_square_uniformity(std::span<const std::uint64_t> counts);
/// Same against arbitrary cell probabilities (summing to 1).
StatReport chi_square_test(std::span<const std::uint64_t> counts,
                           std::span<const double> probabilities);

/// bin_left,bin_right,count,density over `bins` equal bins spanning the
/// sample range (or [lo, hi] when given).
void write_histogram_csv(std::ostream& os, const EmpiricalSample& sample, int bins,
                         std::optional<std::pair<double, double>> range = std::nullopt);

}  // namespace ytab
