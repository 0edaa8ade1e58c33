#include <doctest.h>

#include <cmath>
#include <sstream>

#include <Eigen/Dense>
#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/erf.hpp>

#include "ytab/error.hpp"
#include "ytab/numeric.hpp"
#include "ytab/rng.hpp"
#include "ytab/stats.hpp"

using namespace ytab;

namespace {

// det(I - K_Airy) on L^2(s, s + 14), 90 Gauss–Legendre nodes. Node count and
// cutoff differ from the embedded table's generator on purpose.
double tw2_fredholm(double s) {
  const GaussRule g = gauss_legendre(90);
  const int q = static_cast<int>(g.nodes.size());
  const double len = 14.0;
  std::vector<double> x(q);
  std::vector<double> w(q);
  std::vector<double> ai(q);
  std::vector<double> aip(q);
  for (int i = 0; i < q; ++i) {
    x[i] = s + 0.5 * len * (g.nodes[i] + 1);
    w[i] = 0.5 * len * g.weights[i];
    ai[i] = boost::math::airy_ai(x[i]);
    aip[i] = boost::math::airy_ai_prime(x[i]);
  }
  Eigen::MatrixXd m(q, q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      const double k = i == j ? aip[i] * aip[i] - x[i] * ai[i] * ai[i]
                              : (ai[i] * aip[j] - aip[i] * ai[j]) / (x[i] - x[j]);
      m(i, j) = (i == j ? 1.0 : 0.0) - std::sqrt(w[i] * w[j]) * k;
    }
  }
  return m.partialPivLu().determinant();
}

}  // namespace

TEST_SUITE("stats") {

TEST_CASE("empirical samples") {
  CHECK_THROWS_AS(EmpiricalSample({}), DomainError);
  CHECK_THROWS_AS(EmpiricalSample({1.0, NAN}), DomainError);
  const EmpiricalSample s({3.0, 1.0, 2.0, 2.0});
  CHECK(s.values()[0] == 3.0);
  CHECK(s.sorted()[0] == 1.0);
  const Ecdf f(s);
  CHECK(f(0.5) == 0.0);
  CHECK(f(2.0) == 0.75);
  CHECK(f(3.0) == 1.0);
}

TEST_CASE("KS statistic") {
  // One point at the median: D = 1/2 exactly.
  CHECK(ks_statistic(EmpiricalSample({0.0}), ReferenceDistribution::normal()) ==
        doctest::Approx(0.5));
  // A constant sample against a continuous law is at least 1/2 away.
  CHECK(ks_statistic(EmpiricalSample(std::vector<double>(50, 0.3)),
                     ReferenceDistribution::beta(1, 1)) >= 0.5);
  // Brute force against the definition on a small sample.
  const std::vector<double> v{0.1, 0.35, 0.4, 0.8, 0.95};
  double brute = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    brute = std::max({brute, (i + 1.0) / 5 - v[i], v[i] - i / 5.0});
  }
  CHECK(ks_statistic(EmpiricalSample(v), ReferenceDistribution::beta(1, 1)) ==
        doctest::Approx(brute));

  // Invariance under a monotone map applied to both sample and law.
  Rng rng({41, 0});
  std::vector<double> u;
  std::vector<double> z;
  for (int i = 0; i < 500; ++i) {
    u.push_back(rng.uniform());
    z.push_back(std::sqrt(2.0) * boost::math::erf_inv(2 * u.back() - 1));
  }
  CHECK(ks_statistic(EmpiricalSample(u), ReferenceDistribution::beta(1, 1)) ==
        doctest::Approx(ks_statistic(EmpiricalSample(z), ReferenceDistribution::normal()))
            .epsilon(1e-9));

  // Under the null the p-value is roughly uniform: about 5% below 0.05.
  int low = 0;
  for (int rep = 0; rep < 400; ++rep) {
    std::vector<double> x;
    for (int i = 0; i < 200; ++i) x.push_back(rng.normal());
    low += ks_test(EmpiricalSample(x), ReferenceDistribution::normal()).ks->p_value < 0.05;
  }
  CHECK(low >= 5);
  CHECK(low <= 40);
  CHECK(ks_p_value(0.0, 100) == doctest::Approx(1.0));
  CHECK(ks_p_value(0.5, 100) < 1e-15);
}

TEST_CASE("chi-square") {
  const std::vector<std::uint64_t> equal(10, 100);
  const auto r = chi_square_uniformity(equal);
  CHECK(r.chi_square->statistic == 0.0);
  CHECK(r.chi_square->dof == 9);
  CHECK(r.chi_square->p_value == doctest::Approx(1.0));
  std::vector<std::uint64_t> skewed(10, 100);
  skewed[3] = 0;
  CHECK(chi_square_uniformity(skewed).chi_square->p_value < 1e-10);
  CHECK_THROWS_AS(chi_square_uniformity(std::vector<std::uint64_t>{1, 2, 1}), DomainError);
  // dof = 1: a statistic of 4 has p = 0.0455.
  const std::vector<double> p{0.5, 0.5};
  const std::vector<std::uint64_t> two{60, 40};
  const auto t = chi_square_test(two, p);
  CHECK(t.chi_square->statistic == doctest::Approx(4.0));
  CHECK(t.chi_square->p_value == doctest::Approx(0.0455003).epsilon(1e-5));
  const std::vector<double> bad{0.5, 0.6};
  CHECK_THROWS_AS(chi_square_test(two, bad), DomainError);
}

TEST_CASE("moments") {
  CHECK_THROWS_AS(moments(std::vector<double>{1, 2, 3}), DomainError);
  CHECK_THROWS_AS(moments(std::vector<double>(10, 2.0)), DomainError);
  const auto m = moments(std::vector<double>{-2, -1, 0, 1, 2});
  CHECK(m.mean == doctest::Approx(0.0));
  CHECK(m.sd == doctest::Approx(std::sqrt(2.5)));
  CHECK(m.skewness == doctest::Approx(0.0));
  CHECK(m.excess_kurtosis == doctest::Approx(1.7 - 3.0));
  Rng rng({42, 0});
  std::vector<double> g;
  for (int i = 0; i < 100000; ++i) g.push_back(1.0 + 2.0 * rng.normal());
  const auto mg = moments(g);
  CHECK(std::abs(mg.mean - 1.0) < 0.03);
  CHECK(std::abs(mg.sd - 2.0) < 0.03);
  CHECK(std::abs(mg.skewness) < 0.03);
  CHECK(std::abs(mg.excess_kurtosis) < 0.06);
}

TEST_CASE("reference distributions") {
  const auto b = ReferenceDistribution::beta(2, 3);
  CHECK(b.mean() == doctest::Approx(0.4));
  CHECK(b.sd() == doctest::Approx(std::sqrt(0.04)));
  CHECK(b.cdf(0.5) == doctest::Approx(11.0 / 16.0));
  const auto j = ReferenceDistribution::jacobi_k1(1, 2);
  CHECK(j.cdf(0.3) == doctest::Approx(b.cdf(0.3)));
  CHECK(j.kind() == ReferenceKind::kJacobiK1);
  const auto sh = ReferenceDistribution::normal().shifted(2.0);
  CHECK(sh.cdf(2.0) == doctest::Approx(0.5));
  CHECK(sh.mean() == doctest::Approx(2.0));
  // A uniform law from a grid: linear CDF is reproduced and the moments come
  // out of the grid.
  std::vector<double> nodes;
  std::vector<double> cdf;
  for (int i = 0; i <= 20; ++i) {
    nodes.push_back(i / 20.0);
    cdf.push_back(i / 20.0);
  }
  const auto g = ReferenceDistribution::custom_grid(nodes, cdf);
  CHECK(g.cdf(0.333) == doctest::Approx(0.333));
  CHECK(g.cdf(-1.0) == 0.0);
  CHECK(g.cdf(2.0) == 1.0);
  CHECK(g.mean() == doctest::Approx(0.5));
  CHECK(g.sd() == doctest::Approx(std::sqrt(1.0 / 12)).epsilon(1e-6));
}

TEST_CASE("Tracy–Widom table") {
  const auto tw = tw_reference();
  CHECK(tw.kind() == ReferenceKind::kTracyWidom2);
  CHECK(tw.cdf(-10.0) < 1e-8);
  CHECK(tw.cdf(6.0) > 1 - 1e-8);
  CHECK(tw.mean() == doctest::Approx(kTracyWidom2Mean).epsilon(1e-3));
  CHECK(tw.sd() == doctest::Approx(std::sqrt(kTracyWidom2Variance)).epsilon(1e-3));
  const auto& grid = tw_grid();
  CHECK(grid.nodes.size() == grid.cdf.size());
  for (std::size_t i = 1; i < grid.cdf.size(); ++i) CHECK(grid.cdf[i] >= grid.cdf[i - 1]);
  for (double s : {-5.0, -3.5, -1.77, -0.5, 1.0, 3.0}) {
    INFO("s=", s);
    CHECK(std::abs(tw.cdf(s) - tw2_fredholm(s)) < 1e-8);
  }
  // Between nodes the interpolant tracks the determinant too.
  CHECK(std::abs(tw.cdf(-2.0049) - tw2_fredholm(-2.0049)) < 1e-6);

  // Refinement: every other node, re-interpolated at the skipped nodes.
  std::vector<double> coarse_x;
  std::vector<double> coarse_f;
  for (std::size_t i = 0; i < grid.nodes.size(); i += 2) {
    coarse_x.push_back(grid.nodes[i]);
    coarse_f.push_back(grid.cdf[i]);
  }
  const auto coarse = ReferenceDistribution::custom_grid(coarse_x, coarse_f);
  double worst = 0.0;
  for (std::size_t i = 1; i < grid.nodes.size(); i += 2) {
    worst = std::max(worst, std::abs(coarse.cdf(grid.nodes[i]) - grid.cdf[i]));
  }
  CHECK(worst < 1e-4);
}

TEST_CASE("reports and histograms") {
  Rng rng({43, 0});
  std::vector<double> x;
  for (int i = 0; i < 1000; ++i) x.push_back(rng.normal());
  const auto r = ks_test(EmpiricalSample(x), ReferenceDistribution::normal());
  CHECK(r.sample_size == 1000);
  REQUIRE(r.moments.has_value());
  CHECK(stat_report_from_json(to_json(r)) == r);
  CHECK(to_json(r)["ks"]["reference"] == "normal");

  std::ostringstream os;
  write_histogram_csv(os, EmpiricalSample(x), 10, std::pair{-5.0, 5.0});
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "bin_left,bin_right,count,density");
  int rows = 0;
  std::uint64_t total = 0;
  double mass = 0.0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream ls(line);
    std::string a;
    std::string b;
    std::string c;
    std::string d;
    std::getline(ls, a, ',');
    std::getline(ls, b, ',');
    std::getline(ls, c, ',');
    std::getline(ls, d, ',');
    total += std::stoull(c);
    mass += std::stod(d) * (std::stod(b) - std::stod(a));
  }
  CHECK(rows == 10);
  CHECK(total == 1000);
  CHECK(mass == doctest::Approx(1.0));
}

}  // TEST_SUITE
