// Regenerates src/tw_table.inc: the beta = 2 Tracy–Widom CDF
// F2(s) = det(I - K_Airy) on L^2(s, inf), evaluated with a Gauss–Legendre
// Nystrom discretisation of the Fredholm determinant.
//
//   ytab_gen_tw_table [nodes] > src/tw_table.inc

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/special_functions/airy.hpp>

#include "ytab/numeric.hpp"

namespace {

constexpr double kLeft = -10.0;
constexpr double kRight = 6.0;
constexpr double kStep = 0.01;
// Ai(x)^2 is below 1e-20 past this point.
constexpr double kCutoff = 16.0;

double tw2_cdf(double s, const ytab::GaussRule& rule) {
  const std::size_t p = rule.nodes.size();
  const double half = 0.5 * (kCutoff - s);
  std::vector<double> x(p), w(p), ai(p), aip(p);
  for (std::size_t i = 0; i < p; ++i) {
    x[i] = s + half * (rule.nodes[i] + 1.0);
    w[i] = half * rule.weights[i];
    ai[i] = boost::math::airy_ai(x[i]);
    aip[i] = boost::math::airy_ai_prime(x[i]);
  }
  Eigen::MatrixXd a(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      double k;
      if (i == j) {
        k = aip[i] * aip[i] - x[i] * ai[i] * ai[i];
      } else {
        k = (ai[i] * aip[j] - aip[i] * ai[j]) / (x[i] - x[j]);
      }
      a(i, j) = (i == j ? 1.0 : 0.0) - std::sqrt(w[i]) * k * std::sqrt(w[j]);
    }
  }
  return a.partialPivLu().determinant();
}

}  // namespace

int main(int argc, char** argv) {
  const int nodes = argc > 1 ? std::atoi(argv[1]) : 160;
  const ytab::GaussRule rule = ytab::gauss_legendre(nodes);
  const int count = static_cast<int>(std::lround((kRight - kLeft) / kStep)) + 1;

  std::vector<double> cdf(count);
  double running = 0.0;
  for (int i = 0; i < count; ++i) {
    double v = tw2_cdf(kLeft + kStep * i, rule);
    v = std::fmin(1.0, std::fmax(0.0, v));
    // Rounding noise far in the left tail must not break monotonicity.
    running = std::fmax(running, v);
    cdf[i] = running;
  }

  std::printf("// Generated by ytab_gen_tw_table with %d Gauss–Legendre nodes.\n", nodes);
  std::printf("// beta = 2 Tracy–Widom CDF on s = %.2f + %.2f * i, i = 0..%d.\n", kLeft, kStep,
              count - 1);
  std::printf("inline constexpr double kTwGridLeft = %.17g;\n", kLeft);
  std::printf("inline constexpr double kTwGridStep = %.17g;\n", kStep);
  std::printf("inline constexpr double kTwCdfTable[%d] = {\n", count);
  for (int i = 0; i < count; ++i) {
    std::printf("    %.17g,\n", cdf[i]);
  }
  std::printf("};\n");
  return 0;
}
