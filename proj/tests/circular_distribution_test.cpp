#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vmwin/circular_distribution.hpp"
#include "vmwin/quadrature.hpp"

using namespace vmwin;
constexpr double pi = std::numbers::pi;

TEST(WrapAngle, IntoPrincipalRange) {
  EXPECT_NEAR(wrap_angle(3.0 * pi / 2.0), -pi / 2.0, 1e-15);
  EXPECT_NEAR(wrap_angle(-7.0), -7.0 + 2.0 * pi, 1e-15);
  EXPECT_EQ(wrap_angle(0.5), 0.5);
}

TEST(VmPdf, UniformAtZeroConcentration) {
  for (double x : oracle::linspace(-pi, pi, 37)) EXPECT_DOUBLE_EQ(vm_pdf(x, {0.0, 0.0}), 1.0 / (2.0 * pi));
}

TEST(VmPdf, ModeValue) {
  const double want = 0.6549576589748776729;
  EXPECT_NEAR(vm_pdf(1.2, {1.2, 3.0}), want, 1e-15);
  EXPECT_NEAR(std::exp(3.0) / (2.0 * pi * bessel_i0(3.0)), want, 1e-15);
}

TEST(VmPdf, Normalised) {
  vmwin::quadrature::Options opt;
  opt.abs_tol = 1e-13;
  opt.rel_tol = 1e-13;
  for (double k : {0.0, 0.5, 1.0, 5.0, 20.0, 300.0}) {
    const VonMisesParams p{0.0, k};
    const auto r = vmwin::quadrature::integrate([&](double x) { return vm_pdf(x, p); }, -pi, pi, opt);
    EXPECT_NEAR(r.value, 1.0, 1e-10) << k;
  }
}

TEST(VmPdf, SymmetricAboutMean) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-pi, pi);
  for (int i = 0; i < 300; ++i) {
    const VonMisesParams p{u(rng), 4.0};
    const double d = u(rng);
    EXPECT_NEAR(vm_pdf(p.mu + d, p), vm_pdf(p.mu - d, p), 1e-13);
  }
}

TEST(VmPdf, ModeIsMaximum) {
  const VonMisesParams p{-2.5, 2.0};
  const double mode = vm_pdf(p.mu, p);
  for (double x : oracle::linspace(-pi, pi, 1001)) EXPECT_LE(vm_pdf(x, p), mode);
}

TEST(VmPdf, PeakGrowsWithConcentration) {
  double prev = 0.0;
  for (double k = 0.0; k <= 50.0; k += 0.5) {
    const double peak = vm_pdf(0.0, {0.0, k});
    EXPECT_GE(peak, prev) << k;
    prev = peak;
  }
}

TEST(VmPdf, LargeConcentrationFinite) {
  const double v = vm_pdf(0.0, {0.0, 2000.0});
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_NEAR(v, std::sqrt(2000.0 / (2.0 * pi)), 0.01);
}

TEST(VmPdf, Errors) {
  EXPECT_THROW(vm_pdf(0.0, {0.0, -1.0}), std::domain_error);
  EXPECT_THROW(vm_pdf(NAN, {0.0, 1.0}), std::domain_error);
}

TEST(CircularVariance, Values) {
  EXPECT_EQ(vm_circular_variance({0.0, 0.0}), 1.0);
  EXPECT_NEAR(vm_circular_variance({0.0, 1.0}), 0.55361003410346549295, 1e-14);
  const double v100 = vm_circular_variance({0.0, 100.0});
  EXPECT_NEAR(v100, 0.0050126269948312344126, 1e-15);
  EXPECT_LT(v100, 0.006);
  EXPECT_THROW(vm_circular_variance({0.0, -0.1}), std::domain_error);
}

TEST(CircularVariance, DecreasingAndInUnitInterval) {
  double prev = 1.0;
  for (double k = 0.25; k <= 80.0; k += 0.25) {
    const double v = vm_circular_variance({0.0, k});
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, prev) << k;
    prev = v;
  }
}

TEST(GaussianLimit, Examples) {
  const auto grid = [](double k) { return oracle::linspace(-3.0 / std::sqrt(k), 3.0 / std::sqrt(k), 201); };
  const double e100 = vm_gaussian_limit_error(100.0, grid(100.0));
  const double e1000 = vm_gaussian_limit_error(1000.0, grid(1000.0));
  EXPECT_LT(e100, 0.01);
  EXPECT_LT(e1000, 0.001);
  EXPECT_LT(e1000, e100);
}

TEST(GaussianLimit, MatchesDirectEvaluation) {
  const double k = 100.0;
  const auto grid = oracle::linspace(-0.3, 0.3, 201);
  double worst = 0.0;
  for (double x : grid) {
    const double f = std::exp(k * std::cos(x)) / (2.0 * pi * static_cast<double>(oracle::bessel_i(0.0L, k)));
    worst = std::max(worst, std::abs(f - oracle::gaussian(x, 1.0 / k)));
  }
  EXPECT_NEAR(vm_gaussian_limit_error(k, grid), worst / oracle::gaussian(0.0, 1.0 / k), 1e-12);
}

TEST(GaussianLimit, Errors) {
  std::vector<double> empty;
  const double one[] = {0.0};
  EXPECT_THROW(vm_gaussian_limit_error(1.0, empty), std::invalid_argument);
  EXPECT_THROW(vm_gaussian_limit_error(0.0, one), std::domain_error);
}

TEST(UniformLimit, DeviationIsPeakExcess) {
  // worst point is x = 0 where f * 2 pi = e^k / I0(k)
  const auto grid = oracle::linspace(-pi, pi, 2001);
  for (double k : {1e-4, 1e-3, 1e-2}) {
    const double want = std::exp(k) / static_cast<double>(oracle::bessel_i(0.0L, k)) - 1.0;
    EXPECT_NEAR(vm_uniform_limit_error(k, grid), want, 1e-13) << k;
  }
  EXPECT_LT(vm_uniform_limit_error(1e-4, grid), 1e-3);
  EXPECT_EQ(vm_uniform_limit_error(0.0, grid), 0.0);
}
