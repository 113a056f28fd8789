#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "vmwin/quadrature.hpp"

using vmwin::quadrature::integrate;
using vmwin::quadrature::Options;
constexpr double pi = std::numbers::pi;

TEST(Quadrature, Polynomials) {
  // degree 22 is beyond a single Kronrod panel
  auto r = integrate([](double x) { return std::pow(x, 22); }, 0.0, 1.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 1.0 / 23.0, 1e-14);
  EXPECT_NEAR(integrate([](double x) { return 3 * x * x; }, -1.0, 2.0).value, 9.0, 1e-13);
}

TEST(Quadrature, Oscillatory) {
  auto r = integrate([](double x) { return std::cos(40.0 * x); }, 0.0, pi / 3.0);
  EXPECT_NEAR(r.value, std::sin(40.0 * pi / 3.0) / 40.0, 1e-11);
}

TEST(Quadrature, ComplexValued) {
  const double w = 3.7;
  auto r = integrate([&](double t) { return std::polar(1.0, -w * t); }, -1.0, 1.0);
  EXPECT_NEAR(r.value.real(), 2.0 * std::sin(w) / w, 1e-12);
  EXPECT_NEAR(r.value.imag(), 0.0, 1e-12);
}

TEST(Quadrature, PeakedIntegrand) {
  // narrow Gaussian forces refinement
  auto r = integrate([](double x) { return std::exp(-1e4 * x * x); }, -1.0, 1.0);
  EXPECT_NEAR(r.value, std::sqrt(pi / 1e4), 1e-11);
  EXPECT_GT(r.intervals, 1u);
}

TEST(Quadrature, Degenerate) {
  auto r = integrate([](double) { return 1.0; }, 2.0, 2.0);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_NEAR(integrate([](double) { return 1.0; }, 1.0, 0.0).value, -1.0, 1e-15);
}

TEST(Quadrature, InitialPiecesDeterministic) {
  auto f = [](double x) { return std::sin(25.0 * x) * std::exp(-x); };
  Options a;
  a.initial_pieces = 8;
  const auto r1 = integrate(f, 0.0, 3.0, a);
  const auto r2 = integrate(f, 0.0, 3.0, a);
  EXPECT_EQ(r1.value, r2.value);
  const double want = (25.0 - std::exp(-3.0) * (std::sin(75.0) + 25.0 * std::cos(75.0))) / 626.0;
  EXPECT_NEAR(r1.value, want, 1e-11);
}

TEST(Quadrature, NonFiniteLimitsRejected) {
  EXPECT_THROW(integrate([](double) { return 1.0; }, 0.0, INFINITY), std::invalid_argument);
}
