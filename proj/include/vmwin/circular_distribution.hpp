#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>

#include "vmwin/special_functions.hpp"

namespace vmwin {

/// Wraps an angle into [-pi, pi] via x - 2 pi round(x / 2 pi).
inline double wrap_angle(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return x - two_pi * std::nearbyint(x / two_pi);
}

struct VonMisesParams {
  double mu = 0.0;     // mean direction, radians
  double kappa = 0.0;  // concentration

  void validate() const {
    if (!std::isfinite(mu)) throw std::domain_error("mu must be finite");
    if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw std::domain_error("kappa must be >= 0");
  }
};

/// Circular normal density e^{k cos(x - mu)} / (2 pi I0(k)) on [-pi, pi].
/// Arguments outside [-pi, pi] are wrapped, giving the periodic extension.
inline double vm_pdf(double x, const VonMisesParams& p) {
  p.validate();
  if (!std::isfinite(x)) throw std::domain_error("vm_pdf: x must be finite");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double d = wrap_angle(wrap_angle(x) - wrap_angle(p.mu));
  // e^{k(cos d - 1)} / (2 pi e^{-k} I0(k)) stays finite for large k.
  const double scaled_i0 = bessel_i0_scaled(p.kappa);
  return std::exp(p.kappa * (std::cos(d) - 1.0)) / (two_pi * scaled_i0);
}

/// Circular variance 1 - I1(k) / I0(k).
inline double vm_circular_variance(const VonMisesParams& p) {
  p.validate();
  if (p.kappa == 0.0) return 1.0;
  if (p.kappa > detail::kBesselI0AsymptoticSwitch)
    return 1.0 - detail::bessel_i_large_argument_scaled(1.0, p.kappa) /
                     detail::bessel_i_large_argument_scaled(0.0, p.kappa);
  return 1.0 - bessel_i_nu(1.0, p.kappa) / bessel_i0(p.kappa);
}

/// Maximum over the grid of |f(x | 0, k) - N(0, 1/k)(x)|, divided by the
/// Gaussian peak 1/sqrt(2 pi / k). Measures the large-concentration limit.
inline double vm_gaussian_limit_error(double kappa, std::span<const double> grid) {
  if (!(kappa > 0.0) || !std::isfinite(kappa))
    throw std::domain_error("vm_gaussian_limit_error: kappa must be > 0");
  if (grid.empty()) throw std::invalid_argument("vm_gaussian_limit_error: empty grid");
  const double peak = std::sqrt(kappa / (2.0 * std::numbers::pi));
  const VonMisesParams p{0.0, kappa};
  double worst = 0.0;
  for (double x : grid) {
    const double gaussian = peak * std::exp(-0.5 * kappa * x * x);
    worst = std::max(worst, std::abs(vm_pdf(x, p) - gaussian));
  }
  return worst / peak;
}

/// Maximum over the grid of |f(x | 0, k) * 2 pi - 1|: relative distance from
/// the uniform density 1 / (2 pi), the small-concentration limit.
inline double vm_uniform_limit_error(double kappa, std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("vm_uniform_limit_error: empty grid");
  const VonMisesParams p{0.0, kappa};
  double worst = 0.0;
  for (double x : grid) worst = std::max(worst, std::abs(vm_pdf(x, p) * 2.0 * std::numbers::pi - 1.0));
  return worst;
}

}  // namespace vmwin
