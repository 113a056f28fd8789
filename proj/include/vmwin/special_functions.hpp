#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "vmwin/quadrature.hpp"

namespace vmwin {

/// Sample function sin(x)/x, with Sa(0) = 1.
inline double sa(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(x) / x;
}

namespace detail {

inline constexpr int kBesselMaxTerms = 500;
inline constexpr double kBesselSeriesEps = 1e-16;
// Above this argument I0 switches from the ascending series to the
// large-argument expansion.
inline constexpr double kBesselI0AsymptoticSwitch = 30.0;

inline bool is_integer(double v) { return std::floor(v) == v; }

inline double check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::overflow_error(what);
  return v;
}

// sum_k (z/2)^(2k+nu) / (k! Gamma(k+nu+1)); every term is positive, so the
// sum is well conditioned wherever it does not overflow.
inline double bessel_i_ascending(double nu, double z) {
  const double half = 0.5 * z;
  const double q = half * half;
  double term;
  if (is_integer(nu) && nu <= 170.0) {
    term = 1.0;
    for (int i = 1; i <= static_cast<int>(nu); ++i) term *= half / i;
  } else {
    term = std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
  }
  double sum = term;
  for (int k = 1; k < kBesselMaxTerms; ++k) {
    term *= q / (k * (k + nu));
    sum += term;
    if (term < kBesselSeriesEps * sum) break;
  }
  return sum;
}

// e^{-z} I_nu(z) ~ sum_k (-1)^k a_k(nu) / z^k / sqrt(2 pi z), summed until
// the terms stop decreasing.
inline double bessel_i_large_argument_scaled(double nu, double z) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < kBesselMaxTerms; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -term * (mu - odd * odd) / (8.0 * k * z);
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * z);
}

inline double bessel_i_large_argument(double nu, double z) {
  return bessel_i_large_argument_scaled(nu, z) * std::exp(z);
}

}  // namespace detail

/// Zero-order modified Bessel function of the first kind, z >= 0.
///
/// Ascending series for z <= 30 (stopped when the next term falls below
/// 1e-16 of the running sum, at most 500 terms); large-argument expansion
/// above. Throws std::domain_error for negative or non-finite z and
/// std::overflow_error once the value exceeds double range (z > ~713).
inline double bessel_i0(double z) {
  if (!(z >= 0.0) || !std::isfinite(z)) throw std::domain_error("bessel_i0: z must be >= 0");
  if (z <= detail::kBesselI0AsymptoticSwitch) return detail::bessel_i_ascending(0.0, z);
  return detail::check_finite(detail::bessel_i_large_argument(0.0, z), "bessel_i0: overflow");
}

/// Exponentially scaled I0: e^{-z} I0(z). Finite for every z >= 0.
inline double bessel_i0_scaled(double z) {
  if (!(z >= 0.0) || !std::isfinite(z)) throw std::domain_error("bessel_i0: z must be >= 0");
  if (z <= detail::kBesselI0AsymptoticSwitch) return detail::bessel_i_ascending(0.0, z) * std::exp(-z);
  return detail::bessel_i_large_argument_scaled(0.0, z);
}

/// I_nu(z) through the integral representation
///   (1/pi) int_0^pi e^{z cos t} cos(nu t) dt
///     - (sin(nu pi)/pi) int_0^inf e^{-z cosh t - nu t} dt.
/// Both integrals are computed on e^{-z}-scaled integrands. The result loses
/// relative accuracy when I_nu(z) e^{-z} is tiny (nu much larger than sqrt z).
inline double bessel_i_nu_integral(double nu, double z) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw std::domain_error("bessel_i_nu: nu must be >= 0");
  if (!(z >= 0.0) || !std::isfinite(z)) throw std::domain_error("bessel_i_nu: z must be >= 0");
  if (z == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  constexpr double pi = std::numbers::pi;

  quadrature::Options opt;
  opt.abs_tol = 1e-13;
  opt.rel_tol = 1e-12;
  opt.initial_pieces = 1 + static_cast<std::size_t>(nu);
  const auto first = quadrature::integrate(
      [&](double t) { return std::exp(z * (std::cos(t) - 1.0)) * std::cos(nu * t); }, 0.0, pi, opt);
  double scaled = first.value / pi;

  const double s = std::sin(nu * pi);
  if (!detail::is_integer(nu) && s != 0.0) {
    // e^{-z cosh t - nu t} = e^{-z} g(t); the tail is dropped where the
    // unscaled integrand falls below 1e-18.
    auto g = [&](double t) { return std::exp(-z * (std::cosh(t) - 1.0) - nu * t); };
    const double cutoff = std::log(1e-18);
    double upper = 1.0;
    while (-z * std::cosh(upper) - nu * upper > cutoff && upper < 1e3) upper *= 2.0;
    quadrature::Options tail_opt;
    tail_opt.abs_tol = 1e-14;
    tail_opt.rel_tol = 1e-12;
    tail_opt.initial_pieces = 8;
    const auto second = quadrature::integrate(g, 0.0, upper, tail_opt);
    scaled -= s / pi * std::exp(-2.0 * z) * second.value;
  }
  return detail::check_finite(scaled * std::exp(z), "bessel_i_nu: overflow");
}

/// Modified Bessel function of the first kind of real order nu >= 0.
///
/// Integer orders use the ascending series (large-argument expansion when
/// z > 30 and nu^2 < z / 2). Non-integer orders use the integral
/// representation where it is well conditioned (z >= 2 and nu^2 <= 4 z);
/// outside that region the integrand cancels to many digits, and the
/// ascending series, which has no cancellation, is used instead.
inline double bessel_i_nu(double nu, double z) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw std::domain_error("bessel_i_nu: nu must be >= 0");
  if (!(z >= 0.0) || !std::isfinite(z)) throw std::domain_error("bessel_i_nu: z must be >= 0");
  if (z == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (nu == 0.0) return bessel_i0(z);
  if (!detail::is_integer(nu) && z >= 2.0 && nu * nu <= 4.0 * z) return bessel_i_nu_integral(nu, z);
  if (z > detail::kBesselI0AsymptoticSwitch && nu * nu < 0.5 * z)
    return detail::check_finite(detail::bessel_i_large_argument(nu, z), "bessel_i_nu: overflow");
  return detail::check_finite(detail::bessel_i_ascending(nu, z), "bessel_i_nu: overflow");
}

/// Unnormalised aliased sinc (Dirichlet kernel) sin(M w / 2) / sin(w / 2).
/// Peak value M at multiples of 2 pi (with sign (-1)^(M-1) at odd multiples).
inline double asinc(int M, double omega) {
  if (M < 1) throw std::invalid_argument("asinc: M must be >= 1");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double turns = std::nearbyint(omega / two_pi);
  const double reduced = omega - two_pi * turns;
  // sin(M(w + 2 pi k)/2) / sin((w + 2 pi k)/2) = (-1)^{k(M-1)} * asinc(w)
  const bool flip = (M % 2 == 0) && std::fmod(std::abs(turns), 2.0) == 1.0;
  const double sign = flip ? -1.0 : 1.0;
  const double m = static_cast<double>(M);
  if (std::abs(reduced) < 1e-8) {
    return sign * m * (1.0 - (m * m - 1.0) * reduced * reduced / 24.0);
  }
  return sign * std::sin(0.5 * m * reduced) / std::sin(0.5 * reduced);
}

}  // namespace vmwin
