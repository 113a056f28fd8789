#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <variant>
#include <vector>

#include "vmwin/quadrature.hpp"
#include "vmwin/special_functions.hpp"
#include "vmwin/windows.hpp"

namespace vmwin {

using Complex = std::complex<double>;

enum class Domain { ContinuousFT, DTFT };

/// Strictly increasing frequency points, rad/s (continuous) or rad/sample
/// within [-pi, pi] (DTFT).
class FrequencyGrid {
 public:
  FrequencyGrid(std::vector<double> points, Domain domain) : points_(std::move(points)), domain_(domain) {
    if (points_.empty()) throw std::invalid_argument("frequency grid is empty");
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (!std::isfinite(points_[i])) throw std::invalid_argument("frequency grid has non-finite points");
      if (i > 0 && !(points_[i] > points_[i - 1]))
        throw std::invalid_argument("frequency grid must be strictly increasing");
    }
    if (domain_ == Domain::DTFT &&
        (points_.front() < -std::numbers::pi || points_.back() > std::numbers::pi))
      throw std::invalid_argument("DTFT grid must lie within [-pi, pi]");
  }

  /// count points on [-limit, limit], mirrored so that point i == -point(count-1-i).
  static FrequencyGrid symmetric(std::size_t count, double limit, Domain domain) {
    if (count < 2) throw std::invalid_argument("grid needs at least two points");
    std::vector<double> pts(count);
    const double denom = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
      const double u = (2.0 * static_cast<double>(i) - denom) / denom;
      pts[i] = limit * u;
    }
    for (std::size_t i = 0; i < count / 2; ++i) pts[count - 1 - i] = -pts[i];
    if (count % 2 == 1) pts[count / 2] = 0.0;
    return FrequencyGrid(std::move(pts), domain);
  }

  /// Default DTFT grid: 4097 points over [-pi, pi].
  static FrequencyGrid dtft(std::size_t count = 4097) {
    return symmetric(count, std::numbers::pi, Domain::DTFT);
  }

  /// Default continuous grid: 2049 points over +-4 pi (N + 1) / N.
  static FrequencyGrid continuous(int N, std::size_t count = 2049) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    const double limit = 4.0 * std::numbers::pi * (N + 1.0) / N;
    return symmetric(count, limit, Domain::ContinuousFT);
  }

  const std::vector<double>& points() const { return points_; }
  Domain domain() const { return domain_; }
  std::size_t size() const { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }

  bool operator==(const FrequencyGrid&) const = default;

 private:
  std::vector<double> points_;
  Domain domain_;
};

struct Spectrum {
  FrequencyGrid grid;
  std::vector<Complex> values;

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
  }
};

/// Terms c_k = I_k(beta) e^{-beta}, k = 0..order(), of the cosine expansion
/// e^{beta (cos x - 1)} = sum_k c_|k| cos(k x).
struct SeriesCoefficients {
  double beta = 0.0;
  std::vector<double> terms;

  int order() const { return static_cast<int>(terms.size()) - 1; }
};

struct ErrorStats {
  double max_abs = 0.0;
  double max_rel = 0.0;
  double rms = 0.0;
};

namespace detail {

inline void require_domain(const FrequencyGrid& grid, Domain d, const char* what) {
  if (grid.domain() != d) throw std::invalid_argument(what);
}

inline void require_vonmises(const WindowSpec& spec, const char* what) {
  validate(spec);
  if (!std::holds_alternative<VonMises>(spec.family)) throw std::invalid_argument(what);
}

// e^{-j w N / 2}
inline Complex half_support_phase(double w, int N) { return std::polar(1.0, -0.5 * w * N); }

}  // namespace detail

/// Direct summation sum_n w[n] e^{-j n w} over the window's index range.
inline Spectrum dtft(const SampledWindow& w, const FrequencyGrid& grid) {
  detail::require_domain(grid, Domain::DTFT, "dtft: grid domain must be DTFT");
  Spectrum out{grid, std::vector<Complex>(grid.size())};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double om = grid[i];
    double re = 0.0;
    double im = 0.0;
    int n = w.first_index;
    for (double c : w.coefficients) {
      const double arg = om * n;
      re += c * std::cos(arg);
      im -= c * std::sin(arg);
      ++n;
    }
    out.values[i] = {re, im};
  }
  return out;
}

/// Continuous Fourier transform int w(t) e^{-j w t} dt by adaptive
/// Gauss-Kronrod quadrature over the support (tolerance 1e-10 abs + rel).
inline Spectrum continuous_ft(const WindowSpec& spec, const FrequencyGrid& grid) {
  validate(spec);
  detail::require_domain(grid, Domain::ContinuousFT, "continuous_ft: grid domain must be ContinuousFT");
  const double lo = spec.causal ? 0.0 : -0.5 * spec.N;
  const double hi = lo + spec.N;
  Spectrum out{grid, std::vector<Complex>(grid.size())};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double om = grid[i];
    quadrature::Options opt;
    opt.abs_tol = 1e-10;
    opt.rel_tol = 1e-10;
    opt.max_depth = 30;
    opt.initial_pieces = 1 + static_cast<std::size_t>(std::abs(om) * spec.N / (2.0 * std::numbers::pi));
    auto integrand = [&](double t) { return eval_continuous(spec, t) * std::polar(1.0, -om * t); };
    out.values[i] = quadrature::integrate(integrand, lo, hi, opt).value;
  }
  return out;
}

/// c_k = I_k(beta) e^{-beta} for k = 0..K, where K is the last index with
/// c_K >= eps (so c_{K+1} < eps). beta = 0 yields the single term [1].
inline SeriesCoefficients vonmises_series_coefficients(double beta, double eps) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be >= 0");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  SeriesCoefficients out;
  out.beta = beta;
  const double scale = std::exp(-beta);
  for (int k = 0; k < 100000; ++k) {
    double c;
    if (beta > detail::kBesselI0AsymptoticSwitch && static_cast<double>(k) * k < 0.5 * beta)
      c = detail::bessel_i_large_argument_scaled(k, beta);
    else
      c = bessel_i_nu(k, beta) * scale;
    if (c < eps) break;
    out.terms.push_back(c);
  }
  return out;
}

/// Closed-form / series DTFT. Rectangular: Dirichlet kernel. Cosine-alpha:
/// alpha asinc(w) + (1 - alpha)/2 [asinc(w - 2pi/N) + asinc(w + 2pi/N)].
/// Von Mises: sum_k c_|k| asinc(w - k pi / N) truncated at eps. Causal specs
/// pick up e^{-j w N / 2}. Kaiser has no discrete closed form and throws
/// std::logic_error.
inline Spectrum analytic_dtft(const WindowSpec& spec, const FrequencyGrid& grid, double truncation_eps = 1e-14) {
  validate(spec);
  detail::require_domain(grid, Domain::DTFT, "analytic_dtft: grid domain must be DTFT");
  if (std::holds_alternative<Kaiser>(spec.family))
    throw std::logic_error("analytic_dtft: no discrete closed form for the Kaiser window");
  const int M = spec.N + 1;
  const double N = spec.N;
  constexpr double pi = std::numbers::pi;

  SeriesCoefficients coeffs;
  if (const auto* vm = std::get_if<VonMises>(&spec.family))
    coeffs = vonmises_series_coefficients(vm->beta, truncation_eps);

  Spectrum out{grid, std::vector<Complex>(grid.size())};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double om = grid[i];
    double value = 0.0;
    if (std::holds_alternative<Rectangular>(spec.family)) {
      value = asinc(M, om);
    } else if (const auto* c = std::get_if<CosineAlpha>(&spec.family)) {
      const double shifted = 0.5 * (asinc(M, om - 2.0 * pi / N) + asinc(M, om + 2.0 * pi / N));
      value = c->alpha * asinc(M, om) + (1.0 - c->alpha) * shifted;
    } else {
      // smallest terms first
      for (int k = coeffs.order(); k >= 1; --k) {
        const double shift = k * pi / N;
        value += coeffs.terms[k] * (asinc(M, om - shift) + asinc(M, om + shift));
      }
      value += coeffs.terms[0] * asinc(M, om);
    }
    out.values[i] = spec.causal ? value * detail::half_support_phase(om, spec.N) : Complex(value, 0.0);
  }
  return out;
}

/// N e^{-beta} sum_n I_|n|(beta) Sa(N w / 2 - n pi / 2), truncated where
/// the coefficients drop below eps.
inline Spectrum vonmises_continuous_series(const WindowSpec& spec, const FrequencyGrid& grid, double eps = 1e-14) {
  detail::require_vonmises(spec, "vonmises_continuous_series: family must be VonMises");
  detail::require_domain(grid, Domain::ContinuousFT, "vonmises_continuous_series: grid domain must be ContinuousFT");
  const double beta = std::get<VonMises>(spec.family).beta;
  const auto coeffs = vonmises_series_coefficients(beta, eps);
  const double N = spec.N;
  constexpr double half_pi = 0.5 * std::numbers::pi;
  Spectrum out{grid, std::vector<Complex>(grid.size())};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = 0.5 * N * grid[i];
    double value = 0.0;
    for (int n = coeffs.order(); n >= 1; --n)
      value += coeffs.terms[n] * (sa(x - n * half_pi) + sa(x + n * half_pi));
    value += coeffs.terms[0] * sa(x);
    value *= N;
    out.values[i] = spec.causal ? value * detail::half_support_phase(grid[i], spec.N) : Complex(value, 0.0);
  }
  return out;
}

/// 2 N I_{|N w / pi|}(beta) / e^beta. This equals the full-period integral
/// of the exponent, not the transform of the half-period window, so it
/// deviates from quadrature; kept for that comparison.
inline Spectrum vonmises_continuous_closed_form(const WindowSpec& spec, const FrequencyGrid& grid) {
  detail::require_vonmises(spec, "vonmises_continuous_closed_form: family must be VonMises");
  detail::require_domain(grid, Domain::ContinuousFT,
                         "vonmises_continuous_closed_form: grid domain must be ContinuousFT");
  const double beta = std::get<VonMises>(spec.family).beta;
  const double N = spec.N;
  Spectrum out{grid, std::vector<Complex>(grid.size())};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double order = std::abs(N * grid[i] / std::numbers::pi);
    double value;
    if (beta > detail::kBesselI0AsymptoticSwitch && order * order < 0.5 * beta)
      value = 2.0 * N * detail::bessel_i_large_argument_scaled(order, beta);
    else
      value = 2.0 * N * bessel_i_nu(order, beta) * std::exp(-beta);
    out.values[i] = spec.causal ? value * detail::half_support_phase(grid[i], spec.N) : Complex(value, 0.0);
  }
  return out;
}

/// (N / I0(beta)) Sa(sqrt((N w / 2)^2 - beta^2)), continued to
/// sinh(x) / x when the radicand is negative. Matches the transform of the
/// continuous Kaiser window.
inline Spectrum kaiser_continuous_closed_form(const WindowSpec& spec, const FrequencyGrid& grid) {
  validate(spec);
  if (!std::holds_alternative<Kaiser>(spec.family))
    throw std::invalid_argument("kaiser_continuous_closed_form: family must be Kaiser");
  detail::require_domain(grid, Domain::ContinuousFT, "kaiser_continuous_closed_form: grid domain must be ContinuousFT");
  const double beta = std::get<Kaiser>(spec.family).beta;
  const double N = spec.N;
  const double scale = N / bessel_i0(beta);
  Spectrum out{grid, std::vector<Complex>(grid.size())};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double u = 0.5 * N * grid[i];
    const double radicand = u * u - beta * beta;
    double shape;
    if (radicand > 0.0) {
      shape = sa(std::sqrt(radicand));
    } else if (radicand < 0.0) {
      const double x = std::sqrt(-radicand);
      shape = std::sinh(x) / x;
    } else {
      shape = 1.0;
    }
    const double value = scale * shape;
    out.values[i] = spec.causal ? value * detail::half_support_phase(grid[i], spec.N) : Complex(value, 0.0);
  }
  return out;
}

/// Elementwise error of a against reference b. Relative errors are only
/// taken where |b| > rel_floor * max|b|.
inline ErrorStats compare(const Spectrum& a, const Spectrum& b, double rel_floor = 1e-12) {
  if (!(a.grid == b.grid) || a.values.size() != b.values.size())
    throw std::invalid_argument("compare: spectra are on different grids");
  ErrorStats s;
  const double floor = rel_floor * b.max_abs();
  double sq = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double err = std::abs(a.values[i] - b.values[i]);
    const double ref = std::abs(b.values[i]);
    s.max_abs = std::max(s.max_abs, err);
    if (ref > floor) s.max_rel = std::max(s.max_rel, err / ref);
    sq += err * err;
  }
  if (!a.values.empty()) s.rms = std::sqrt(sq / static_cast<double>(a.values.size()));
  return s;
}

}  // namespace vmwin
