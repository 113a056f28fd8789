#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "vmwin/special_functions.hpp"
#include "vmwin/spectra.hpp"
#include "vmwin/windows.hpp"

namespace vmwin {

/// Ideal low-pass with cutoff omega_c in (0, pi) rad/sample, truncated to
/// N + 1 taps.
struct LowpassSpec {
  double omega_c = std::numbers::pi / 2;
  int N = 32;

  void validate() const {
    if (!(omega_c > 0.0 && omega_c < std::numbers::pi))
      throw std::domain_error("omega_c must lie in (0, pi)");
    if (N < 2 || N % 2 != 0) throw std::invalid_argument("filter order N must be even and >= 2");
  }
};

struct FirFilter {
  int first_index = 0;
  std::vector<double> taps;

  int order() const { return static_cast<int>(taps.size()) - 1; }
  SampledWindow as_sequence() const { return {first_index, taps}; }
};

/// h[n] = (omega_c / pi) Sa(omega_c n); omega_c / pi at n = 0.
inline double ideal_lowpass_tap(double omega_c, int n) {
  if (!(omega_c > 0.0 && omega_c < std::numbers::pi)) throw std::domain_error("omega_c must lie in (0, pi)");
  return omega_c / std::numbers::pi * sa(omega_c * n);
}

/// Window method: taps[n] = w[n] h[n] for n = -N/2..N/2.
inline FirFilter design(const LowpassSpec& lp, const WindowSpec& window) {
  lp.validate();
  validate(window);
  if (window.N != lp.N) throw std::invalid_argument("window length does not match filter order");
  if (window.causal) throw std::invalid_argument("design expects a centred window; shift the result instead");
  const auto w = sample(window);
  FirFilter f;
  f.first_index = w.first_index;
  f.taps.reserve(w.size());
  int n = w.first_index;
  for (double c : w.coefficients) f.taps.push_back(c * ideal_lowpass_tap(lp.omega_c, n++));
  return f;
}

inline FirFilter to_causal(const FirFilter& f) {
  return {0, f.taps};
}

inline Spectrum frequency_response(const FirFilter& f, const FrequencyGrid& grid) {
  return dtft(f.as_sequence(), grid);
}

struct ResponseReport {
  double passband_ripple_db = 0.0;
  double stopband_attenuation_db = 0.0;
  double transition_width = 0.0;  // rad/sample
  double passband_edge = 0.0;
  double stopband_edge = 0.0;
};

/// Measures |H| on grid_size points over [0, pi].
///
/// The transition band is bounded by the response extrema nearest the
/// cutoff: the last local maximum below omega_c and the first local minimum
/// above it. Where the response is monotone on a side, the guard
/// 2 pi * 2 / (N + 1) is used instead. The half-width Delta of that interval
/// sets passband [0, omega_c - Delta] and stopband [omega_c + Delta, pi].
inline ResponseReport response_report(const FirFilter& f, const LowpassSpec& lp, std::size_t grid_size = 4096) {
  lp.validate();
  if (grid_size < 1024) throw std::invalid_argument("grid_size must be >= 1024");
  if (f.order() != lp.N) throw std::invalid_argument("filter order does not match lowpass spec");
  constexpr double pi = std::numbers::pi;
  std::vector<double> pts(grid_size);
  for (std::size_t k = 0; k < grid_size; ++k) pts[k] = pi * static_cast<double>(k) / (grid_size - 1);
  pts.back() = pi;
  const auto resp = frequency_response(f, FrequencyGrid(pts, Domain::DTFT));
  std::vector<double> mag(grid_size);
  for (std::size_t k = 0; k < grid_size; ++k) mag[k] = std::abs(resp.values[k]);

  const double guard = 2.0 * pi * 2.0 / (lp.N + 1);
  const auto cut = static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), lp.omega_c) - pts.begin());

  std::size_t right = cut;
  while (right + 1 < grid_size && mag[right + 1] <= mag[right]) ++right;
  const double stop_edge = right + 1 < grid_size ? pts[right] : lp.omega_c + guard;

  std::size_t left = cut > 0 ? cut - 1 : 0;
  while (left > 0 && mag[left - 1] >= mag[left]) --left;
  const double pass_edge = left > 0 ? pts[left] : lp.omega_c - guard;

  const double delta = 0.5 * (stop_edge - pass_edge);
  const double pass_hi = lp.omega_c - delta;
  const double stop_lo = lp.omega_c + delta;
  if (!(pass_hi > 0.0) || !(stop_lo < pi)) throw std::invalid_argument("degenerate pass/stop bands");

  double pass_sum = 0.0;
  double pass_max = 0.0;
  double pass_min = std::numeric_limits<double>::infinity();
  std::size_t pass_count = 0;
  double stop_max = 0.0;
  std::size_t stop_count = 0;
  for (std::size_t k = 0; k < grid_size; ++k) {
    if (pts[k] <= pass_hi) {
      pass_sum += mag[k];
      pass_max = std::max(pass_max, mag[k]);
      pass_min = std::min(pass_min, mag[k]);
      ++pass_count;
    } else if (pts[k] >= stop_lo) {
      stop_max = std::max(stop_max, mag[k]);
      ++stop_count;
    }
  }
  if (pass_count == 0 || stop_count == 0 || !(pass_min > 0.0))
    throw std::invalid_argument("degenerate pass/stop bands");

  ResponseReport r;
  const double pass_mean = pass_sum / static_cast<double>(pass_count);
  r.passband_ripple_db = 20.0 * std::log10(pass_max / pass_min);
  r.stopband_attenuation_db = -20.0 * std::log10(std::max(stop_max, 1e-300) / pass_mean);
  r.transition_width = 2.0 * delta;
  r.passband_edge = pass_hi;
  r.stopband_edge = stop_lo;
  return r;
}

}  // namespace vmwin
