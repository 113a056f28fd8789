#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "vmwin/spectra.hpp"
#include "vmwin/windows.hpp"

namespace vmwin {

/// Figures of merit for a sampled window. Frequencies are expressed in bins
/// of 2 pi / N for an N + 1 tap window.
///
/// Coherent gain and ENBW use the one-period (DFT-even) sums: the window's
/// two end taps count half each, which for a symmetric window equals the sum
/// over N consecutive taps. With this convention the rectangular window has
/// ENBW exactly 1 and Hann exactly 1.5.
struct WindowMetrics {
  double coherent_gain = 0.0;
  double enbw_bins = 0.0;
  double highest_sidelobe_db = 0.0;
  double mainlobe_width_3db_bins = 0.0;
  double scalloping_loss_db = 0.0;
};

/// One-period sums (sum w, sum w^2) with half weight on the two end taps.
struct PeriodSums {
  double linear = 0.0;
  double square = 0.0;
};

inline PeriodSums period_sums(const SampledWindow& w) {
  PeriodSums s;
  for (double c : w.coefficients) {
    s.linear += c;
    s.square += c * c;
  }
  const double first = w.coefficients.front();
  const double last = w.coefficients.back();
  s.linear -= 0.5 * (first + last);
  s.square -= 0.5 * (first * first + last * last);
  return s;
}

namespace detail {

inline double to_db(double ratio) { return 20.0 * std::log10(std::max(ratio, 1e-30)); }

inline std::size_t metric_grid_size(std::size_t taps, int oversample) {
  std::size_t size = 1;
  const std::size_t target = taps * static_cast<std::size_t>(oversample);
  while (size < target) size <<= 1;
  return size;
}

}  // namespace detail

inline WindowMetrics compute_metrics(const SampledWindow& w, int oversample = 64) {
  if (oversample < 16) throw std::invalid_argument("oversample must be >= 16");
  if (w.size() < 2) throw std::invalid_argument("window needs at least two taps");
  bool any = false;
  for (double c : w.coefficients) any = any || c != 0.0;
  if (!any) throw std::invalid_argument("window is all zeros");

  const int N = w.order();
  const double bin = 2.0 * std::numbers::pi / N;
  WindowMetrics m;

  const auto sums = period_sums(w);
  if (!(sums.linear > 0.0)) throw std::invalid_argument("window has no positive DC gain");
  m.coherent_gain = sums.linear / N;
  m.enbw_bins = N * sums.square / (sums.linear * sums.linear);

  // Half circle [0, pi]; |W| is even for real windows.
  const std::size_t full = detail::metric_grid_size(w.size(), oversample);
  const std::size_t half = full / 2;
  std::vector<double> pts(half + 1);
  for (std::size_t k = 0; k <= half; ++k) pts[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / full;
  pts[half] = std::numbers::pi;
  const auto spec = dtft(w, FrequencyGrid(pts, Domain::DTFT));

  // Amplitude referred to the window centre is real for symmetric windows,
  // so a sign change marks a true null between grid points.
  const double centre = w.first_index + 0.5 * N;
  std::vector<double> mag(half + 1);
  std::vector<double> amp(half + 1);
  for (std::size_t k = 0; k <= half; ++k) {
    mag[k] = std::abs(spec.values[k]);
    amp[k] = (spec.values[k] * std::polar(1.0, pts[k] * centre)).real();
  }
  const double peak = mag[0];

  // Main lobe edge: first deep null, else first strict local minimum.
  std::size_t edge = 0;
  std::size_t first_min = 0;
  for (std::size_t k = 1; k < half && edge == 0; ++k) {
    const bool sign_change = (amp[k] > 0.0) != (amp[k + 1] > 0.0) && mag[k] < mag[k - 1];
    const bool local_min = mag[k] <= mag[k - 1] && mag[k] < mag[k + 1];
    if (local_min && first_min == 0) first_min = k;
    if (sign_change) {
      edge = mag[k + 1] < mag[k] ? k + 1 : k;
    } else if (local_min && mag[k] < 1e-3 * peak) {
      edge = k;
    }
  }
  if (edge == 0) edge = first_min;

  double hsl = -std::numeric_limits<double>::infinity();
  if (edge == 0) {
    hsl = detail::to_db(mag[half] / peak);
  } else {
    for (std::size_t k = edge; k <= half; ++k) {
      const double left = mag[k - 1];
      const double right = k < half ? mag[k + 1] : mag[k - 1];
      if (!(mag[k] >= left && mag[k] >= right)) continue;
      const double y0 = detail::to_db(left / peak);
      const double y1 = detail::to_db(mag[k] / peak);
      const double y2 = detail::to_db(right / peak);
      const double denom = y0 - 2.0 * y1 + y2;
      double refined = y1;
      if (denom < 0.0) {
        const double offset = 0.5 * (y0 - y2) / denom;
        refined = y1 - 0.25 * (y0 - y2) * offset;
      }
      hsl = std::max(hsl, refined);
    }
    if (!std::isfinite(hsl)) hsl = detail::to_db(mag[half] / peak);
  }
  m.highest_sidelobe_db = hsl;

  const double target = peak * std::pow(10.0, -3.0 / 20.0);
  double w3 = std::numbers::pi;
  for (std::size_t k = 1; k <= half; ++k) {
    if (mag[k] < target) {
      const double t = (mag[k - 1] - target) / (mag[k - 1] - mag[k]);
      w3 = pts[k - 1] + t * (pts[k] - pts[k - 1]);
      break;
    }
  }
  m.mainlobe_width_3db_bins = 2.0 * w3 / bin;

  const double half_bin = 0.5 * bin;
  const auto at_half_bin = dtft(w, FrequencyGrid({half_bin}, Domain::DTFT));
  m.scalloping_loss_db = -detail::to_db(std::abs(at_half_bin.values[0]) / peak);
  return m;
}

struct MetricRow {
  WindowSpec spec;
  WindowMetrics metrics;
};

inline std::vector<MetricRow> metric_table(std::span<const WindowSpec> specs, int oversample = 64) {
  if (specs.empty()) throw std::invalid_argument("metric_table: no windows given");
  std::vector<MetricRow> rows;
  rows.reserve(specs.size());
  for (const auto& spec : specs) rows.push_back({spec, compute_metrics(sample(spec), oversample)});
  return rows;
}

}  // namespace vmwin
