#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "vmwin/special_functions.hpp"

namespace vmwin {

struct Rectangular {};

/// alpha + (1 - alpha) cos(2 pi t / N). Hann is alpha = 0.5, Hamming 0.54.
struct CosineAlpha {
  double alpha = 0.5;
};

struct Kaiser {
  double beta = 0.0;
};

/// Circular normal taper e^{beta (cos(pi t / N) - 1)}.
struct VonMises {
  double beta = 0.0;
};

using WindowFamily = std::variant<Rectangular, CosineAlpha, Kaiser, VonMises>;

inline WindowFamily hann() { return CosineAlpha{0.5}; }
inline WindowFamily hamming() { return CosineAlpha{0.54}; }

/// A window of support length N (N + 1 taps when sampled), either centred
/// on the origin or shifted to start at zero.
struct WindowSpec {
  WindowFamily family = Rectangular{};
  int N = 2;
  bool causal = false;
};

inline void validate(const WindowFamily& family) {
  std::visit(
      [](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, CosineAlpha>) {
          if (!(f.alpha >= 0.0 && f.alpha <= 1.0)) throw std::invalid_argument("alpha must be in [0, 1]");
        } else if constexpr (std::is_same_v<F, Kaiser> || std::is_same_v<F, VonMises>) {
          if (!(f.beta >= 0.0) || !std::isfinite(f.beta)) throw std::invalid_argument("beta must be >= 0");
        }
      },
      family);
}

inline void validate(const WindowSpec& spec) {
  validate(spec.family);
  if (spec.N < 2) throw std::invalid_argument("N must be >= 2");
  if (spec.N % 2 != 0) throw std::invalid_argument("N must be even");
}

inline std::string family_name(const WindowFamily& family) {
  switch (family.index()) {
    case 0: return "rect";
    case 1: return "cosine";
    case 2: return "kaiser";
    default: return "vonmises";
  }
}

/// "alpha=0.5", "beta=5" or "" for the rectangular window.
inline std::string family_params(const WindowFamily& family) {
  // shortest of %.15g / %.17g that reads back exactly
  auto fmt = [](const char* key, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    if (std::strtod(buf, nullptr) != v) std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(key) + "=" + buf;
  };
  if (const auto* c = std::get_if<CosineAlpha>(&family)) return fmt("alpha", c->alpha);
  if (const auto* k = std::get_if<Kaiser>(&family)) return fmt("beta", k->beta);
  if (const auto* v = std::get_if<VonMises>(&family)) return fmt("beta", v->beta);
  return "";
}

namespace detail {

// Centred shape for |t| <= N / 2.
inline double centered_shape(const WindowFamily& family, double t, int N) {
  const double n = static_cast<double>(N);
  return std::visit(
      [&](const auto& f) -> double {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Rectangular>) {
          return 1.0;
        } else if constexpr (std::is_same_v<F, CosineAlpha>) {
          return f.alpha + (1.0 - f.alpha) * std::cos(2.0 * std::numbers::pi * t / n);
        } else if constexpr (std::is_same_v<F, Kaiser>) {
          const double r = t / (0.5 * n);
          const double arg = f.beta * std::sqrt(std::max(0.0, 1.0 - r * r));
          return bessel_i0(arg) / bessel_i0(f.beta);
        } else {
          return std::exp(f.beta * (std::cos(std::numbers::pi * t / n) - 1.0));
        }
      },
      family);
}

}  // namespace detail

/// Continuous-time window value; zero outside the support.
inline double eval_continuous(const WindowSpec& spec, double t) {
  validate(spec);
  const double half = 0.5 * spec.N;
  const double centered = spec.causal ? t - half : t;
  if (!(std::abs(centered) <= half)) return 0.0;
  return detail::centered_shape(spec.family, centered, spec.N);
}

/// N + 1 window coefficients starting at first_index.
struct SampledWindow {
  int first_index = 0;
  std::vector<double> coefficients;

  std::size_t size() const { return coefficients.size(); }
  int last_index() const { return first_index + static_cast<int>(coefficients.size()) - 1; }
  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  bool causal() const { return first_index == 0; }
  double at(int n) const {
    if (n < first_index || n > last_index()) return 0.0;
    return coefficients[static_cast<std::size_t>(n - first_index)];
  }

  bool operator==(const SampledWindow&) const = default;
};

/// Samples the window at every integer index of its support by direct
/// evaluation: -N/2..N/2 for non-causal specs, 0..N for causal ones.
inline SampledWindow sample(const WindowSpec& spec) {
  validate(spec);
  const int half = spec.N / 2;
  SampledWindow w;
  w.first_index = spec.causal ? 0 : -half;
  w.coefficients.reserve(static_cast<std::size_t>(spec.N) + 1);
  for (int n = -half; n <= half; ++n)
    w.coefficients.push_back(detail::centered_shape(spec.family, static_cast<double>(n), spec.N));
  return w;
}

/// Shifts a centred window to start at index 0. Causal input is returned as is.
inline SampledWindow to_causal(const SampledWindow& w) {
  if (w.causal()) return w;
  if (w.first_index != -w.order() / 2 || w.order() % 2 != 0)
    throw std::invalid_argument("to_causal: window is not centred on the origin");
  SampledWindow out = w;
  out.first_index = 0;
  return out;
}

}  // namespace vmwin
