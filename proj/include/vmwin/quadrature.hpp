#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace vmwin::quadrature {

// Global adaptive bisection with the 7-point Gauss / 15-point Kronrod pair.
struct Options {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 30;
  std::size_t max_intervals = 20000;
  // Number of equal pieces the range is cut into before adaptation starts.
  // Useful for oscillatory integrands with a known number of periods.
  std::size_t initial_pieces = 1;
};

template <class T>
struct Result {
  T value{};
  double error = 0.0;
  std::size_t intervals = 0;
  bool converged = true;
};

namespace detail {

// Kronrod abscissae (positive half, descending) and weights.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd Kronrod nodes (index 1, 3, 5, 7).
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
double magnitude(const T& v) {
  return std::abs(v);
}

template <class T>
struct Interval {
  double a;
  double b;
  T value;
  double error;
  int depth;
};

template <class T>
struct ByError {
  bool operator()(const Interval<T>& lhs, const Interval<T>& rhs) const {
    return lhs.error < rhs.error;
  }
};

template <class T, class F>
Interval<T> gauss_kronrod(F& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(center);
  T kronrod = fc * kWgk[7];
  T gauss = fc * kWg[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const T sum = f(center - dx) + f(center + dx);
    kronrod += sum * kWgk[i];
    if (i % 2 == 1) gauss += sum * kWg[i / 2];
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, magnitude(kronrod - gauss), depth};
}

}  // namespace detail

template <class F>
auto integrate(F&& f, double a, double b, const Options& opt = {})
    -> Result<std::decay_t<std::invoke_result_t<F&, double>>> {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  using detail::Interval;
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("integration limits must be finite");
  Result<T> result;
  if (a == b) return result;

  std::priority_queue<Interval<T>, std::vector<Interval<T>>, detail::ByError<T>> open;
  std::vector<Interval<T>> closed;
  T total{};
  double total_err = 0.0;

  const std::size_t pieces = std::max<std::size_t>(1, opt.initial_pieces);
  const double step = (b - a) / static_cast<double>(pieces);
  for (std::size_t i = 0; i < pieces; ++i) {
    const double lo = a + step * static_cast<double>(i);
    const double hi = (i + 1 == pieces) ? b : a + step * static_cast<double>(i + 1);
    auto iv = detail::gauss_kronrod<T>(f, lo, hi, 0);
    total += iv.value;
    total_err += iv.error;
    open.push(iv);
  }

  auto tolerance = [&] {
    return std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(total));
  };

  while (!open.empty() && total_err > tolerance()) {
    if (open.size() + closed.size() >= opt.max_intervals) break;
    Interval<T> worst = open.top();
    open.pop();
    if (worst.depth >= opt.max_depth) {
      closed.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = detail::gauss_kronrod<T>(f, worst.a, mid, worst.depth + 1);
    auto right = detail::gauss_kronrod<T>(f, mid, worst.b, worst.depth + 1);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    open.push(left);
    open.push(right);
  }

  while (!open.empty()) {
    closed.push_back(open.top());
    open.pop();
  }
  // Re-sum in position order so the result does not depend on heap layout.
  std::sort(closed.begin(), closed.end(),
            [](const auto& l, const auto& r) { return l.a < r.a; });
  T value{};
  double err = 0.0;
  for (const auto& iv : closed) {
    value += iv.value;
    err += iv.error;
  }
  result.value = value;
  result.error = err;
  result.intervals = closed.size();
  result.converged = err <= std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(value));
  return result;
}

}  // namespace vmwin::quadrature
