#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "vmwin/io.hpp"
#include "vmwin/spectra.hpp"
#include "vmwin/windows.hpp"

namespace vmwin {

enum class CheckStatus { Pass, Fail, Info };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    default: return "INFO";
  }
}

/// One analytic-vs-numeric comparison. `error` is the max abs or max rel
/// error, as named by `measure`.
struct ValidationRow {
  std::string check;
  std::string family;
  std::string params;
  int N = 0;
  std::string measure;
  double error = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::Pass;
};

struct ValidationOptions {
  std::size_t dtft_points = 4097;
  std::size_t continuous_points = 513;
  double series_eps = 1e-14;
};

namespace detail {

inline ValidationRow graded(std::string check, const WindowSpec& spec, std::string measure, double error,
                            double tolerance, std::string params = {}) {
  ValidationRow r;
  r.check = std::move(check);
  r.family = family_name(spec.family);
  r.params = params.empty() ? family_params(spec.family) : std::move(params);
  r.N = spec.N;
  r.measure = std::move(measure);
  r.error = error;
  r.tolerance = tolerance;
  r.status = error <= tolerance ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

}  // namespace detail

/// Runs every exact analytic relation against its numeric oracle, plus the
/// informational comparison of the continuous von Mises closed form.
inline std::vector<ValidationRow> run_validation(const ValidationOptions& opt = {}) {
  std::vector<ValidationRow> rows;
  const auto dgrid = FrequencyGrid::dtft(opt.dtft_points);

  for (int N : {4, 8, 64}) {
    const WindowSpec spec{Rectangular{}, N, false};
    const auto err = compare(analytic_dtft(spec, dgrid), dtft(sample(spec), dgrid));
    rows.push_back(detail::graded("rect dtft dirichlet", spec, "max_abs", err.max_abs, 1e-9));
  }
  for (double alpha : {0.0, 0.5, 0.54}) {
    for (int N : {16, 32}) {
      const WindowSpec spec{CosineAlpha{alpha}, N, false};
      const auto err = compare(analytic_dtft(spec, dgrid), dtft(sample(spec), dgrid));
      rows.push_back(detail::graded("cosine dtft asinc", spec, "max_abs", err.max_abs, 1e-10));
    }
  }
  for (double beta : {1.0, 5.0}) {
    for (int N : {8, 16, 32}) {
      const WindowSpec spec{VonMises{beta}, N, false};
      const auto err = compare(analytic_dtft(spec, dgrid, opt.series_eps), dtft(sample(spec), dgrid));
      rows.push_back(detail::graded("vonmises dtft series", spec, "max_abs", err.max_abs, 1e-9));
    }
  }
  {
    const WindowSpec spec{VonMises{5.0}, 16, true};
    const auto err = compare(analytic_dtft(spec, dgrid, opt.series_eps), dtft(sample(spec), dgrid));
    rows.push_back(detail::graded("vonmises dtft series causal", spec, "max_abs", err.max_abs, 1e-9));
  }
  for (double beta : {1.0, 5.0}) {
    for (int N : {8, 16, 32}) {
      const WindowSpec spec{VonMises{beta}, N, false};
      const auto cgrid = FrequencyGrid::continuous(N, opt.continuous_points);
      const auto err = compare(vonmises_continuous_series(spec, cgrid, opt.series_eps), continuous_ft(spec, cgrid));
      rows.push_back(detail::graded("vonmises continuous series", spec, "max_abs", err.max_abs, 1e-8));
    }
  }
  for (double beta : {2.0, 5.0}) {
    const WindowSpec spec{Kaiser{beta}, 16, false};
    const auto cgrid = FrequencyGrid::continuous(16, opt.continuous_points);
    // relative error away from spectral zeros
    const auto err = compare(kaiser_continuous_closed_form(spec, cgrid), continuous_ft(spec, cgrid), 1e-3);
    rows.push_back(detail::graded("kaiser continuous closed form", spec, "max_rel", err.max_rel, 1e-6));
  }
  // The closed form 2N I_{|Nw/pi|}(beta) / e^beta is reported, not graded.
  for (double beta : {1.0, 5.0}) {
    const int N = 8;
    const WindowSpec spec{VonMises{beta}, N, false};
    const double step = std::numbers::pi / N;
    const FrequencyGrid cgrid({0.0, step, 2.0 * step}, Domain::ContinuousFT);
    const auto closed = vonmises_continuous_closed_form(spec, cgrid);
    const auto oracle = continuous_ft(spec, cgrid);
    for (std::size_t i = 0; i < cgrid.size(); ++i) {
      const double ref = std::abs(oracle.values[i]);
      ValidationRow r;
      r.check = "vonmises continuous closed form";
      r.family = family_name(spec.family);
      r.params = family_params(spec.family) + " w=" + io::format_double(cgrid[i]);
      r.N = N;
      r.measure = "rel_dev";
      r.error = std::abs(closed.values[i] - oracle.values[i]) / ref;
      r.tolerance = 0.0;
      r.status = CheckStatus::Info;
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

inline io::Table validation_table(const std::vector<ValidationRow>& rows) {
  io::Table t{{"check", "family", "params", "N", "measure", "error", "tolerance", "status"}, {}, {}};
  for (const auto& r : rows)
    t.rows.push_back({r.check, r.family, r.params, static_cast<long long>(r.N), r.measure, r.error, r.tolerance,
                      std::string(to_string(r.status))});
  return t;
}

}  // namespace vmwin
