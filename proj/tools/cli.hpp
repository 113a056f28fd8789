#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vmwin/vmwin.hpp"

namespace vmwin::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kSuccess = 0, kValidationFailed = 1, kUsageError = 2 };

/// Raised for flag combinations that parse but make no sense.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WindowFlags {
  std::string family = "rect";
  std::optional<double> alpha;
  std::optional<double> beta;
  int n = 0;
  bool causal = false;

  void add_to(CLI::App& sub, bool with_causal = true) {
    sub.add_option("--family", family, "rect|cosine|hann|hamming|kaiser|vonmises")->capture_default_str();
    sub.add_option("--alpha", alpha, "cosine-alpha parameter in [0, 1]");
    sub.add_option("--beta", beta, "Kaiser / von Mises shape parameter (>= 0)");
    sub.add_option("--n", n, "support length N (even; N + 1 taps)")->required();
    if (with_causal) sub.add_flag("--causal", causal, "shift the support to [0, N]");
  }
};

inline WindowFamily make_family(const std::string& name, std::optional<double> alpha, std::optional<double> beta) {
  auto need_beta = [&]() {
    if (!beta) throw UsageError("--beta is required for family '" + name + "'");
    return *beta;
  };
  WindowFamily family;
  if (name == "rect" || name == "rectangular") {
    family = Rectangular{};
  } else if (name == "cosine") {
    family = CosineAlpha{alpha.value_or(0.5)};
  } else if (name == "hann") {
    family = hann();
  } else if (name == "hamming") {
    family = hamming();
  } else if (name == "kaiser") {
    family = Kaiser{need_beta()};
  } else if (name == "vonmises") {
    family = VonMises{need_beta()};
  } else {
    throw UsageError("unknown window family '" + name + "'");
  }
  validate(family);
  return family;
}

inline WindowSpec make_spec(const WindowFlags& f) {
  WindowSpec spec{make_family(f.family, f.alpha, f.beta), f.n, f.causal};
  validate(spec);
  return spec;
}

/// Parses `family[:param]:N`, e.g. rect:64, hann:64, cosine:0.3:64,
/// kaiser:5:64, vonmises:5:64.
inline WindowSpec parse_spec_string(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("bad number '" + s + "' in spec '" + text + "'");
    return v;
  };
  if (parts.size() < 2 || parts.size() > 3) throw UsageError("spec '" + text + "' must be family[:param]:N");
  const std::string& name = parts[0];
  const double n_value = number(parts.back());
  const int n = static_cast<int>(n_value);
  if (static_cast<double>(n) != n_value) throw UsageError("N must be an integer in spec '" + text + "'");
  const bool has_param = parts.size() == 3;
  const bool wants_param = name == "cosine" || name == "kaiser" || name == "vonmises";
  if (has_param != wants_param) throw UsageError("spec '" + text + "' has the wrong number of fields");
  std::optional<double> param;
  if (has_param) param = number(parts[1]);
  WindowSpec spec{make_family(name, param, param), n, false};
  validate(spec);
  return spec;
}

struct OutputFlags {
  std::string format = "csv";
  std::string output;

  void add_to(CLI::App& sub) {
    sub.add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub.add_option("-o,--output", output, "output file (default: stdout)");
  }
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    generated_by_ = std::string("vmwin ") + kVersion + ":";
    for (int i = 0; i < argc; ++i) generated_by_ += std::string(" ") + argv[i];

    CLI::App app{"von Mises and classical window toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    int status = kSuccess;
    std::function<void()> action;

    auto* window = app.add_subcommand("window", "write window coefficients");
    window_flags_.add_to(*window);
    output_.add_to(*window);
    window->callback([&] { action = [&] { status = cmd_window(); }; });

    auto* spectrum = app.add_subcommand("spectrum", "evaluate a window spectrum");
    window_flags_.add_to(*spectrum);
    output_.add_to(*spectrum);
    spectrum->add_option("--method", method_, "numeric|analytic|series|closed-form")
        ->check(CLI::IsMember({"numeric", "analytic", "series", "closed-form"}))
        ->capture_default_str();
    spectrum->add_option("--domain", domain_, "dtft|continuous")->check(CLI::IsMember({"dtft", "continuous"}));
    spectrum->add_option("--points", points_, "grid size (default 4097 dtft, 2049 continuous)");
    spectrum->add_option("--eps", eps_, "series truncation threshold")->capture_default_str();
    spectrum->callback([&] { action = [&] { status = cmd_spectrum(); }; });

    auto* validate_cmd = app.add_subcommand("validate", "check analytic spectra against numeric oracles");
    output_.add_to(*validate_cmd);
    validate_cmd->add_flag("--strict", strict_, "treat informational rows as failures");
    validate_cmd->add_option("--points", points_, "continuous grid size (default 513)");
    validate_cmd->callback([&] { action = [&] { status = cmd_validate(); }; });

    auto* compare_cmd = app.add_subcommand("compare", "figures of merit for several windows");
    output_.add_to(*compare_cmd);
    compare_cmd->add_option("--specs", specs_, "family[:param]:N entries")->required()->expected(1, -1);
    compare_cmd->add_option("--oversample", oversample_, "DTFT grid oversampling (>= 16)")->capture_default_str();
    compare_cmd->callback([&] { action = [&] { status = cmd_compare(); }; });

    auto* fir = app.add_subcommand("fir", "window-method low-pass design");
    window_flags_.add_to(*fir, false);
    output_.add_to(*fir);
    fir->add_option("--wc", omega_c_, "cutoff in rad/sample, (0, pi)")->required();
    fir->add_option("--points", points_, "response grid size on [0, pi] (default 4096)");
    fir->add_option("--response", response_path_, "also write the frequency response table here");
    fir->callback([&] { action = [&] { status = cmd_fir(); }; });

    auto* dist = app.add_subcommand("dist", "von Mises density on [-pi, pi]");
    output_.add_to(*dist);
    dist->add_option("--mu", mu_, "mean direction (radians)")->capture_default_str();
    dist->add_option("--kappa", kappa_, "concentration (>= 0)")->required();
    dist->add_option("--points", points_, "grid size (default 361)");
    dist->callback([&] { action = [&] { status = cmd_dist(); }; });

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kSuccess : kUsageError;
    }
    try {
      if (action) action();
    } catch (const std::exception& e) {
      // UsageError, invalid_argument and domain_error from spec validation.
      err_ << "error: " << e.what() << '\n';
      return kUsageError;
    }
    return status;
  }

 private:
  void emit(const io::Table& table) {
    std::ofstream file;
    std::ostream* os = &out_;
    if (!output_.output.empty()) {
      file.open(output_.output);
      if (!file) throw UsageError("cannot open output file '" + output_.output + "'");
      os = &file;
    }
    if (output_.format == "json")
      io::write_json(*os, table, generated_by_);
    else
      io::write_csv(*os, table, generated_by_);
  }

  int cmd_window() {
    const auto spec = make_spec(window_flags_);
    emit(io::window_table(sample(spec)));
    return kSuccess;
  }

  int cmd_spectrum() {
    const auto spec = make_spec(window_flags_);
    if (!(eps_ > 0.0)) throw UsageError("--eps must be > 0");
    const bool continuous_method = method_ == "series" || method_ == "closed-form";
    const std::string domain = domain_.value_or(continuous_method ? "continuous" : "dtft");
    if (continuous_method && domain != "continuous")
      throw UsageError("method '" + method_ + "' is defined on the continuous domain only");
    if (method_ == "analytic" && domain != "dtft")
      throw UsageError("method 'analytic' is defined on the dtft domain only");
    const std::size_t count = points_.value_or(domain == "dtft" ? 4097 : 2049);
    if (count < 2) throw UsageError("--points must be >= 2");

    if (domain == "dtft") {
      const auto grid = FrequencyGrid::dtft(count);
      if (method_ == "numeric") {
        emit(io::spectrum_table(dtft(sample(spec), grid)));
      } else {
        if (std::holds_alternative<Kaiser>(spec.family))
          throw UsageError("the Kaiser window has no discrete closed form; use --method numeric");
        emit(io::spectrum_table(analytic_dtft(spec, grid, eps_)));
      }
      return kSuccess;
    }

    const auto grid = FrequencyGrid::continuous(spec.N, count);
    if (method_ == "numeric") {
      emit(io::spectrum_table(continuous_ft(spec, grid)));
    } else if (method_ == "series") {
      if (!std::holds_alternative<VonMises>(spec.family))
        throw UsageError("method 'series' is available for the vonmises family only");
      emit(io::spectrum_table(vonmises_continuous_series(spec, grid, eps_)));
    } else {
      if (std::holds_alternative<VonMises>(spec.family))
        emit(io::spectrum_table(vonmises_continuous_closed_form(spec, grid)));
      else if (std::holds_alternative<Kaiser>(spec.family))
        emit(io::spectrum_table(kaiser_continuous_closed_form(spec, grid)));
      else
        throw UsageError("method 'closed-form' is available for vonmises and kaiser only");
    }
    return kSuccess;
  }

  int cmd_validate() {
    ValidationOptions opt;
    if (points_) {
      if (*points_ < 2) throw UsageError("--points must be >= 2");
      opt.continuous_points = *points_;
    }
    const auto rows = run_validation(opt);
    emit(validation_table(rows));
    for (const auto& r : rows) {
      if (r.status == CheckStatus::Fail) return kValidationFailed;
      if (strict_ && r.status == CheckStatus::Info) return kValidationFailed;
    }
    return kSuccess;
  }

  int cmd_compare() {
    if (oversample_ < 16) throw UsageError("--oversample must be >= 16");
    std::vector<WindowSpec> specs;
    for (const auto& s : specs_) specs.push_back(parse_spec_string(s));
    emit(io::metrics_table(metric_table(specs, oversample_)));
    return kSuccess;
  }

  int cmd_fir() {
    const auto spec = make_spec(window_flags_);
    const LowpassSpec lp{omega_c_, window_flags_.n};
    lp.validate();
    const std::size_t count = points_.value_or(4096);
    if (count < 1024) throw UsageError("--points must be >= 1024");
    const auto filter = design(lp, spec);
    const auto report = response_report(filter, lp, count);

    std::ofstream file;
    std::ostream* os = &out_;
    if (!output_.output.empty()) {
      file.open(output_.output);
      if (!file) throw UsageError("cannot open output file '" + output_.output + "'");
      os = &file;
    }
    if (output_.format == "json") {
      nlohmann::ordered_json doc;
      doc["generated_by"] = generated_by_;
      doc["taps"] = io::to_json(io::taps_table(filter));
      doc["report"] = io::to_json(io::report_table(report)).front();
      *os << doc.dump(2) << '\n';
    } else {
      io::write_csv(*os, io::taps_table(filter), generated_by_);
      *os << '\n';
      const auto rt = io::report_table(report);
      for (std::size_t i = 0; i < rt.columns.size(); ++i) *os << (i ? "," : "") << rt.columns[i];
      *os << '\n';
      for (std::size_t i = 0; i < rt.rows[0].size(); ++i) *os << (i ? "," : "") << io::format_cell(rt.rows[0][i]);
      *os << '\n';
    }

    if (!response_path_.empty()) {
      std::ofstream resp(response_path_);
      if (!resp) throw UsageError("cannot open response file '" + response_path_ + "'");
      const auto table = io::spectrum_table(frequency_response(filter, FrequencyGrid::dtft(4097)));
      if (output_.format == "json")
        io::write_json(resp, table, generated_by_);
      else
        io::write_csv(resp, table, generated_by_);
    }
    return kSuccess;
  }

  int cmd_dist() {
    const VonMisesParams params{mu_, kappa_};
    params.validate();
    const std::size_t count = points_.value_or(361);
    if (count < 2) throw UsageError("--points must be >= 2");
    const auto grid = FrequencyGrid::symmetric(count, std::numbers::pi, Domain::DTFT);
    io::Table t{{"x", "pdf"}, {}, {{"circular_variance", io::format_double(vm_circular_variance(params))}}};
    for (double x : grid.points()) t.rows.push_back({x, vm_pdf(x, params)});
    emit(t);
    return kSuccess;
  }

  std::ostream& out_;
  std::ostream& err_;
  std::string generated_by_;

  WindowFlags window_flags_;
  OutputFlags output_;
  std::string method_ = "numeric";
  std::optional<std::string> domain_;
  std::optional<std::size_t> points_;
  double eps_ = 1e-14;
  bool strict_ = false;
  std::vector<std::string> specs_;
  int oversample_ = 64;
  double omega_c_ = 0.0;
  std::string response_path_;
  double mu_ = 0.0;
  double kappa_ = 0.0;
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return Runner(out, err).run(argc, argv);
}

}  // namespace vmwin::cli
