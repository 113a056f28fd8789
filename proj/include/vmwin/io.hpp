#pragma once

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vmwin/fir.hpp"
#include "vmwin/metrics.hpp"
#include "vmwin/spectra.hpp"
#include "vmwin/windows.hpp"

namespace vmwin::io {

using Cell = std::variant<double, long long, std::string>;

/// Named columns plus rows; rendered as CSV or as a JSON array of objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Extra "# key=value" lines (CSV) / top-level fields (JSON).
  std::vector<std::pair<std::string, std::string>> notes;
};

/// 17 significant digits, enough to round-trip any double.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

inline void write_csv(std::ostream& os, const Table& t, const std::string& generated_by) {
  os << "# generated-by " << generated_by << '\n';
  for (const auto& [key, value] : t.notes) os << "# " << key << '=' << value << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_cell(row[i]);
    os << '\n';
  }
}

inline nlohmann::ordered_json to_json(const Table& t) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i)
      std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
    rows.push_back(std::move(obj));
  }
  return rows;
}

inline void write_json(std::ostream& os, const Table& t, const std::string& generated_by) {
  nlohmann::ordered_json doc;
  doc["generated_by"] = generated_by;
  for (const auto& [key, value] : t.notes) doc[key] = value;
  doc["rows"] = to_json(t);
  os << doc.dump(2) << '\n';
}

inline Table window_table(const SampledWindow& w) {
  Table t{{"index", "value"}, {}, {}};
  int n = w.first_index;
  for (double c : w.coefficients) t.rows.push_back({static_cast<long long>(n++), c});
  return t;
}

inline Table taps_table(const FirFilter& f) {
  Table t{{"index", "tap"}, {}, {}};
  int n = f.first_index;
  for (double c : f.taps) t.rows.push_back({static_cast<long long>(n++), c});
  return t;
}

/// omega, re, im, abs, db with db = 20 log10(|W| / max|W|), floored at -400.
inline Table spectrum_table(const Spectrum& s) {
  Table t{{"omega", "re", "im", "abs", "db"}, {}, {}};
  const double peak = s.max_abs();
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    const double a = std::abs(s.values[i]);
    const double db = peak > 0.0 ? 20.0 * std::log10(std::max(a / peak, 1e-20)) : -400.0;
    t.rows.push_back({s.grid[i], s.values[i].real(), s.values[i].imag(), a, db});
  }
  return t;
}

inline Table metrics_table(const std::vector<MetricRow>& rows) {
  Table t{{"family", "params", "N", "coherent_gain", "enbw_bins", "hsl_db", "w3db_bins", "scallop_db"}, {}, {}};
  for (const auto& r : rows)
    t.rows.push_back({family_name(r.spec.family), family_params(r.spec.family), static_cast<long long>(r.spec.N),
                      r.metrics.coherent_gain, r.metrics.enbw_bins, r.metrics.highest_sidelobe_db,
                      r.metrics.mainlobe_width_3db_bins, r.metrics.scalloping_loss_db});
  return t;
}

inline Table report_table(const ResponseReport& r) {
  Table t{{"passband_ripple_db", "stopband_attenuation_db", "transition_width", "passband_edge", "stopband_edge"},
          {},
          {}};
  t.rows.push_back({r.passband_ripple_db, r.stopband_attenuation_db, r.transition_width, r.passband_edge,
                    r.stopband_edge});
  return t;
}

/// Parses the `index,value` CSV written for a window. Comment lines start
/// with '#'; indices must be consecutive.
inline SampledWindow read_window_csv(std::istream& is) {
  SampledWindow w;
  std::string line;
  bool header = false;
  int expected = 0;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != "index,value") throw std::runtime_error("window csv: expected header 'index,value'");
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("window csv: malformed row '" + line + "'");
    std::size_t used = 0;
    const int index = std::stoi(line.substr(0, comma), &used);
    const double value = std::stod(line.substr(comma + 1));
    if (w.coefficients.empty()) {
      w.first_index = index;
    } else if (index != expected) {
      throw std::runtime_error("window csv: indices are not consecutive");
    }
    expected = index + 1;
    w.coefficients.push_back(value);
  }
  if (!header) throw std::runtime_error("window csv: missing header");
  return w;
}

}  // namespace vmwin::io
