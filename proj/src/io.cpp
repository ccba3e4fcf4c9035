#include "evtcvar/io.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <system_error>

#include "evtcvar/errors.hpp"

namespace evtcvar::io {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

}  // namespace

std::vector<double> parse_values(std::istream& in) {
  std::vector<double> values;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    std::string_view text = line;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    double x;
    if (!parse_double(text, x) || !std::isfinite(x))
      detail::raise<DataError>("parse_values", "line " + std::to_string(lineno) + ": not a finite number: '" +
                                                   std::string(text) + "'");
    values.push_back(x);
  }
  return values;
}

std::vector<double> read_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::raise<ConfigError>("read_values", "cannot open '" + path + "'");
  return parse_values(in);
}

void write_values(std::ostream& out, const std::vector<double>& values) {
  for (double v : values) out << format_double(v) << '\n';
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << schema_line << '\n' << sweep_columns << '\n';
  for (const auto& r : rows) {
    out << format_double(r.gamma) << ',' << format_double(r.av_cvar) << ',' << format_double(r.av_pickands) << ','
        << format_double(r.ratio_asym) << ',' << format_double(r.var_sim_cvar) << ','
        << format_double(r.var_sim_pickands) << ',' << format_double(r.ratio_sim) << ',' << r.degenerate_cvar << ','
        << r.degenerate_pickands << ',' << format_double(r.stderr_cvar) << ',' << format_double(r.stderr_pickands)
        << '\n';
  }
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::vector<SweepRow> rows;
  std::string line;
  bool header_seen = false;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (!header_seen) {
      if (text != sweep_columns)
        detail::raise<DataError>("read_sweep_csv", "line " + std::to_string(lineno) + ": unexpected header");
      header_seen = true;
      continue;
    }
    const auto fields = split(text, ',');
    if (fields.size() != 11)
      detail::raise<DataError>("read_sweep_csv", "line " + std::to_string(lineno) + ": expected 11 fields");
    double v[11];
    for (std::size_t i = 0; i < 11; ++i) {
      // nan/inf are legitimate in simulated columns
      if (fields[i] == "nan" || fields[i] == "-nan") {
        v[i] = std::numeric_limits<double>::quiet_NaN();
      } else if (fields[i] == "inf") {
        v[i] = std::numeric_limits<double>::infinity();
      } else if (!parse_double(fields[i], v[i])) {
        detail::raise<DataError>("read_sweep_csv", "line " + std::to_string(lineno) + ": field " +
                                                       std::to_string(i + 1) + " is not numeric");
      }
    }
    SweepRow r;
    r.gamma = v[0];
    r.av_cvar = v[1];
    r.av_pickands = v[2];
    r.ratio_asym = v[3];
    r.var_sim_cvar = v[4];
    r.var_sim_pickands = v[5];
    r.ratio_sim = v[6];
    r.degenerate_cvar = std::size_t(v[7]);
    r.degenerate_pickands = std::size_t(v[8]);
    r.stderr_cvar = v[9];
    r.stderr_pickands = v[10];
    rows.push_back(r);
  }
  if (!header_seen) detail::raise<DataError>("read_sweep_csv", "missing header line");
  return rows;
}

}  // namespace evtcvar::io
