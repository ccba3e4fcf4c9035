#pragma once

// Text formats: one-value-per-line data files and the versioned CSV tables
// written by the command-line tool.

#include <iosfwd>
#include <string>
#include <vector>

#include "evtcvar/mc_harness.hpp"

namespace evtcvar::io {

inline constexpr const char* schema_line = "# schema=evtcvar.v1";

/// Shortest round-trip decimal form.
std::string format_double(double x);

/// One decimal value per line; blank lines and '#' comments are ignored.
/// Throws DataError naming the first offending line.
std::vector<double> parse_values(std::istream& in);
/// Throws ConfigError when the file cannot be opened.
std::vector<double> read_values(const std::string& path);
void write_values(std::ostream& out, const std::vector<double>& values);

inline constexpr const char* sweep_columns =
    "gamma,av_cvar,av_pickands,ratio_asym,var_sim_cvar,var_sim_pickands,ratio_sim,degenerate_cvar,"
    "degenerate_pickands,stderr_cvar,stderr_pickands";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
/// Parses a sweep CSV; throws DataError on any schema mismatch.
std::vector<SweepRow> read_sweep_csv(std::istream& in);

}  // namespace evtcvar::io
