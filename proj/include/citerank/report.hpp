#pragma once

// Machine-readable report serialization (JSON, full precision) and rendering
// of the delimited/aligned summary tables. Rounding happens only at render
// time: percentiles to 2 decimals, correlation coefficients to 3, shift
// percentages to 1.

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "citerank/sensitivity.hpp"

namespace citerank {

inline constexpr int kReportFormatVersion = 1;

void write_report_json(const SensitivityReport&, std::ostream&);

// Throws Error when the stream does not contain a report this tool wrote.
SensitivityReport read_report_json(std::istream&, const std::string& source_name);

// Writes correlations.csv, uda_descriptives.csv, quartile_shift.csv,
// top_shift.csv, bottom_shift.csv and tables.txt into out_dir; returns the
// paths written.
std::vector<std::filesystem::path> render_tables(const SensitivityReport&,
                                                 const std::filesystem::path& out_dir,
                                                 char delimiter = ',');

} // namespace citerank
