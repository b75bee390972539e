#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "thermal_jcm/errors.hpp"

// Output serialisation: CSV datasets (the golden artifacts), a JSON
// sidecar echoing the full run configuration, and simple SVG line plots.

namespace tjcm {

// One dataset row: optional leading text label plus numeric columns.
struct CsvRow {
  std::string label;
  std::vector<double> values;
};

// Writes header + rows with %.15g formatting. Throws GuardError if any
// value is non-finite; nothing non-finite may reach disk.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<CsvRow>& rows);

std::string csv_to_string(const std::vector<std::string>& header,
                          const std::vector<CsvRow>& rows);

// Sidecar path for a dataset: extension replaced by ".json".
std::string sidecar_path(const std::string& csv_path);

// Key/value config echo plus library version, written as JSON.
void write_json_sidecar(const std::string& path,
                        const std::map<std::string, std::string>& entries);

// Minimal polyline plot. Presentation is not bit-specified; only the CSV
// is golden.
void write_svg_polyline(const std::string& path, std::span<const double> x,
                        std::span<const double> y, const std::string& x_label,
                        const std::string& y_label);

}  // namespace tjcm
