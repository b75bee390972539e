#include "thermal_jcm/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "thermal_jcm/version.hpp"

namespace tjcm {

namespace {

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open output file: " + path);
  out << content;
  if (!out) throw DomainError("failed writing output file: " + path);
}

}  // namespace

std::string csv_to_string(const std::vector<std::string>& header,
                          const std::vector<CsvRow>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    bool first = true;
    if (!row.label.empty()) {
      out += row.label;
      first = false;
    }
    for (double v : row.values) {
      if (!std::isfinite(v)) {
        throw GuardError("csv output rejected: non-finite value in row");
      }
      if (!first) out += ',';
      out += format_value(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<CsvRow>& rows) {
  write_file(path, csv_to_string(header, rows));
}

std::string sidecar_path(const std::string& csv_path) {
  const auto dot = csv_path.find_last_of('.');
  const auto slash = csv_path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return csv_path + ".json";
  }
  return csv_path.substr(0, dot) + ".json";
}

void write_json_sidecar(const std::string& path,
                        const std::map<std::string, std::string>& entries) {
  nlohmann::json j;
  j["library"] = "thermal_jcm";
  j["version"] = kVersion;
  for (const auto& [k, v] : entries) j["config"][k] = v;
  write_file(path, j.dump(2) + "\n");
}

void write_svg_polyline(const std::string& path, std::span<const double> x,
                        std::span<const double> y, const std::string& x_label,
                        const std::string& y_label) {
  if (x.size() != y.size() || x.empty()) {
    throw DomainError("write_svg_polyline: x and y must match and be non-empty");
  }
  const double x_lo = *std::min_element(x.begin(), x.end());
  const double x_hi = *std::max_element(x.begin(), x.end());
  const double y_lo = *std::min_element(y.begin(), y.end());
  const double y_hi = *std::max_element(y.begin(), y.end());
  const double x_span = x_hi > x_lo ? x_hi - x_lo : 1.0;
  const double y_span = y_hi > y_lo ? y_hi - y_lo : 1.0;

  constexpr int kW = 900;
  constexpr int kH = 540;
  constexpr int kPad = 60;
  auto px = [&](double v) { return kPad + (v - x_lo) / x_span * (kW - 2 * kPad); };
  auto py = [&](double v) { return kH - kPad - (v - y_lo) / y_span * (kH - 2 * kPad); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kW) +
         "\" height=\"" + std::to_string(kH) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n", kPad,
                kH - kPad, kW - kPad, kH - kPad);
  svg += buf;
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n", kPad,
                kPad, kPad, kH - kPad);
  svg += buf;
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%d\" y=\"%d\" font-size=\"13\" text-anchor=\"middle\">%s</text>\n",
                kW / 2, kH - 16, x_label.c_str());
  svg += buf;
  std::snprintf(
      buf, sizeof(buf),
      "<text x=\"16\" y=\"%d\" font-size=\"13\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 16 %d)\">%s</text>\n",
      kH / 2, kH / 2, y_label.c_str());
  svg += buf;
  // axis extents
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%d\" y=\"%d\" font-size=\"11\">%s</text>\n", kPad, kH - kPad + 16,
                format_value(x_lo).c_str());
  svg += buf;
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%d\" y=\"%d\" font-size=\"11\" text-anchor=\"end\">%s</text>\n",
                kW - kPad, kH - kPad + 16, format_value(x_hi).c_str());
  svg += buf;
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%d\" y=\"%d\" font-size=\"11\">%s</text>\n", 4, kH - kPad,
                format_value(y_lo).c_str());
  svg += buf;
  std::snprintf(buf, sizeof(buf), "<text x=\"%d\" y=\"%d\" font-size=\"11\">%s</text>\n", 4,
                kPad, format_value(y_hi).c_str());
  svg += buf;

  svg += "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1\" points=\"";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw GuardError("svg output rejected: non-finite sample");
    }
    std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px(x[i]), py(y[i]));
    svg += buf;
  }
  svg += "\"/>\n</svg>\n";
  write_file(path, svg);
}

}  // namespace tjcm
