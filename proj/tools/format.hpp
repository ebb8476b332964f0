#pragma once

// Text output for the command line tool: CSV numbers, JSON records, SVG plots.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "propkit/verify.hpp"

namespace propkit::cli {

/// 12 significant digits, dot decimal point, -0 printed as 0.
std::string number(double v);

/// Joins already formatted fields with commas.
std::string csv_row(const std::vector<std::string>& fields);

nlohmann::json complex_json(Complex z);

nlohmann::json record_json(const CheckRecord& rec);

/// {"meta": ..., "summary": ..., "checks": [...]}
nlohmann::json verify_json(const std::vector<CheckRecord>& records,
                           const std::vector<double>& schedule);

struct Curve {
  std::string label;
  std::vector<std::pair<double, double>> points;
  bool dashed = false;
};

struct PlotOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
};

/// One polyline per curve with axes, ticks and a legend. Throws
/// std::domain_error when log_y is set and a value is not positive.
std::string render_svg(const std::vector<Curve>& curves, const PlotOptions& options);

}  // namespace propkit::cli
