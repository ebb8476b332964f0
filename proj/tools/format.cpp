#include "format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace propkit::cli {

std::string number(double v) {
  if (v == 0.0) return "0";
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

nlohmann::json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

nlohmann::json record_json(const CheckRecord& rec) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : rec.params) params[k] = v;
  nlohmann::json j;
  j["check"] = rec.check;
  j["criterion"] = rec.criterion;
  j["params"] = params;
  if (rec.complex_values) {
    j["expected"] = complex_json(rec.expected);
    j["got"] = complex_json(rec.got);
  } else {
    j["expected"] = rec.expected.real();
    j["got"] = rec.got.real();
  }
  j["deviation"] = rec.deviation;
  j["tolerance"] = rec.tolerance;
  j["pass"] = rec.pass;
  if (!rec.note.empty()) j["note"] = rec.note;
  return j;
}

nlohmann::json verify_json(const std::vector<CheckRecord>& records,
                           const std::vector<double>& schedule) {
  nlohmann::json checks = nlohmann::json::array();
  std::map<int, std::pair<int, int>> per_criterion;
  int passed = 0;
  for (const auto& rec : records) {
    checks.push_back(record_json(rec));
    auto& [total, ok] = per_criterion[rec.criterion];
    ++total;
    if (rec.pass) {
      ++ok;
      ++passed;
    }
  }
  nlohmann::json criteria = nlohmann::json::object();
  for (const auto& [c, counts] : per_criterion)
    criteria[std::to_string(c)] = {{"total", counts.first}, {"passed", counts.second}};
  nlohmann::json out;
  out["meta"] = {{"tool", "propkit"}, {"damping_schedule", schedule}};
  out["summary"] = {{"total", records.size()},
                    {"passed", passed},
                    {"all_pass", passed == static_cast<int>(records.size())},
                    {"criteria", criteria}};
  out["checks"] = checks;
  return out;
}

namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 80, kRight = 170, kTop = 40, kBottom = 60;
const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Tick positions at 1, 2 or 5 times a power of ten inside [lo, hi]; whole
// decades only when the axis is log10 of the data.
std::vector<double> nice_ticks(double lo, double hi, bool decades) {
  const double raw = (hi - lo) / 5.0;
  double step = std::pow(10.0, std::floor(std::log10(raw)));
  for (double f : {2.0, 5.0, 10.0})
    if (step * 1.5 < raw) step = std::pow(10.0, std::floor(std::log10(raw))) * f;
  if (decades) step = std::max(1.0, std::round(step));
  std::vector<double> out;
  for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * step; v += step)
    out.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
  return out;
}

}  // namespace

std::string render_svg(const std::vector<Curve>& curves, const PlotOptions& options) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& c : curves)
    for (auto [x, y] : c.points) {
      if (options.log_y) {
        if (!(y > 0.0)) throw std::domain_error("render_svg: log scale needs positive values");
        y = std::log10(y);
      }
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  if (!(x1 > x0)) x1 = x0 + 1.0;
  if (!(y1 > y0)) y1 = y0 + 1.0;
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return kTop + (1.0 - (y - y0) / (y1 - y0)) * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << coord(kLeft + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << escape(options.title) << "</text>\n";
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (double xv : nice_ticks(x0, x1, false)) {
    svg << "<line x1=\"" << coord(px(xv)) << "\" y1=\"" << coord(kTop + ph) << "\" x2=\""
        << coord(px(xv)) << "\" y2=\"" << coord(kTop + ph + 5) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << coord(px(xv)) << "\" y=\"" << coord(kTop + ph + 18)
        << "\" text-anchor=\"middle\">" << number(xv) << "</text>\n";
  }
  for (double yv : nice_ticks(y0, y1, options.log_y)) {
    const std::string ylabel = options.log_y ? "1e" + number(yv) : number(yv);
    svg << "<line x1=\"" << coord(kLeft - 5) << "\" y1=\"" << coord(py(yv)) << "\" x2=\""
        << coord(kLeft) << "\" y2=\"" << coord(py(yv)) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << coord(kLeft - 8) << "\" y=\"" << coord(py(yv) + 4)
        << "\" text-anchor=\"end\">" << escape(ylabel) << "</text>\n";
  }
  if (y0 < 0.0 && y1 > 0.0 && !options.log_y)
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << coord(py(0.0)) << "\" x2=\"" << kLeft + pw
        << "\" y2=\"" << coord(py(0.0)) << "\" stroke=\"#999\" stroke-dasharray=\"2,3\"/>\n";
  svg << "<text x=\"" << coord(kLeft + pw / 2) << "\" y=\"" << coord(kHeight - 15)
      << "\" text-anchor=\"middle\">" << escape(options.x_label) << "</text>\n";
  svg << "<text transform=\"translate(18," << coord(kTop + ph / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape(options.y_label) << "</text>\n";

  // a dashed curve takes the colour of the solid curve before it
  int colour = -1;
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const Curve& c = curves[k];
    if (!c.dashed) ++colour;
    const char* color = kColors[std::max(colour, 0) % 6];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
    if (c.dashed) svg << " stroke-dasharray=\"6,4\"";
    svg << " points=\"";
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      const double y = options.log_y ? std::log10(c.points[i].second) : c.points[i].second;
      if (i) svg << ' ';
      svg << coord(px(c.points[i].first)) << ',' << coord(py(y));
    }
    svg << "\"/>\n";
    const double ly = kTop + 10 + 18.0 * k;
    svg << "<line x1=\"" << coord(kLeft + pw + 15) << "\" y1=\"" << coord(ly) << "\" x2=\""
        << coord(kLeft + pw + 45) << "\" y2=\"" << coord(ly) << "\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"" << (c.dashed ? " stroke-dasharray=\"6,4\"" : "") << "/>\n";
    svg << "<text x=\"" << coord(kLeft + pw + 50) << "\" y=\"" << coord(ly + 4) << "\">"
        << escape(c.label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace propkit::cli
