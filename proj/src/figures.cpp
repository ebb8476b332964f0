#include "propkit/figures.hpp"

#include <stdexcept>

namespace propkit {

namespace {

std::vector<double> positive_axis(AxisGrid grid, const char* fn) {
  if (!(grid.lo > 0.0) || !(grid.hi > grid.lo))
    throw std::domain_error(std::string(fn) + ": grid needs 0 < min < max");
  if (grid.count < 2) throw std::domain_error(std::string(fn) + ": grid count must be at least 2");
  return linspace(grid.lo, grid.hi, grid.count);
}

}  // namespace

std::vector<Figure1Row> figure1_rows(double m, AxisGrid grid) {
  const std::vector<double> rs = positive_axis(grid, "figure1");
  std::vector<GridPoint> points;
  for (double r : rs) points.push_back({0.0, r});
  std::vector<Figure1Row> rows;
  for (int D = 1; D <= kFigure1MaxD; ++D) {
    const std::vector<Complex> v = scalar_grid({D, m}, points);
    for (std::size_t i = 0; i < rs.size(); ++i) rows.push_back({D, rs[i], v[i].real()});
  }
  return rows;
}

std::vector<Figure2Row> figure2_rows(double m, AxisGrid grid) {
  const std::vector<double> ts = positive_axis(grid, "figure2");
  std::vector<GridPoint> points;
  for (double t : ts) points.push_back({t, 0.0});
  std::vector<Figure2Row> rows;
  for (int D = 1; D <= kFigure2MaxD; ++D) {
    const std::vector<Complex> v = scalar_grid({D, m}, points);
    for (std::size_t i = 0; i < ts.size(); ++i) rows.push_back({D, ts[i], v[i]});
  }
  return rows;
}

int sign_changes(const std::vector<double>& values) {
  int changes = 0;
  int last = 0;
  for (double v : values) {
    const int sign = (v > 0.0) - (v < 0.0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

}  // namespace propkit
