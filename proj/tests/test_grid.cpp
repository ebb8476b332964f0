#include <doctest.h>

#include <cmath>

#include "propkit/figures.hpp"
#include "propkit/grid.hpp"

using namespace propkit;

namespace {

std::vector<GridPoint> mixed_points() {
  std::vector<GridPoint> pts;
  for (double t : linspace(-3.0, 3.0, 25))
    for (double r : linspace(0.05, 4.0, 17))
      if (std::abs(std::abs(t) - r) > 1e-3) pts.push_back({t, r});
  return pts;
}

}  // namespace

TEST_CASE("linspace") {
  const std::vector<double> v = linspace(0.0, 1.0, 5);
  CHECK(v == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(linspace(0.1, 15.0, 500).back() == 15.0);
  CHECK_THROWS_AS(linspace(0.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("scalar grid: parallel equals serial") {
  const std::vector<GridPoint> pts = mixed_points();
  for (int D : {0, 1, 3, 6}) {
    const ModelParams p{D, 0.8};
    const std::vector<Complex> a = scalar_grid_serial(p, pts);
    const std::vector<Complex> b = scalar_grid(p, pts);
    REQUIRE(a.size() == pts.size());
    CHECK(a == b);
    for (std::size_t i = 0; i < pts.size(); i += 37)
      CHECK(a[i] == scalar_feynman(p, classify_interval(pts[i].t, pts[i].r)));
  }
  const std::vector<Complex> massless = scalar_grid({3, 0.0}, pts);
  CHECK(massless == scalar_grid_serial({3, 0.0}, pts));
  CHECK(massless[5] == scalar_massless({3, 0.0}, classify_interval(pts[5].t, pts[5].r)));
}

TEST_CASE("scalar grid rejects lightlike points before evaluating") {
  std::vector<GridPoint> pts = mixed_points();
  pts.push_back({2.0, 2.0});
  CHECK_THROWS_AS(scalar_grid({3, 1.0}, pts), LightconeSingular);
  CHECK_THROWS_AS(scalar_grid_serial({3, 1.0}, pts), LightconeSingular);
  // a loose tolerance widens the exclusion zone
  const std::vector<GridPoint> near{{2.0, 1.999}};
  CHECK_NOTHROW(scalar_grid({3, 1.0}, near));
  CHECK_THROWS_AS(scalar_grid({3, 1.0}, near, 1e-2), LightconeSingular);
  CHECK(scalar_grid({3, 1.0}, std::vector<GridPoint>{}).empty());
}

TEST_CASE("oracle grid: parallel equals serial") {
  const QuadraturePolicy policy;
  const std::vector<OracleCase> cases{
      {{2, 1.0}, {1.0, 0.5}}, {{3, 1.0}, {0.0, 1.0}}, {{3, 0.5}, {2.0, 1.0}}, {{1, 1.0}, {0.0, 0.0}}};
  const std::vector<OracleOutcome> a = oracle_grid_serial(cases, policy);
  const std::vector<OracleOutcome> b = oracle_grid(cases, policy);
  REQUIRE(a.size() == 4);
  for (std::size_t i = 0; i < 3; ++i) {
    REQUIRE(a[i].converged());
    REQUIRE(b[i].converged());
    CHECK(a[i].report->value == b[i].report->value);
  }
  // r = 0 is outside the general oracle's domain
  CHECK_FALSE(a[3].converged());
  CHECK_FALSE(a[3].report.has_value());
  CHECK(a[3].error.find("r > 0") != std::string::npos);
  CHECK(b[3].error == a[3].error);
}

TEST_CASE("oracle grid keeps the report of a convergence failure") {
  QuadraturePolicy rough;
  rough.damping_schedule = {2.0, 1.5};
  rough.max_rel_error = 1e-12;
  rough.max_abs_error = 0.0;
  const std::vector<OracleCase> cases{{{3, 1.0}, {2.0, 1.0}}};
  const std::vector<OracleOutcome> out = oracle_grid(cases, rough);
  CHECK_FALSE(out[0].converged());
  CHECK(out[0].report.has_value());
  CHECK_FALSE(out[0].error.empty());
}

TEST_CASE("figure 1 rows") {
  const std::vector<Figure1Row> rows = figure1_rows();
  REQUIRE(rows.size() == static_cast<std::size_t>(kFigure1MaxD * kFigure1Grid.count));
  CHECK(rows.front().D == 1);
  CHECK(rows.front().r == kFigure1Grid.lo);
  CHECK(rows.back().D == kFigure1MaxD);
  CHECK(rows.back().r == kFigure1Grid.hi);
  for (const Figure1Row& row : rows) CHECK(row.value > 0.0);
  // monotone decreasing in r for each D, and in D at fixed r >= 2
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].D == rows[i - 1].D) CHECK(rows[i].value < rows[i - 1].value);
  const int n = kFigure1Grid.count;
  for (int d = 1; d < kFigure1MaxD; ++d)
    for (int k = 0; k < n; ++k)
      if (rows[d * n + k].r >= 2.0) CHECK(rows[d * n + k].value < rows[(d - 1) * n + k].value);
  CHECK_THROWS_AS(figure1_rows(1.0, {0.0, 5.0, 10}), std::domain_error);
  CHECK_THROWS_AS(figure1_rows(1.0, {0.1, 5.0, 1}), std::domain_error);
}

TEST_CASE("figure 2 rows oscillate") {
  const std::vector<Figure2Row> rows = figure2_rows();
  REQUIRE(rows.size() == static_cast<std::size_t>(kFigure2MaxD * kFigure2Grid.count));
  const int n = kFigure2Grid.count;
  for (int d = 0; d < kFigure2MaxD; ++d) {
    std::vector<double> re, im;
    for (int k = 0; k < n; ++k) {
      re.push_back(rows[d * n + k].value.real());
      im.push_back(rows[d * n + k].value.imag());
    }
    CHECK(sign_changes(re) >= 3);
    CHECK(sign_changes(im) >= 3);
  }
  // D = 2: -i e^{-i t} / (4 pi t)
  const Figure2Row& r2 = rows[n + 7];
  CHECK(r2.D == 2);
  const Complex want = Complex(0, -1) * std::exp(Complex(0, -r2.t)) / (4 * std::numbers::pi * r2.t);
  CHECK(std::abs(r2.value - want) < 1e-13 * std::abs(want));
}

TEST_CASE("sign_changes") {
  CHECK(sign_changes({}) == 0);
  CHECK(sign_changes({1, -1, 1}) == 2);
  CHECK(sign_changes({1, 0, -1, 0, 0, -2}) == 1);
  CHECK(sign_changes({0, 0}) == 0);
}
