#include "propkit/grid.hpp"

#include <stdexcept>

namespace propkit {

namespace {

std::vector<double> invariants(std::span<const GridPoint> points, double tol_lc) {
  std::vector<double> s(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Interval iv = Interval::classify(points[i].t, points[i].r, tol_lc);
    if (iv.causality() == Causality::Lightlike)
      throw LightconeSingular("scalar_grid: point " + std::to_string(i) + " (t = " +
                              std::to_string(iv.t()) + ", r = " + std::to_string(iv.r()) +
                              ") is lightlike");
    s[i] = iv.s();
  }
  return s;
}

Complex scalar_value(const ModelParams& p, double s) {
  return p.m == 0.0 ? scalar_massless_at(p.D, s) : scalar_feynman_at(p, s);
}

OracleOutcome run_oracle(const OracleCase& c, const QuadraturePolicy& policy) {
  OracleOutcome out;
  try {
    out.report = oracle_scalar_general(c.params, c.point.t, c.point.r, policy);
  } catch (const ConvergenceFailure& e) {
    out.report = e.report();
    out.error = e.what();
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 2) throw std::invalid_argument("linspace: count must be at least 2");
  std::vector<double> out(count);
  const double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) out[i] = lo + step * i;
  out.back() = hi;
  return out;
}

std::vector<Complex> scalar_grid_serial(const ModelParams& p, std::span<const GridPoint> points,
                                        double tol_lc) {
  const std::vector<double> s = invariants(points, tol_lc);
  std::vector<Complex> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = scalar_value(p, s[i]);
  return out;
}

std::vector<Complex> scalar_grid(const ModelParams& p, std::span<const GridPoint> points,
                                 double tol_lc) {
  const std::vector<double> s = invariants(points, tol_lc);
  if (!s.empty()) (void)scalar_value(p, s[0]);
  std::vector<Complex> out(s.size());
  const long n = static_cast<long>(s.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = scalar_value(p, s[i]);
  return out;
}

std::vector<OracleOutcome> oracle_grid_serial(std::span<const OracleCase> cases,
                                              const QuadraturePolicy& policy) {
  std::vector<OracleOutcome> out;
  out.reserve(cases.size());
  for (const OracleCase& c : cases) out.push_back(run_oracle(c, policy));
  return out;
}

std::vector<OracleOutcome> oracle_grid(std::span<const OracleCase> cases,
                                       const QuadraturePolicy& policy) {
  std::vector<OracleOutcome> out(cases.size());
  const long n = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = run_oracle(cases[i], policy);
  return out;
}

}  // namespace propkit
