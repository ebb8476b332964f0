#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "propkit/oracle.hpp"
#include "propkit/quadrature.hpp"

using namespace propkit;

namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (value)
      setenv("PROPKIT_QUAD_POLICY", value, 1);
    else
      unsetenv("PROPKIT_QUAD_POLICY");
  }
  ~EnvGuard() { unsetenv("PROPKIT_QUAD_POLICY"); }
};

}  // namespace

TEST_CASE("gauss-kronrod on known integrals") {
  const quad::Estimate poly = quad::integrate([](double x) { return Complex(x * x * x, 0.0); }, 0, 2);
  CHECK(poly.value.real() == doctest::Approx(4.0).epsilon(1e-15));
  const quad::Estimate osc =
      quad::integrate([](double x) { return std::exp(Complex(0.0, 40.0 * x)); }, 0.0, 1.0);
  const Complex want = (std::exp(Complex(0.0, 40.0)) - 1.0) / Complex(0.0, 40.0);
  CHECK(std::abs(osc.value - want) < 1e-13);
  const quad::Estimate panels = quad::integrate_panels(
      [](double lo, double u) { return Complex(std::exp(-(lo + u)), 0.0); }, 0.0, 30.0, 1.0);
  CHECK(panels.value.real() == doctest::Approx(1.0 - std::exp(-30.0)).epsilon(1e-13));
  CHECK(quad::integrate_panels([](double, double) { return Complex(1.0); }, 2.0, 1.0, 1.0).value ==
        Complex(0.0));
}

TEST_CASE("neville extrapolation is exact on polynomials") {
  const std::vector<double> h{0.4, 0.2, 0.1, 0.05};
  std::vector<Complex> v, w;
  for (double x : h) {
    v.emplace_back(3.0 - 2.0 * x + 5.0 * x * x - x * x * x, x);
    w.emplace_back(3.0 - 2.0 * x + 5.0 * x * x, 0.0);
  }
  const quad::Extrapolation e = quad::neville_to_zero(h, v);
  CHECK(std::abs(e.value - Complex(3.0, 0.0)) < 1e-12);
  // the cubic term is visible to the error estimate, the quadratic is not
  CHECK(e.error == doctest::Approx(2.0 * 0.2 * 0.1 * 0.05).epsilon(1e-9));
  CHECK(quad::neville_to_zero(h, w).error < 1e-12);
  CHECK_THROWS_AS(quad::neville_to_zero(h, std::span<const Complex>(v).first(2)),
                  std::invalid_argument);
}

TEST_CASE("parse_schedule") {
  CHECK(QuadraturePolicy::parse_schedule("0.2,0.1,0.05") == std::vector<double>{0.2, 0.1, 0.05});
  CHECK(QuadraturePolicy::parse_schedule(" 0.3 , 0.1 ") == std::vector<double>{0.3, 0.1});
  CHECK_THROWS_AS(QuadraturePolicy::parse_schedule("0.1,0.2"), std::invalid_argument);
  CHECK_THROWS_AS(QuadraturePolicy::parse_schedule("0.1,0.1"), std::invalid_argument);
  CHECK_THROWS_AS(QuadraturePolicy::parse_schedule("0.1,-0.2"), std::invalid_argument);
  CHECK_THROWS_AS(QuadraturePolicy::parse_schedule("0.1,abc"), std::invalid_argument);
  CHECK_THROWS_AS(QuadraturePolicy::parse_schedule("0.1x,0.05"), std::invalid_argument);
  CHECK_THROWS_AS(QuadraturePolicy::parse_schedule("0.1"), std::invalid_argument);
  CHECK_THROWS_AS(QuadraturePolicy::parse_schedule(""), std::invalid_argument);
}

TEST_CASE("policy from the environment") {
  {
    EnvGuard g(nullptr);
    CHECK(QuadraturePolicy::from_environment().damping_schedule ==
          QuadraturePolicy{}.damping_schedule);
  }
  {
    EnvGuard g("0.3,0.15,0.075");
    CHECK(QuadraturePolicy::from_environment().damping_schedule ==
          std::vector<double>{0.3, 0.15, 0.075});
  }
  {
    EnvGuard g("0.1,0.3");
    CHECK_THROWS_AS(QuadraturePolicy::from_environment(), std::invalid_argument);
  }
}

TEST_CASE("oracle on the spacelike axis, D = 2 and D = 3") {
  const QuadratureReport r2 = oracle_scalar_spacelike_axis({2, 1.0}, 1.0);
  CHECK(rel_err(r2.value, std::exp(-1.0) / (4 * kPi)) < 1e-6);
  CHECK(std::abs(r2.value.imag()) <= r2.extrapolated_error + 1e-15);
  const QuadratureReport r3 = oracle_scalar_spacelike_axis({3, 1.0}, 1.0);
  CHECK(rel_err(r3.value, scalar_feynman_at({3, 1.0}, -1.0)) < 1e-6);
  CHECK(r3.damping_values.size() == QuadraturePolicy{}.damping_schedule.size());
  CHECK(r3.evaluations > 0);
}

TEST_CASE("oracle on the timelike axis") {
  for (int D = 1; D <= 4; ++D) {
    const QuadratureReport r = oracle_scalar_timelike_axis({D, 1.0}, 2.0);
    CHECK_MESSAGE(rel_err(r.value, scalar_feynman_at({D, 1.0}, 4.0)) < 1e-6, "D=" << D);
    CHECK(r.extrapolated_error < 1e-4 * std::abs(r.value) + 1e-9);
  }
  const QuadratureReport d0 = oracle_scalar_timelike_axis({0, 1.0}, 3.0);
  CHECK(d0.value == std::exp(Complex(0.0, -3.0)) / 2.0);
  CHECK(oracle_scalar_timelike_axis({2, 1.0}, -2.0).value ==
        oracle_scalar_timelike_axis({2, 1.0}, 2.0).value);
}

TEST_CASE("general oracle against the closed form") {
  struct Case {
    int D;
    double m, t, r;
  };
  for (const Case c : {Case{1, 1.0, 0.3, 1.0}, Case{2, 0.7, 2.0, 0.5}, Case{3, 1.0, 0.0, 1.0},
                       Case{3, 1.5, 1.0, 2.0}, Case{4, 1.0, 3.0, 1.0}, Case{5, 0.5, 0.5, 2.5}}) {
    const QuadratureReport r = oracle_scalar_general({c.D, c.m}, c.t, c.r);
    const Complex want = scalar_feynman({c.D, c.m}, classify_interval(c.t, c.r));
    CHECK_MESSAGE(rel_err(r.value, want) < 1e-6, "D=" << c.D << " t=" << c.t << " r=" << c.r);
    CHECK(r.extrapolated_error <= 1e-4 * std::abs(r.value) + 1e-9);
  }
}

TEST_CASE("oracle is self-consistent across disjoint schedules") {
  QuadraturePolicy coarse, fine;
  coarse.damping_schedule = {0.24, 0.12, 0.06, 0.03, 0.015, 0.0075};
  fine.damping_schedule = {0.18, 0.09, 0.045, 0.0225, 0.01125, 0.005625};
  for (int D : {2, 3}) {
    const Complex a = oracle_scalar_general({D, 1.0}, 1.5, 0.7, coarse).value;
    const Complex b = oracle_scalar_general({D, 1.0}, 1.5, 0.7, fine).value;
    CHECK(std::abs(a - b) < 1e-5 * std::abs(a));
  }
}

TEST_CASE("oracle reports convergence failure") {
  QuadraturePolicy rough;
  rough.damping_schedule = {2.0, 1.5};
  rough.max_rel_error = 1e-12;
  rough.max_abs_error = 0.0;
  try {
    (void)oracle_scalar_general({3, 1.0}, 2.0, 1.0, rough);
    FAIL("expected ConvergenceFailure");
  } catch (const ConvergenceFailure& e) {
    CHECK(e.report().damping_values.size() == 2);
    CHECK(e.report().extrapolated_error > 0.0);
  }
}

TEST_CASE("oracle argument checks") {
  CHECK_THROWS_AS(oracle_scalar_general({3, 1.0}, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(oracle_scalar_general({0, 1.0}, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(oracle_scalar_general({3, 0.0}, 1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(oracle_scalar_timelike_axis({3, 1.0}, 0.0), std::domain_error);
  CHECK_THROWS_AS(oracle_scalar_spacelike_axis({3, 1.0}, -1.0), std::domain_error);
  QuadraturePolicy empty;
  empty.damping_schedule.clear();
  CHECK_THROWS_AS(oracle_scalar_spacelike_axis({3, 1.0}, 1.0, empty), std::invalid_argument);
}

TEST_CASE("dirac_fd_check matches the spinor propagator, defect shrinks with the step") {
  for (int D = 1; D <= 4; ++D) {
    const GammaRep g = build_gamma(D + 1);
    std::vector<double> x(D + 1, 0.0);
    x[0] = 1.7;
    x[1] = 0.4;
    if (D > 1) x[2] = -0.3;
    const SpacetimeVector v{x};
    const ModelParams p{D, 1.2};
    const CMatrix closed = spinor_feynman_matrix(p, v, g);
    const double scale = closed.cwiseAbs().maxCoeff();
    auto defect = [&](double h) { return (dirac_fd_check(p, v, g, h) - closed).cwiseAbs().maxCoeff(); };
    const double coarse = defect(1e-2), finer = defect(5e-3);
    CHECK(coarse / scale < 1e-3);
    CHECK(finer / coarse == doctest::Approx(0.25).epsilon(0.05));
    CHECK(defect(default_fd_step(p.m)) / scale < 1e-5);
  }
}

TEST_CASE("dirac_fd_check argument checks and step rules") {
  const GammaRep g = build_gamma(4);
  CHECK_THROWS_AS(dirac_fd_check({3, 1.0}, {{1.0, 0.99, 0, 0}}, g, 1e-3), std::domain_error);
  CHECK_THROWS_AS(dirac_fd_check({3, 1.0}, {{2.0, 1.0, 0, 0}}, g, 0.0), std::domain_error);
  CHECK_THROWS_AS(dirac_fd_check({2, 1.0}, {{2.0, 1.0, 0, 0}}, g, 1e-4), std::domain_error);
  CHECK(default_fd_step(2.0) == 1e-4);
  CHECK(default_fd_step(0.25) == doctest::Approx(4e-4));
  CHECK(lightcone_fd_step(1.0, 3.0, 0.0) == 1e-4);
  CHECK(lightcone_fd_step(1.0, 2.0, std::sqrt(3.9)) == doctest::Approx(1e-4 * 0.1 / 2.0));
}
