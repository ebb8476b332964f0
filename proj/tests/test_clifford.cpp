#include <doctest.h>

#include <complex>
#include <random>
#include <stdexcept>

#include "propkit/clifford.hpp"

using namespace propkit;

namespace {

CMatrix identity(int n) { return CMatrix::Identity(n, n); }

bool entries_are_units(const CMatrix& g) {
  for (int i = 0; i < g.rows(); ++i)
    for (int k = 0; k < g.cols(); ++k) {
      const std::complex<double> z = g(i, k);
      const bool unit = (z.real() == 0.0 || std::abs(z.real()) == 1.0) &&
                        (z.imag() == 0.0 || std::abs(z.imag()) == 1.0) &&
                        (z.real() == 0.0 || z.imag() == 0.0);
      if (!unit) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("build_gamma sizes") {
  CHECK(build_gamma(2).matrix_size() == 2);
  CHECK(build_gamma(4).matrix_size() == 4);
  CHECK(build_gamma(5).matrix_size() == 4);
  CHECK(build_gamma(5).spacetime_dim() == 5);
  CHECK(build_gamma(12).matrix_size() == 64);
  CHECK_THROWS_AS(build_gamma(1), std::domain_error);
  CHECK_THROWS_AS(build_gamma(13), std::domain_error);
}

TEST_CASE("defining relations in 1+1") {
  const GammaRep g = build_gamma(2);
  CHECK(g[0] * g[1] + g[1] * g[0] == CMatrix::Zero(2, 2));
  CHECK(g[0] * g[0] == identity(2));
  CHECK(g[1] * g[1] == -identity(2));
}

TEST_CASE("anticommutator_check passes in every supported dimension") {
  for (int n = kMinSpacetimeDim; n <= kMaxSpacetimeDim; ++n) {
    const GammaRep g = build_gamma(n);
    const CliffordReport report = anticommutator_check(g);
    CHECK_MESSAGE(report.pass, "n = " << n);
    CHECK(report.pairs_checked == n * (n + 1) / 2);
    CHECK(report.violations.empty());
    for (int mu = 0; mu < n; ++mu) {
      CHECK(entries_are_units(g[mu]));
      CHECK(g[mu].trace() == std::complex<double>(0.0, 0.0));
      if (mu == 0) {
        CHECK(g[mu].adjoint() == g[mu]);
      } else {
        CHECK(g[mu].adjoint() == -g[mu]);
      }
    }
  }
}

TEST_CASE("anticommutator_check reports a broken representation") {
  const GammaRep good = build_gamma(4);
  std::vector<CMatrix> mats(good.matrices().begin(), good.matrices().end());
  mats[1].setZero();
  const CliffordReport report = anticommutator_check(GammaRep(4, mats));
  CHECK_FALSE(report.pass);
  bool saw_square = false;
  for (const auto& v : report.violations)
    if (v.mu == 1 && v.nu == 1) saw_square = true;
  CHECK(saw_square);
}

TEST_CASE("golden matrices for 1+1 and 2+1") {
  using C = std::complex<double>;
  const GammaRep g2 = build_gamma(2);
  CMatrix s1(2, 2), is2(2, 2);
  s1 << 0, 1, 1, 0;
  is2 << 0, 1, -1, 0;
  CHECK(g2[0] == s1);
  CHECK(g2[1] == is2);
  // odd dimension: the chirality element squares to -1 and is diagonal here
  const GammaRep g3 = build_gamma(3);
  CHECK(g3[0] == s1);
  CHECK(g3[1] == is2);
  CMatrix chi(2, 2);
  chi << C(0, 1), 0, 0, C(0, -1);
  CHECK((g3[2] == chi || g3[2] == -chi));
}

TEST_CASE("slash examples") {
  for (int n : {2, 4, 5}) {
    const GammaRep g = build_gamma(n);
    std::vector<double> e0(n, 0.0);
    e0[0] = 1.0;
    CHECK(slash({e0}, g) == g[0]);
    CHECK(slash({std::vector<double>(n, 0.0)}, g) == CMatrix::Zero(g.matrix_size(), g.matrix_size()));
    std::vector<double> x(n, 0.0);
    x[0] = 1.5;
    x[1] = 0.5;
    const CMatrix xs = slash({x}, g);
    CHECK((xs * xs - (1.5 * 1.5 - 0.5 * 0.5) * identity(g.matrix_size())).norm() < 1e-14);
  }
  const GammaRep g2 = build_gamma(2);
  // purely spatial 1+1 vector: -x^1 gamma^1
  CHECK(slash({{0.0, 2.0}}, g2) == -2.0 * g2[1]);
  CHECK_THROWS_AS(slash({{1.0, 2.0, 3.0}}, g2), std::domain_error);
}

TEST_CASE("slash squares to the Minkowski norm for random vectors") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int n = kMinSpacetimeDim; n <= kMaxSpacetimeDim; ++n) {
    const GammaRep g = build_gamma(n);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      std::vector<double> x(n);
      for (double& c : x) c = u(rng);
      const SpacetimeVector v{x};
      const CMatrix xs = slash(v, g);
      worst = std::max(worst, (xs * xs - v.minkowski_square() * identity(g.matrix_size()))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    CHECK_MESSAGE(worst < 1e-12, "n = " << n << " worst " << worst);
  }
}

TEST_CASE("slash is linear") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n : {2, 3, 6, 9}) {
    const GammaRep g = build_gamma(n);
    std::vector<double> x(n), y(n), comb(n);
    for (int i = 0; i < n; ++i) {
      x[i] = u(rng);
      y[i] = u(rng);
    }
    const double a = 0.75, b = -1.25;  // exactly representable scalings
    for (int i = 0; i < n; ++i) comb[i] = a * x[i] + b * y[i];
    const CMatrix lhs = slash({comb}, g);
    const CMatrix rhs = a * slash({x}, g) + b * slash({y}, g);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
  }
}
