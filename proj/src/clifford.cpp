#include "propkit/clifford.hpp"

#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace propkit {

namespace {

using C = std::complex<double>;

CMatrix pauli(int which) {
  CMatrix m(2, 2);
  switch (which) {
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, C(0, -1), C(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

std::vector<CMatrix> even_family(int n) {
  if (n == 2) return {pauli(1), C(0, 1) * pauli(2)};
  const std::vector<CMatrix> lower = even_family(n - 2);
  const CMatrix id = CMatrix::Identity(lower.front().rows(), lower.front().cols());
  std::vector<CMatrix> out;
  out.reserve(n);
  for (const auto& g : lower) out.emplace_back(Eigen::kroneckerProduct(g, pauli(3)));
  out.emplace_back(Eigen::kroneckerProduct(id, CMatrix(C(0, 1) * pauli(1))));
  out.emplace_back(Eigen::kroneckerProduct(id, CMatrix(C(0, 1) * pauli(2))));
  return out;
}

}  // namespace

double SpacetimeVector::spatial_norm() const {
  double sum = 0.0;
  for (std::size_t i = 1; i < components.size(); ++i) sum += components[i] * components[i];
  return std::sqrt(sum);
}

double SpacetimeVector::minkowski_square() const {
  double sum = components.front() * components.front();
  for (std::size_t i = 1; i < components.size(); ++i) sum -= components[i] * components[i];
  return sum;
}

GammaRep::GammaRep(int spacetime_dim, std::vector<CMatrix> matrices)
    : spacetime_dim_(spacetime_dim), matrices_(std::move(matrices)) {
  if (static_cast<int>(matrices_.size()) != spacetime_dim_ || matrices_.empty())
    throw std::invalid_argument("GammaRep: matrix count must equal spacetime dimension");
}

GammaRep build_gamma(int spacetime_dim) {
  if (spacetime_dim < kMinSpacetimeDim || spacetime_dim > kMaxSpacetimeDim)
    throw std::domain_error("build_gamma: spacetime dimension must be in [2, 12]");
  if (spacetime_dim % 2 == 0) return GammaRep(spacetime_dim, even_family(spacetime_dim));

  std::vector<CMatrix> gammas = even_family(spacetime_dim - 1);
  CMatrix chir = gammas.front();
  for (std::size_t mu = 1; mu < gammas.size(); ++mu) chir = chir * gammas[mu];
  // (gamma^0 ... gamma^{2k-1})^2 = (-1)^{k+1}; multiply by i when k is odd
  const int k = (spacetime_dim - 1) / 2;
  if (k % 2 == 1) chir *= C(0, 1);
  gammas.push_back(std::move(chir));
  return GammaRep(spacetime_dim, std::move(gammas));
}

CMatrix slash(const SpacetimeVector& x, const GammaRep& rep) {
  if (x.spacetime_dim() != rep.spacetime_dim())
    throw std::domain_error("slash: vector length does not match representation");
  const int size = rep.matrix_size();
  CMatrix out = CMatrix::Zero(size, size);
  for (int mu = 0; mu < rep.spacetime_dim(); ++mu)
    out += (GammaRep::metric(mu) * x.components[mu]) * rep[mu];
  return out;
}

CliffordReport anticommutator_check(const GammaRep& rep) {
  CliffordReport report;
  const int n = rep.spacetime_dim();
  const int size = rep.matrix_size();
  const CMatrix id = CMatrix::Identity(size, size);
  auto fail = [&](int mu, int nu, std::string what) {
    report.pass = false;
    report.violations.push_back({mu, nu, std::move(what)});
  };
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = mu; nu < n; ++nu) {
      ++report.pairs_checked;
      const CMatrix anti = rep[mu] * rep[nu] + rep[nu] * rep[mu];
      const CMatrix expected = (mu == nu ? 2.0 * GammaRep::metric(mu) : 0.0) * id;
      if (anti != expected)
        fail(mu, nu, mu == nu ? "square is not eta^{mu mu} times identity"
                              : "anticommutator does not vanish");
    }
    if (rep[mu].trace() != C(0.0, 0.0)) fail(mu, mu, "nonzero trace");
    const CMatrix adj = rep[mu].adjoint();
    if (mu == 0 ? adj != rep[mu] : adj != -rep[mu])
      fail(mu, mu, mu == 0 ? "gamma^0 not Hermitian" : "gamma^i not anti-Hermitian");
  }
  return report;
}

}  // namespace propkit
