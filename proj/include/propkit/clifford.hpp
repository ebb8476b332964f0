#pragma once

// Gamma matrices for the Clifford algebra of (n-1)+1 dimensional Minkowski
// space with metric diag(+1, -1, ..., -1).

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

namespace propkit {

using CMatrix = Eigen::MatrixXcd;

/// Contravariant components x^mu = (t, x^1, ..., x^D).
struct SpacetimeVector {
  std::vector<double> components;

  int spacetime_dim() const { return static_cast<int>(components.size()); }
  double time() const { return components.front(); }
  /// Euclidean norm of the spatial part.
  double spatial_norm() const;
  /// x.x = t^2 - |x|^2
  double minkowski_square() const;
};

class GammaRep {
 public:
  GammaRep(int spacetime_dim, std::vector<CMatrix> matrices);

  int spacetime_dim() const { return spacetime_dim_; }
  int matrix_size() const { return static_cast<int>(matrices_.front().rows()); }
  const CMatrix& operator[](int mu) const { return matrices_[mu]; }
  std::span<const CMatrix> matrices() const { return matrices_; }

  /// eta^{mu mu}
  static double metric(int mu) { return mu == 0 ? 1.0 : -1.0; }

 private:
  int spacetime_dim_;
  std::vector<CMatrix> matrices_;
};

inline constexpr int kMinSpacetimeDim = 2;
inline constexpr int kMaxSpacetimeDim = 12;

/// Tensor-product construction:
///   n = 2:   gamma^0 = sigma_1, gamma^1 = i sigma_2
///   n = 2k:  G^mu (x) sigma_3 for the n-2 family, then 1 (x) i sigma_1 and
///            1 (x) i sigma_2
///   n odd:   the n-1 family plus its normalized chirality product.
/// Entries are exactly 0, +-1, +-i. gamma^0 is Hermitian, gamma^i
/// anti-Hermitian. Throws std::domain_error outside [2, 12].
GammaRep build_gamma(int spacetime_dim);

/// gamma^mu x_mu = gamma^0 t - sum_i gamma^i x^i.
CMatrix slash(const SpacetimeVector& x, const GammaRep& rep);

struct CliffordViolation {
  int mu;
  int nu;
  std::string what;
};

struct CliffordReport {
  bool pass = true;
  int pairs_checked = 0;
  std::vector<CliffordViolation> violations;
};

/// Exact check of {gamma^mu, gamma^nu} = 2 eta^{mu nu}, tracelessness and the
/// Hermiticity convention.
CliffordReport anticommutator_check(const GammaRep& rep);

}  // namespace propkit
