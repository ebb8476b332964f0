#pragma once

// Ground truth for the closed forms: the defining momentum-space integrals,
// damped by exp(-delta * phase variable), integrated numerically for a
// schedule of delta values and extrapolated to delta -> 0.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "propkit/clifford.hpp"
#include "propkit/propagator.hpp"

namespace propkit {

struct QuadraturePolicy {
  /// Damping parameters, strictly decreasing.
  std::vector<double> damping_schedule{0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625};
  /// Integration range ends where the damped envelope drops below this.
  double envelope_cutoff = 1e-12;
  double panel_abs_tol = 1e-14;
  double panel_rel_tol = 1e-11;
  /// ConvergenceFailure when extrapolated_error > max_rel_error * |value| + max_abs_error.
  double max_rel_error = 1e-4;
  double max_abs_error = 1e-9;

  /// Default policy with the schedule replaced by $PROPKIT_QUAD_POLICY (a
  /// comma-separated list) when set. Throws std::invalid_argument on a
  /// malformed list.
  static QuadraturePolicy from_environment();
  /// Parses "0.2,0.1,0.05"; values must be positive and strictly decreasing.
  static std::vector<double> parse_schedule(const std::string& text);
};

struct QuadratureReport {
  Complex value{};
  std::vector<std::pair<double, Complex>> damping_values;
  double extrapolated_error = 0.0;
  long evaluations = 0;
};

class ConvergenceFailure : public std::runtime_error {
 public:
  ConvergenceFailure(const std::string& what, QuadratureReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const QuadratureReport& report() const { return report_; }

 private:
  QuadratureReport report_;
};

/// D_F(t, r) from the one-dimensional radial form with damping exp(-delta m x),
///   m^{D/2} / (2 (2pi)^{D/2} r^{D/2-1}) int_1^inf dx (x^2-1)^{(D/2-1)/2}
///     J_{D/2-1}(m r sqrt(x^2-1)) e^{-i m |t| x},
/// Requires m > 0, D >= 1, r > 0.
QuadratureReport oracle_scalar_general(const ModelParams& p, double t, double r,
                                       const QuadraturePolicy& policy = {});

/// D_F(t, 0) from the radial momentum integral (no angular reduction), with
/// damping exp(-delta E |t|). D = 0 is returned exactly.
QuadratureReport oracle_scalar_timelike_axis(const ModelParams& p, double t,
                                             const QuadraturePolicy& policy = {});

/// D_F(0, r) from the momentum integral over p with damping exp(-delta p).
QuadratureReport oracle_scalar_spacelike_axis(const ModelParams& p, double r,
                                              const QuadraturePolicy& policy = {});

inline double default_fd_step(double m) { return 1e-4 * std::max(1.0, m > 0.0 ? 1.0 / m : 1.0); }

/// default_fd_step shrunk by |s| / max(|t|, r) when that is below one, so the
/// step stays small against the distance to the lightcone.
inline double lightcone_fd_step(double m, double t, double r) {
  const double reach = std::max(std::abs(t), r);
  const double s = std::abs(t * t - r * r);
  return default_fd_step(m) * (reach > 0.0 ? std::min(1.0, s / reach) : 1.0);
}

/// (i gamma^mu d_mu + m) D_F by central differences of the scalar closed form
/// in t and r, with d_i = (x^i / r) d_r.
CMatrix dirac_fd_check(const ModelParams& p, const SpacetimeVector& x, const GammaRep& rep,
                       double h);

}  // namespace propkit
