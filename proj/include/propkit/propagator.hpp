#pragma once

// Closed-form position-space Feynman propagators of free scalar and Dirac
// fields in D+1 dimensions. The i*epsilon limits are taken analytically:
// every expression reduces to Bessel functions of positive real argument times
// exact powers of i.

#include <stdexcept>

#include "propkit/clifford.hpp"
#include "propkit/specfun.hpp"

namespace propkit {

/// Raised for s = t^2 - r^2 inside the lightcone exclusion zone, where the
/// closed forms diverge. Use scalar_lightcone_asymptotic there instead.
class LightconeSingular : public std::domain_error {
 public:
  explicit LightconeSingular(const std::string& what)
      : std::domain_error(what + " (lightcone singularity; use scalar_lightcone_asymptotic)") {}
};

enum class Causality { Timelike, Spacelike, Lightlike };

inline constexpr double kDefaultLightconeTol = 1e-12;

class Interval {
 public:
  /// Requires r >= 0. Lightlike iff |s| <= tol * max(t^2, r^2, 1).
  static Interval classify(double t, double r, double tol_lc = kDefaultLightconeTol);

  double t() const { return t_; }
  double r() const { return r_; }
  double s() const { return t_ * t_ - r_ * r_; }
  Causality causality() const { return causality_; }

 private:
  Interval(double t, double r, Causality c) : t_(t), r_(r), causality_(c) {}
  double t_;
  double r_;
  Causality causality_;
};

inline Interval classify_interval(double t, double r, double tol_lc = kDefaultLightconeTol) {
  return Interval::classify(t, r, tol_lc);
}

struct ModelParams {
  int D;     ///< spatial dimension
  double m;  ///< mass
};

/// S_F = A * xslash + B * 1
struct SpinorCoefficients {
  Complex A;
  Complex B;
};

/// Massive scalar propagator, m > 0, D >= 0. D = 0 is the analytic
/// continuation of the same formula (e^{-i m sqrt(s)} / (2m) on the timelike
/// side) and is accepted on both branches as a function of s.
Complex scalar_feynman(const ModelParams& p, const Interval& iv);
/// Same, as a function of the invariant s alone (s != 0).
Complex scalar_feynman_at(const ModelParams& p, double s);

/// Exact m = 0 propagator, D >= 1. For D = 1 this is (1/4pi) ln(-1/(s - i0)),
/// defined up to the usual infrared additive constant.
Complex scalar_massless(const ModelParams& p, const Interval& iv);
Complex scalar_massless_at(int D, double s);

inline constexpr double kLightconeAsymptoticBound = 1e-3;

/// Leading mass-independent behaviour as s -> 0 (the massless propagator).
/// Requires 0 < |s| <= bound / m^2 (bound alone when m = 0).
Complex scalar_lightcone_asymptotic(const ModelParams& p, double s,
                                    double bound = kLightconeAsymptoticBound);

/// A = 2i dD_F/ds, written with the order-shifted Hankel/Bessel brackets;
/// B = m D_F. Requires D >= 1, m > 0.
SpinorCoefficients spinor_coefficients(const ModelParams& p, const Interval& iv);
SpinorCoefficients spinor_coefficients_at(const ModelParams& p, double s);

/// A * slash(x) + B * 1 with t = x^0 and r = |x_spatial|.
CMatrix spinor_feynman_matrix(const ModelParams& p, const SpacetimeVector& x,
                              const GammaRep& rep, double tol_lc = kDefaultLightconeTol);

/// Spinor coefficients rebuilt from scalar propagators in D-2, D and D+2
/// spatial dimensions:
///   A = -i (D-1)/(2s) D_F^{[D]} - i m^2/(4 pi s) D_F^{[D-2]} + i pi D_F^{[D+2]}
///   B = m D_F^{[D]}
/// Requires D >= 2.
SpinorCoefficients recurrence_rhs(const ModelParams& p, const Interval& iv);

/// The relation with a unit coefficient -i/s on the first term. Coincides
/// with recurrence_rhs (and with the spinor propagator) only for D = 3.
SpinorCoefficients recurrence_rhs_unit_coefficient(const ModelParams& p, const Interval& iv);

struct DeltaTermBreakdown {
  Complex first;   ///< H2_1(m sqrt(s - i0)) / sqrt(s - i0)
  Complex second;  ///< i H2_1(-i m sqrt(-s + i0)) / sqrt(-s + i0)
  Complex residual;
};

/// The bracket multiplying a delta(x^2) contribution in the 3+1 spinor
/// propagator; vanishes for every s != 0.
DeltaTermBreakdown delta_term_breakdown(double m, double s);
Complex delta_term_residual(double m, double s);

/// H2_nu(w) for w on the positive real axis or the negative imaginary axis,
/// the latter through H2_nu(-i z) = (2i/pi) e^{i nu pi/2} K_nu(z).
Complex hankel2_on_axes(Order nu, Complex w);

}  // namespace propkit
