#include "propkit/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace propkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

void require_massive(const ModelParams& p, int min_D, const char* fn) {
  if (p.D < min_D)
    throw std::domain_error(std::string(fn) + ": spatial dimension D = " + std::to_string(p.D) +
                            " below minimum " + std::to_string(min_D));
  if (!(p.m > 0.0)) throw std::domain_error(std::string(fn) + ": requires m > 0");
}

void require_nonzero(double s, const char* fn) {
  if (s == 0.0) throw LightconeSingular(std::string(fn) + ": s = 0");
}

void require_off_lightcone(const Interval& iv, const char* fn) {
  if (iv.causality() == Causality::Lightlike)
    throw LightconeSingular(std::string(fn) + ": interval is lightlike (s = " +
                            std::to_string(iv.s()) + ")");
}

// e^{i nu pi / 2} = e^{i pi twice / 4}, exact on the axes
Complex half_order_phase(Order nu) {
  constexpr double h = std::numbers::sqrt2 / 2.0;
  static constexpr Complex table[8] = {{1, 0}, {h, h}, {0, 1}, {-h, h}, {-1, 0}, {-h, -h}, {0, -1}, {h, -h}};
  return table[((nu.twice() % 8) + 8) % 8];
}

Complex sqrt_minus_i0(double s) {
  return s > 0.0 ? Complex(std::sqrt(s), 0.0) : Complex(0.0, -std::sqrt(-s));
}

Complex sqrt_plus_i0(double s) {
  return s > 0.0 ? Complex(std::sqrt(s), 0.0) : Complex(0.0, std::sqrt(-s));
}

// 1/w for w on the real or imaginary axis, without complex division
Complex reciprocal_on_axis(Complex w) {
  if (w.imag() == 0.0) return {1.0 / w.real(), 0.0};
  return {0.0, -1.0 / w.imag()};
}

}  // namespace

Interval Interval::classify(double t, double r, double tol_lc) {
  if (!(r >= 0.0)) throw std::domain_error("classify_interval: r must be nonnegative");
  const double s = t * t - r * r;
  const double scale = std::max({t * t, r * r, 1.0});
  Causality c = Causality::Lightlike;
  if (s > tol_lc * scale) {
    c = Causality::Timelike;
  } else if (s < -tol_lc * scale) {
    c = Causality::Spacelike;
  }
  return Interval(t, r, c);
}

Complex scalar_feynman_at(const ModelParams& p, double s) {
  require_massive(p, 0, "scalar_feynman");
  require_nonzero(s, "scalar_feynman");
  const int D = p.D;
  const double m = p.m;
  const Order nu(D - 1);
  const double half_nu = 0.5 * (D - 1);
  if (s > 0.0) {
    const double pref = std::pow(m, half_nu) /
                        (std::pow(2.0, 0.5 * (D + 3)) * std::pow(kPi, half_nu) *
                         std::pow(s, 0.25 * (D - 1)));
    return minus_i_pow(D) * pref * hankel2(nu, m * std::sqrt(s));
  }
  const double u = -s;
  const double pref = std::pow(m, half_nu) /
                      (std::pow(2.0 * kPi, 0.5 * (D + 1)) * std::pow(u, 0.25 * (D - 1)));
  return {pref * bessel_k(nu, m * std::sqrt(u)), 0.0};
}

Complex scalar_feynman(const ModelParams& p, const Interval& iv) {
  require_off_lightcone(iv, "scalar_feynman");
  return scalar_feynman_at(p, iv.s());
}

Complex scalar_massless_at(int D, double s) {
  if (D < 1) throw std::domain_error("scalar_massless: requires D >= 1");
  require_nonzero(s, "scalar_massless");
  if (D == 1) {
    // (1/4pi) ln(-1/(s - i0)): real for s < 0, imaginary part -pi for s > 0
    if (s < 0.0) return {-std::log(-s) / (4.0 * kPi), 0.0};
    return Complex(-std::log(s), -kPi) / (4.0 * kPi);
  }
  const double a = 0.5 * (D - 1);
  const double pref = std::tgamma(a) / (4.0 * std::pow(kPi, 0.5 * (D + 1)));
  if (s < 0.0) return {pref * std::pow(-s, -a), 0.0};
  // (-1/(s - i0))^a = e^{-i pi a} s^{-a} and e^{-i pi (D-1)/2} = (-i)^{D-1}
  return minus_i_pow(D - 1) * (pref * std::pow(s, -a));
}

Complex scalar_massless(const ModelParams& p, const Interval& iv) {
  if (p.m != 0.0) throw std::domain_error("scalar_massless: requires m = 0");
  require_off_lightcone(iv, "scalar_massless");
  return scalar_massless_at(p.D, iv.s());
}

Complex scalar_lightcone_asymptotic(const ModelParams& p, double s, double bound) {
  if (s == 0.0) throw std::domain_error("scalar_lightcone_asymptotic: s must be nonzero");
  const double limit = p.m > 0.0 ? bound / (p.m * p.m) : bound;
  if (std::abs(s) > limit)
    throw std::domain_error("scalar_lightcone_asymptotic: |s| outside asymptotic region");
  return scalar_massless_at(p.D, s);
}

SpinorCoefficients spinor_coefficients_at(const ModelParams& p, double s) {
  require_massive(p, 1, "spinor_coefficients");
  require_nonzero(s, "spinor_coefficients");
  const int D = p.D;
  const double m = p.m;
  const Order lo(D - 3);
  const Order hi(D + 1);
  const double mpow = std::pow(m, 0.5 * (D + 1));
  Complex bracket;
  if (s > 0.0) {
    const double z = m * std::sqrt(s);
    const double pref = mpow / (std::pow(2.0, 0.5 * (D + 5)) * std::pow(kPi, 0.5 * (D - 1)) *
                                std::pow(s, 0.25 * (D + 1)));
    bracket = minus_i_pow(D - 1) * pref * (hankel2(lo, z) - hankel2(hi, z));
  } else {
    const double u = -s;
    const double z = m * std::sqrt(u);
    const double pref = mpow / (std::pow(2.0, 0.5 * (D + 3)) * std::pow(kPi, 0.5 * (D + 1)) *
                                std::pow(u, 0.25 * (D + 1)));
    bracket = kI * pref * (bessel_k(lo, z) + bessel_k(hi, z));
  }
  const Complex df = scalar_feynman_at(p, s);
  const Complex a = bracket - kI * (0.5 * (D - 1) / s) * df;
  return {a, m * df};
}

SpinorCoefficients spinor_coefficients(const ModelParams& p, const Interval& iv) {
  require_off_lightcone(iv, "spinor_coefficients");
  return spinor_coefficients_at(p, iv.s());
}

CMatrix spinor_feynman_matrix(const ModelParams& p, const SpacetimeVector& x,
                              const GammaRep& rep, double tol_lc) {
  if (rep.spacetime_dim() != p.D + 1 || x.spacetime_dim() != p.D + 1)
    throw std::domain_error("spinor_feynman_matrix: dimension mismatch");
  const Interval iv = Interval::classify(x.time(), x.spatial_norm(), tol_lc);
  const SpinorCoefficients c = spinor_coefficients(p, iv);
  const int size = rep.matrix_size();
  return c.A * slash(x, rep) + c.B * CMatrix::Identity(size, size);
}

namespace {

SpinorCoefficients recurrence_with(const ModelParams& p, const Interval& iv, double lead) {
  if (p.D < 2) throw std::domain_error("recurrence_rhs: requires D >= 2");
  require_massive(p, 2, "recurrence_rhs");
  require_off_lightcone(iv, "recurrence_rhs");
  const double s = iv.s();
  const double m = p.m;
  const Complex df = scalar_feynman_at(p, s);
  const Complex df_lower = scalar_feynman_at({p.D - 2, m}, s);
  const Complex df_upper = scalar_feynman_at({p.D + 2, m}, s);
  const Complex a = -kI * (lead / s) * df - kI * (m * m / (4.0 * kPi * s)) * df_lower +
                    kI * kPi * df_upper;
  return {a, m * df};
}

}  // namespace

SpinorCoefficients recurrence_rhs(const ModelParams& p, const Interval& iv) {
  return recurrence_with(p, iv, 0.5 * (p.D - 1));
}

SpinorCoefficients recurrence_rhs_unit_coefficient(const ModelParams& p, const Interval& iv) {
  return recurrence_with(p, iv, 1.0);
}

Complex hankel2_on_axes(Order nu, Complex w) {
  if (w.imag() == 0.0 && w.real() > 0.0) return hankel2(nu, w.real());
  if (w.real() == 0.0 && w.imag() < 0.0)
    return (2.0 * kI / kPi) * half_order_phase(nu) * bessel_k(nu, -w.imag());
  throw std::domain_error("hankel2_on_axes: argument must lie on (0, inf) or -i(0, inf)");
}

DeltaTermBreakdown delta_term_breakdown(double m, double s) {
  if (s == 0.0) throw std::domain_error("delta_term_residual: s must be nonzero");
  if (!(m > 0.0)) throw std::domain_error("delta_term_residual: requires m > 0");
  const Order one = Order::integer(1);
  const Complex root_a = sqrt_minus_i0(s);
  const Complex root_b = sqrt_plus_i0(-s);
  const Complex first = hankel2_on_axes(one, m * root_a) * reciprocal_on_axis(root_a);
  const Complex second = kI * reciprocal_on_axis(root_b) * hankel2_on_axes(one, -kI * m * root_b);
  return {first, second, first - second};
}

Complex delta_term_residual(double m, double s) { return delta_term_breakdown(m, s).residual; }

}  // namespace propkit
