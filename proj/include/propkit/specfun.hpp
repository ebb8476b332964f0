#pragma once

// Bessel-family special functions at positive real argument for integer and
// half-integer orders.

#include <complex>

namespace propkit {

using Complex = std::complex<double>;

/// (-i)^n as an exact phase, any sign of n.
Complex minus_i_pow(int n);
/// i^n as an exact phase, any sign of n.
Complex i_pow(int n);

/// Order nu stored as 2*nu so integer and half-integer orders compare exactly.
class Order {
 public:
  constexpr explicit Order(int twice_nu) : twice_nu_(twice_nu) {}

  static constexpr Order integer(int n) { return Order(2 * n); }
  /// n + 1/2
  static constexpr Order half(int n) { return Order(2 * n + 1); }

  constexpr int twice() const { return twice_nu_; }
  constexpr double value() const { return 0.5 * twice_nu_; }
  constexpr bool is_integer() const { return twice_nu_ % 2 == 0; }
  constexpr bool is_negative() const { return twice_nu_ < 0; }
  constexpr Order negated() const { return Order(-twice_nu_); }
  /// Shift by an integer amount k (nu + k).
  constexpr Order shifted(int k) const { return Order(twice_nu_ + 2 * k); }

  friend constexpr bool operator==(Order, Order) = default;

 private:
  int twice_nu_;
};

namespace specfun {

/// Below this argument integer-order J and Y use the ascending series; at or
/// above it they use the Hankel asymptotic expansion for orders 0 and 1 and
/// three-term recurrence for higher orders.
inline constexpr double kSeriesAsymptoticSwitch = 12.0;

/// K of integer order: log series below this argument, Steed/Temme continued
/// fraction between this and kBesselKAsymptoticSwitch.
inline constexpr double kBesselKSeriesSwitch = 2.0;
inline constexpr double kBesselKAsymptoticSwitch = 25.0;

}  // namespace specfun

/// Gamma function for x > 0. Throws std::domain_error otherwise.
double gamma_fn(double x);

/// J_nu(z), z >= 0.
double bessel_j(Order nu, double z);
/// Y_nu(z), z > 0.
double bessel_y(Order nu, double z);
/// Hankel function of the second kind, H2_nu(z) = J_nu(z) - i Y_nu(z), z > 0.
Complex hankel2(Order nu, double z);
/// Modified Bessel I_nu(z) by its ascending series. Only meant for moderate z
/// (used for Wronskian checks), z >= 0.
double bessel_i(Order nu, double z);
/// Modified Bessel K_nu(z), z > 0.
double bessel_k(Order nu, double z);

// Derivatives via dC_nu/dz = (C_{nu-1} - C_{nu+1}) / 2 for C in {J, Y, H2, I
// with a plus sign}, and dK_nu/dz = -(K_{nu-1} + K_{nu+1}) / 2.
double bessel_j_derivative(Order nu, double z);
double bessel_y_derivative(Order nu, double z);
Complex hankel2_derivative(Order nu, double z);
double bessel_i_derivative(Order nu, double z);
double bessel_k_derivative(Order nu, double z);

}  // namespace propkit
