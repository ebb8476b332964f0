#pragma once

// Adaptive Gauss-Kronrod (7, 15) quadrature for complex-valued integrands and
// Neville polynomial extrapolation to zero.

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace propkit::quad {

using Complex = std::complex<double>;

struct Tolerance {
  double abs = 1e-14;
  double rel = 1e-11;  ///< relative to the panel's L1 norm
  int max_depth = 30;
};

struct Estimate {
  Complex value{};
  double error = 0.0;
  double l1 = 0.0;
  long evaluations = 0;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights attach to the odd-indexed Kronrod nodes (1, 3, 5, 7).
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
Estimate gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const Complex fc = f(c);
  Complex kron = kKronrodWeights[7] * fc;
  Complex gauss = kGaussWeights[3] * fc;
  double l1 = kKronrodWeights[7] * std::abs(fc);
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kKronrodNodes[i];
    const Complex f1 = f(c - dx);
    const Complex f2 = f(c + dx);
    kron += kKronrodWeights[i] * (f1 + f2);
    l1 += kKronrodWeights[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (f1 + f2);
  }
  return {kron * h, std::abs((kron - gauss) * h), l1 * std::abs(h), 15};
}

template <class F>
Estimate adapt(F& f, double a, double b, const Tolerance& tol, int depth) {
  Estimate e = gk15(f, a, b);
  if (e.error <= std::max(tol.abs, tol.rel * e.l1) || depth >= tol.max_depth) return e;
  const double mid = 0.5 * (a + b);
  const Estimate left = adapt(f, a, mid, tol, depth + 1);
  const Estimate right = adapt(f, mid, b, tol, depth + 1);
  return {left.value + right.value, left.error + right.error, left.l1 + right.l1,
          e.evaluations + left.evaluations + right.evaluations};
}

}  // namespace detail

/// Adaptive bisection on a single interval.
template <class F>
Estimate integrate(F&& f, double a, double b, const Tolerance& tol = {}) {
  return detail::adapt(f, a, b, tol, 0);
}

/// Split [a, b] into equal panels no longer than max_panel, each integrated
/// adaptively. The integrand is called as f(lo, u) for the point lo + u with
/// lo the panel start and 0 <= u <= width, so fast phases can be evaluated
/// without the rounding of large absolute abscissae.
template <class F>
Estimate integrate_panels(F&& f, double a, double b, double max_panel, const Tolerance& tol = {}) {
  if (!(b > a)) return {};
  const long count = std::max(1L, static_cast<long>(std::ceil((b - a) / max_panel)));
  const double width = (b - a) / static_cast<double>(count);
  Estimate total;
  for (long k = 0; k < count; ++k) {
    const double lo = a + width * static_cast<double>(k);
    const double hi = (k + 1 == count) ? b : a + width * static_cast<double>(k + 1);
    auto local = [&](double u) { return f(lo, u); };
    const Estimate e = detail::adapt(local, 0.0, hi - lo, tol, 0);
    total.value += e.value;
    total.error += e.error;
    total.l1 += e.l1;
    total.evaluations += e.evaluations;
  }
  return total;
}

struct Extrapolation {
  Complex value{};
  double error = 0.0;
};

/// Neville extrapolation of values[i] = F(steps[i]) to F(0). The steps are
/// expected in decreasing order. The error is twice the distance between the
/// full-order estimate and the one built without the largest step.
inline Extrapolation neville_to_zero(std::span<const double> steps, std::span<const Complex> values) {
  const std::size_t n = steps.size();
  if (n == 0 || values.size() != n) throw std::invalid_argument("neville_to_zero: size mismatch");
  if (n == 1) return {values[0], std::abs(values[0])};
  // table[i] holds the polynomial through points i..i+j, evaluated at zero
  std::vector<Complex> table(values.begin(), values.end());
  std::vector<Complex> previous_column;
  for (std::size_t j = 1; j < n; ++j) {
    previous_column = table;
    for (std::size_t i = 0; i + j < n; ++i) {
      const double hi = steps[i];
      const double hj = steps[i + j];
      table[i] = (hi * previous_column[i + 1] - hj * previous_column[i]) / (hi - hj);
    }
  }
  // previous_column[1] used points 1..n-1
  return {table[0], 2.0 * std::abs(table[0] - previous_column[1])};
}

}  // namespace propkit::quad
