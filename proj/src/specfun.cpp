#include "propkit/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace propkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;
constexpr double kSeriesEps = 1e-17;

[[noreturn]] void domain_error(const char* fn, double z) {
  throw std::domain_error(std::string(fn) + ": argument out of domain (z = " +
                          std::to_string(z) + ")");
}

double parity_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

// --- integer order -------------------------------------------------------

// Ascending series for J_n, n >= 0.
double j_series(int n, double z) {
  const double half = 0.5 * z;
  const double q = half * half;
  double term = std::pow(half, n) / std::tgamma(n + 1.0);
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= -q / (k * static_cast<double>(n + k));
    sum += term;
    if (k > half && std::abs(term) < kSeriesEps * std::abs(sum)) break;
  }
  return sum;
}

// Series with logarithm for Y_n, n >= 0 (DLMF 10.8.1).
double y_series(int n, double z) {
  const double half = 0.5 * z;
  const double q = half * half;

  double finite = 0.0;
  if (n > 0) {
    double fact_ratio = std::tgamma(static_cast<double>(n));  // (n-1)!/0!
    double qk = 1.0;
    for (int k = 0; k < n; ++k) {
      finite += fact_ratio * qk;
      if (k + 1 < n) {
        fact_ratio /= static_cast<double>((n - k - 1) * (k + 1));
        qk *= q;
      }
    }
    finite *= -std::pow(half, -n) / kPi;
  }

  // psi(k+1) + psi(n+k+1) with psi(j+1) = -gamma + H_j
  double harm_k = 0.0;
  double harm_nk = 0.0;
  for (int j = 1; j <= n; ++j) harm_nk += 1.0 / j;
  double term = 1.0 / std::tgamma(n + 1.0);
  double sum = term * (harm_k + harm_nk - 2.0 * kEulerGamma);
  for (int k = 1; k < 500; ++k) {
    term *= -q / (k * static_cast<double>(n + k));
    harm_k += 1.0 / k;
    harm_nk += 1.0 / (n + k);
    const double contrib = term * (harm_k + harm_nk - 2.0 * kEulerGamma);
    sum += contrib;
    if (k > half && std::abs(contrib) < kSeriesEps * std::abs(sum)) break;
  }
  const double tail = -std::pow(half, n) / kPi * sum;
  return finite + (2.0 / kPi) * std::log(half) * j_series(n, z) + tail;
}

struct PQ {
  double p;
  double q;
};

// Hankel asymptotic P and Q series, truncated at the smallest term.
PQ hankel_pq(double nu, double z) {
  const double mu = 4.0 * nu * nu;
  double a = 1.0;
  double p = 1.0;
  double q = 0.0;
  double prev = 1.0;
  for (int k = 1; k < 200; ++k) {
    a *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k * z);
    const double mag = std::abs(a);
    if (mag == 0.0 || mag > prev) break;
    const double signed_term = ((k / 2) % 2 == 0) ? a : -a;
    if (k % 2 == 0) {
      p += signed_term;
    } else {
      q += signed_term;
    }
    prev = mag;
    if (mag < kSeriesEps) break;
  }
  return {p, q};
}

struct JY {
  double j;
  double y;
};

JY jy_asymptotic(int n, double z) {
  const auto [p, q] = hankel_pq(n, z);
  // omega = z - (n/2 + 1/4) pi; expand to keep z exact in the trig calls
  const double phase = (0.5 * n + 0.25) * kPi;
  const double cz = std::cos(z);
  const double sz = std::sin(z);
  const double cp = std::cos(phase);
  const double sp = std::sin(phase);
  const double cw = cz * cp + sz * sp;
  const double sw = sz * cp - cz * sp;
  const double amp = std::sqrt(2.0 / (kPi * z));
  return {amp * (p * cw - q * sw), amp * (p * sw + q * cw)};
}

double j_integer(int n, double z) {
  if (z == 0.0) return n == 0 ? 1.0 : 0.0;
  if (z < specfun::kSeriesAsymptoticSwitch || n > z) return j_series(n, z);
  const double j0 = jy_asymptotic(0, z).j;
  if (n == 0) return j0;
  double prev = j0;
  double cur = jy_asymptotic(1, z).j;
  for (int k = 1; k < n; ++k) {
    const double next = (2.0 * k / z) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double y_integer(int n, double z) {
  double y0;
  double y1;
  if (z < specfun::kSeriesAsymptoticSwitch) {
    y0 = y_series(0, z);
    if (n == 0) return y0;
    y1 = y_series(1, z);
  } else {
    y0 = jy_asymptotic(0, z).y;
    if (n == 0) return y0;
    y1 = jy_asymptotic(1, z).y;
  }
  double prev = y0;
  double cur = y1;
  for (int k = 1; k < n; ++k) {
    const double next = (2.0 * k / z) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// --- half-integer order (nu = n + 1/2, n >= 0) ---------------------------

double j_half(int n, double z) {
  if (z == 0.0) return 0.0;
  const double amp = std::sqrt(2.0 / (kPi * z));
  const double jm = amp * std::cos(z);  // J_{-1/2}
  const double jp = amp * std::sin(z);  // J_{1/2}
  if (n == 0) return jp;
  const double nu = n + 0.5;
  if (nu <= z) {
    double prev = jm;
    double cur = jp;
    for (int k = 0; k < n; ++k) {
      const double order = k + 0.5;
      const double next = (2.0 * order / z) * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  // Miller backward recurrence from a high starting order.
  const int top_base = std::max(n, static_cast<int>(z));
  const int top = top_base + 20 + static_cast<int>(std::sqrt(40.0 * top_base));
  double f_next = 0.0;
  double f_cur = 1e-300;
  double f_target = 0.0;
  double f_half = 0.0;
  for (int k = top; k >= 0; --k) {
    // f_cur holds f_{k+1/2}
    if (std::abs(f_cur) > 1e250) {
      f_cur *= 1e-250;
      f_next *= 1e-250;
      f_target *= 1e-250;
    }
    if (k == n) f_target = f_cur;
    if (k == 0) f_half = f_cur;
    const double order = k + 0.5;
    const double f_prev = (2.0 * order / z) * f_cur - f_next;  // f_{k-1/2}
    f_next = f_cur;
    f_cur = f_prev;
  }
  const double f_mhalf = f_cur;
  const double scale =
      (std::abs(jp) > std::abs(jm)) ? jp / f_half : jm / f_mhalf;
  return f_target * scale;
}

double y_half(int n, double z) {
  const double amp = std::sqrt(2.0 / (kPi * z));
  const double ym = amp * std::sin(z);   // Y_{-1/2} = J_{1/2}
  const double yp = -amp * std::cos(z);  // Y_{1/2} = -J_{-1/2}
  double prev = ym;
  double cur = yp;
  for (int k = 0; k < n; ++k) {
    const double order = k + 0.5;
    const double next = (2.0 * order / z) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// --- modified Bessel K ---------------------------------------------------

// DLMF 10.31.1
double k_series(int n, double z) {
  const double half = 0.5 * z;
  const double q = half * half;

  double finite = 0.0;
  if (n > 0) {
    double fact_ratio = std::tgamma(static_cast<double>(n));
    double qk = 1.0;
    for (int k = 0; k < n; ++k) {
      finite += fact_ratio * qk;
      if (k + 1 < n) {
        fact_ratio /= static_cast<double>((n - k - 1) * (k + 1));
        qk *= -q;
      }
    }
    finite *= 0.5 * std::pow(half, -n);
  }

  double harm_k = 0.0;
  double harm_nk = 0.0;
  for (int j = 1; j <= n; ++j) harm_nk += 1.0 / j;
  double term = 1.0 / std::tgamma(n + 1.0);
  double sum = term * (harm_k + harm_nk - 2.0 * kEulerGamma);
  for (int k = 1; k < 500; ++k) {
    term *= q / (k * static_cast<double>(n + k));
    harm_k += 1.0 / k;
    harm_nk += 1.0 / (n + k);
    const double contrib = term * (harm_k + harm_nk - 2.0 * kEulerGamma);
    sum += contrib;
    if (std::abs(contrib) < kSeriesEps * std::abs(sum)) break;
  }
  const double log_part =
      parity_sign(n + 1) * std::log(half) * bessel_i(Order::integer(n), z);
  return finite + log_part + parity_sign(n) * 0.5 * std::pow(half, n) * sum;
}

struct K01 {
  double k0;
  double k1;
};

// Steed's continued fraction in Temme's normalization for order 0 and 1.
K01 k01_continued_fraction(double z) {
  double b = 2.0 * (1.0 + z);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < 100000; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < 1e-17) break;
  }
  h = a1 * h;
  const double k0 = std::sqrt(kPi / (2.0 * z)) * std::exp(-z) / s;
  const double k1 = k0 * (z + 0.5 - h) / z;
  return {k0, k1};
}

double k_asymptotic(double nu, double z) {
  const double mu = 4.0 * nu * nu;
  double a = 1.0;
  double sum = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 200; ++k) {
    a *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k * z);
    const double mag = std::abs(a);
    if (mag == 0.0 || mag > prev) break;
    sum += a;
    prev = mag;
    if (mag < kSeriesEps) break;
  }
  return std::sqrt(kPi / (2.0 * z)) * std::exp(-z) * sum;
}

K01 k01(double z) {
  if (z <= specfun::kBesselKSeriesSwitch) return {k_series(0, z), k_series(1, z)};
  if (z < specfun::kBesselKAsymptoticSwitch) return k01_continued_fraction(z);
  return {k_asymptotic(0.0, z), k_asymptotic(1.0, z)};
}

}  // namespace

Complex minus_i_pow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

Complex i_pow(int n) { return minus_i_pow(-n); }

double gamma_fn(double x) {
  if (!(x > 0.0)) domain_error("gamma_fn", x);
  return std::tgamma(x);
}

double bessel_j(Order nu, double z) {
  if (!(z >= 0.0)) domain_error("bessel_j", z);
  if (nu.is_negative()) {
    const Order pos = nu.negated();
    if (nu.is_integer()) {
      const int n = pos.twice() / 2;
      return parity_sign(n) * bessel_j(pos, z);
    }
    if (z == 0.0) domain_error("bessel_j", z);
    const int n = (pos.twice() - 1) / 2;
    return parity_sign(n + 1) * bessel_y(pos, z);
  }
  if (nu.is_integer()) return j_integer(nu.twice() / 2, z);
  return j_half((nu.twice() - 1) / 2, z);
}

double bessel_y(Order nu, double z) {
  if (!(z > 0.0)) domain_error("bessel_y", z);
  if (nu.is_negative()) {
    const Order pos = nu.negated();
    if (nu.is_integer()) {
      const int n = pos.twice() / 2;
      return parity_sign(n) * bessel_y(pos, z);
    }
    const int n = (pos.twice() - 1) / 2;
    return parity_sign(n) * bessel_j(pos, z);
  }
  if (nu.is_integer()) return y_integer(nu.twice() / 2, z);
  return y_half((nu.twice() - 1) / 2, z);
}

Complex hankel2(Order nu, double z) {
  if (!(z > 0.0)) domain_error("hankel2", z);
  return {bessel_j(nu, z), -bessel_y(nu, z)};
}

double bessel_i(Order nu, double z) {
  if (!(z >= 0.0)) domain_error("bessel_i", z);
  if (nu.is_negative() && nu.is_integer()) return bessel_i(nu.negated(), z);
  const double v = nu.value();
  if (z == 0.0) {
    if (nu.twice() == 0) return 1.0;
    if (v > 0.0) return 0.0;
    domain_error("bessel_i", z);
  }
  const double half = 0.5 * z;
  const double q = half * half;
  double term = std::pow(half, v) / std::tgamma(v + 1.0);
  double sum = term;
  for (int k = 1; k < 1000; ++k) {
    term *= q / (k * (v + k));
    sum += term;
    if (std::abs(term) < kSeriesEps * std::abs(sum)) break;
  }
  return sum;
}

double bessel_k(Order nu, double z) {
  if (!(z > 0.0)) domain_error("bessel_k", z);
  if (nu.is_negative()) return bessel_k(nu.negated(), z);
  if (nu.is_integer()) {
    const int n = nu.twice() / 2;
    const auto [k0, k1v] = k01(z);
    if (n == 0) return k0;
    double prev = k0;
    double cur = k1v;
    for (int k = 1; k < n; ++k) {
      const double next = prev + (2.0 * k / z) * cur;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  const int n = (nu.twice() - 1) / 2;
  const double base = std::sqrt(kPi / (2.0 * z)) * std::exp(-z);
  double prev = base;  // K_{-1/2}
  double cur = base;   // K_{1/2}
  for (int k = 0; k < n; ++k) {
    const double order = k + 0.5;
    const double next = prev + (2.0 * order / z) * cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

double bessel_j_derivative(Order nu, double z) {
  return 0.5 * (bessel_j(nu.shifted(-1), z) - bessel_j(nu.shifted(1), z));
}

double bessel_y_derivative(Order nu, double z) {
  return 0.5 * (bessel_y(nu.shifted(-1), z) - bessel_y(nu.shifted(1), z));
}

Complex hankel2_derivative(Order nu, double z) {
  return 0.5 * (hankel2(nu.shifted(-1), z) - hankel2(nu.shifted(1), z));
}

double bessel_i_derivative(Order nu, double z) {
  return 0.5 * (bessel_i(nu.shifted(-1), z) + bessel_i(nu.shifted(1), z));
}

double bessel_k_derivative(Order nu, double z) {
  return -0.5 * (bessel_k(nu.shifted(-1), z) + bessel_k(nu.shifted(1), z));
}

}  // namespace propkit
