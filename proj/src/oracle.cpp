#include "propkit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "propkit/quadrature.hpp"

namespace propkit {

namespace {

constexpr double kPi = std::numbers::pi;

void require_oracle_params(const ModelParams& p, int min_D, const char* fn) {
  if (p.D < min_D)
    throw std::domain_error(std::string(fn) + ": D below minimum " + std::to_string(min_D));
  if (!(p.m > 0.0)) throw std::domain_error(std::string(fn) + ": requires m > 0");
}

// Smallest x with x^power * exp(-decay * x) <= cutoff along the tail.
double envelope_end(double decay, double power, double cutoff) {
  const double log_cut = std::log(cutoff);
  double x = -log_cut / decay;
  if (power > 0.0) {
    for (int i = 0; i < 50; ++i) {
      const double next = (power * std::log(x) - log_cut) / decay;
      if (std::abs(next - x) < 1e-9 * x) break;
      x = next;
    }
  }
  return x;
}

quad::Tolerance panel_tolerance(const QuadraturePolicy& policy) {
  return {policy.panel_abs_tol, policy.panel_rel_tol, 30};
}

// int_1^xmax f(base, offset, w) dx with x = base + offset and w = sqrt(x^2 - 1).
// The piece [1, 2] is integrated in the rapidity x = cosh(eta) so that
// (x^2-1)^{power} endpoint behaviour is smooth.
template <class F>
quad::Estimate integrate_from_one(F&& f, double xmax, double freq, const QuadraturePolicy& policy) {
  const auto tol = panel_tolerance(policy);
  const double split = std::min(2.0, xmax);
  const double eta_end = std::acosh(split);
  // phase derivative in eta is at most freq * sinh(eta) < 2 freq
  const double eta_panel = std::min(0.25, kPi / (2.0 * freq + 1e-300));
  auto in_eta = [&](double lo, double u) {
    const double eta = lo + u;
    const double w = std::sinh(eta);
    const double half = std::sinh(0.5 * eta);
    return f(1.0, 2.0 * half * half, w) * w;
  };
  quad::Estimate total = quad::integrate_panels(in_eta, 0.0, eta_end, eta_panel, tol);
  if (xmax > split) {
    const double x_panel = std::min(1.0, kPi / (freq + 1e-300));
    auto in_x = [&](double lo, double u) {
      const double x = lo + u;
      return f(lo, u, std::sqrt((x - 1.0) * (x + 1.0)));
    };
    const quad::Estimate tail = quad::integrate_panels(in_x, split, xmax, x_panel, tol);
    total.value += tail.value;
    total.error += tail.error;
    total.l1 += tail.l1;
    total.evaluations += tail.evaluations;
  }
  return total;
}

template <class PerDamping>
QuadratureReport extrapolate(const QuadraturePolicy& policy, PerDamping&& evaluate,
                             const char* fn) {
  const auto& schedule = policy.damping_schedule;
  if (schedule.empty()) throw std::invalid_argument(std::string(fn) + ": empty damping schedule");
  const std::size_t n = schedule.size();
  std::vector<Complex> values(n);
  std::vector<long> evals(n);

#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    const quad::Estimate e = evaluate(schedule[i]);
    values[i] = e.value;
    evals[i] = e.evaluations;
  }

  QuadratureReport report;
  for (std::size_t i = 0; i < n; ++i) {
    report.damping_values.emplace_back(schedule[i], values[i]);
    report.evaluations += evals[i];
  }
  const quad::Extrapolation ex = quad::neville_to_zero(schedule, values);
  report.value = ex.value;
  report.extrapolated_error = ex.error;
  const double bound = policy.max_rel_error * std::abs(ex.value) + policy.max_abs_error;
  if (!(ex.error <= bound)) {
    std::ostringstream msg;
    msg << fn << ": extrapolation did not converge (error estimate " << ex.error << " > " << bound
        << ")";
    throw ConvergenceFailure(msg.str(), std::move(report));
  }
  return report;
}

}  // namespace

std::vector<double> QuadraturePolicy::parse_schedule(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("damping schedule: cannot parse '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw std::invalid_argument("damping schedule: trailing characters in '" + item + "'");
    if (!(v > 0.0)) throw std::invalid_argument("damping schedule: values must be positive");
    if (!out.empty() && !(v < out.back()))
      throw std::invalid_argument("damping schedule: values must be strictly decreasing");
    out.push_back(v);
  }
  if (out.size() < 2) throw std::invalid_argument("damping schedule: need at least two values");
  return out;
}

QuadraturePolicy QuadraturePolicy::from_environment() {
  QuadraturePolicy policy;
  if (const char* env = std::getenv("PROPKIT_QUAD_POLICY"); env != nullptr && *env != '\0')
    policy.damping_schedule = parse_schedule(env);
  return policy;
}

QuadratureReport oracle_scalar_general(const ModelParams& p, double t, double r,
                                       const QuadraturePolicy& policy) {
  require_oracle_params(p, 1, "oracle_scalar_general");
  if (!(r > 0.0)) throw std::domain_error("oracle_scalar_general: requires r > 0");
  const int D = p.D;
  const double m = p.m;
  const double at = std::abs(t);
  const Order nu(D - 2);
  const double order = nu.value();
  const double b = m * r;
  const double prefactor =
      std::pow(m, 0.5 * D) / (2.0 * std::pow(2.0 * kPi, 0.5 * D) * std::pow(r, order));
  const double freq = m * (at + r);

  auto evaluate = [&](double delta) {
    const Complex rate(delta * m, m * at);  // e^{-rate x}
    auto f = [&](double base, double offset, double w) {
      // (x^2-1)^{nu/2} = w^nu
      return std::pow(w, order) * bessel_j(nu, b * w) * std::exp(-rate * base) *
             std::exp(-rate * offset);
    };
    const double xmax = envelope_end(delta * m, std::max(0.0, 0.5 * (D - 3)),
                                      policy.envelope_cutoff);
    quad::Estimate e = integrate_from_one(f, xmax, freq, policy);
    e.value *= prefactor;
    return e;
  };
  return extrapolate(policy, evaluate, "oracle_scalar_general");
}

QuadratureReport oracle_scalar_timelike_axis(const ModelParams& p, double t,
                                             const QuadraturePolicy& policy) {
  require_oracle_params(p, 0, "oracle_scalar_timelike_axis");
  if (t == 0.0) throw std::domain_error("oracle_scalar_timelike_axis: requires t != 0");
  const int D = p.D;
  const double m = p.m;
  const double at = std::abs(t);
  if (D == 0) {
    QuadratureReport exact;
    exact.value = std::exp(Complex(0.0, -m * at)) / (2.0 * m);
    return exact;
  }
  // Omega_{D-1} m^{D-1} / (2 (2pi)^D) int_1^inf dx (x^2-1)^{(D-2)/2} e^{-i m |t| x (1 - i delta)}
  const double sphere = 2.0 * std::pow(kPi, 0.5 * D) / std::tgamma(0.5 * D);
  const double prefactor = sphere * std::pow(m, D - 1) / (2.0 * std::pow(2.0 * kPi, D));
  const double power = D - 2;
  const double freq = m * at;

  auto evaluate = [&](double delta) {
    const Complex rate(delta * m * at, m * at);
    auto f = [&](double base, double offset, double w) {
      return std::pow(w, power) * std::exp(-rate * base) * std::exp(-rate * offset);
    };
    const double xmax = envelope_end(delta * m * at, std::max(0.0, power),
                                      policy.envelope_cutoff);
    quad::Estimate e = integrate_from_one(f, xmax, freq, policy);
    e.value *= prefactor;
    return e;
  };
  return extrapolate(policy, evaluate, "oracle_scalar_timelike_axis");
}

QuadratureReport oracle_scalar_spacelike_axis(const ModelParams& p, double r,
                                              const QuadraturePolicy& policy) {
  require_oracle_params(p, 1, "oracle_scalar_spacelike_axis");
  if (!(r > 0.0)) throw std::domain_error("oracle_scalar_spacelike_axis: requires r > 0");
  const int D = p.D;
  const double m = p.m;
  const Order nu(D - 2);
  const double prefactor = 1.0 / (2.0 * std::pow(2.0 * kPi, 0.5 * D) * std::pow(r, 0.5 * (D - 2)));
  const double panel = std::min(1.0, kPi / r);

  auto evaluate = [&](double delta) {
    auto f = [&](double lo, double u) {
      const double q = lo + u;
      return Complex(std::pow(q, 0.5 * D) * std::exp(-delta * q) * bessel_j(nu, q * r) /
                         std::sqrt(q * q + m * m),
                     0.0);
    };
    const double qmax = envelope_end(delta, std::max(0.0, 0.5 * (D - 3)), policy.envelope_cutoff);
    quad::Estimate e = quad::integrate_panels(f, 0.0, qmax, panel, panel_tolerance(policy));
    e.value *= prefactor;
    return e;
  };
  return extrapolate(policy, evaluate, "oracle_scalar_spacelike_axis");
}

CMatrix dirac_fd_check(const ModelParams& p, const SpacetimeVector& x, const GammaRep& rep,
                       double h) {
  if (rep.spacetime_dim() != p.D + 1 || x.spacetime_dim() != p.D + 1)
    throw std::domain_error("dirac_fd_check: dimension mismatch");
  if (!(h > 0.0)) throw std::domain_error("dirac_fd_check: step must be positive");
  const double t = x.time();
  const double r = x.spatial_norm();
  const double s = t * t - r * r;
  if (std::abs(s) < 100.0 * h * std::max(std::abs(t), r))
    throw std::domain_error("dirac_fd_check: step too large for distance to the lightcone");
  if (r > 0.0 && r <= h) throw std::domain_error("dirac_fd_check: step exceeds r");

  auto df = [&](double tt, double rr) { return scalar_feynman_at(p, tt * tt - rr * rr); };
  const Complex center = df(t, r);
  const Complex d_t = (df(t + h, r) - df(t - h, r)) / (2.0 * h);
  const int size = rep.matrix_size();
  const Complex i_unit(0.0, 1.0);

  CMatrix out = (i_unit * d_t) * rep[0];
  if (r > 0.0) {
    const Complex d_r = (df(t, r + h) - df(t, r - h)) / (2.0 * h);
    for (int k = 1; k <= p.D; ++k) out += (i_unit * d_r * (x.components[k] / r)) * rep[k];
  }
  out += (p.m * center) * CMatrix::Identity(size, size);
  return out;
}

}  // namespace propkit
