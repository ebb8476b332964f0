#include "propkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "propkit/figures.hpp"
#include "propkit/grid.hpp"

namespace propkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

using Params = std::vector<std::pair<std::string, double>>;

struct Context {
  const VerifyOptions& options;
  std::vector<CheckRecord>& out;

  double tol(double fallback) const { return options.tol.value_or(fallback); }
  bool wants_D(int D) const { return !options.D || *options.D == D; }
};

double relative_deviation(Complex expected, Complex got) {
  const double scale = std::abs(expected);
  return scale > 0.0 ? std::abs(got - expected) / scale : std::abs(got - expected);
}

void push(Context& ctx, const std::string& check, int criterion, Params params, Complex expected,
          Complex got, double deviation, double tolerance, bool complex_values = true,
          std::string note = {}) {
  CheckRecord rec;
  rec.check = check;
  rec.criterion = criterion;
  rec.params = std::move(params);
  rec.expected = expected;
  rec.got = got;
  rec.complex_values = complex_values;
  rec.deviation = deviation;
  rec.tolerance = tolerance;
  rec.pass = std::isfinite(deviation) && deviation <= tolerance;
  rec.note = std::move(note);
  ctx.out.push_back(std::move(rec));
}

void push_relative(Context& ctx, const std::string& check, int criterion, Params params,
                   Complex expected, Complex got, double tolerance) {
  push(ctx, check, criterion, std::move(params), expected, got, relative_deviation(expected, got),
       tolerance);
}

// Runs fn and turns an escaping exception into a failing record.
void guarded(Context& ctx, const std::string& check, int criterion, const Params& params,
             const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    push(ctx, check, criterion, params, {}, {std::nan(""), 0.0}, std::nan(""), 0.0, true,
         e.what());
  }
}

// --- 1: oracle agreement -------------------------------------------------

void check_oracle(Context& ctx) {
  const double rel = ctx.tol(1e-5);
  std::vector<OracleCase> cases;
  for (int D = 1; D <= 5; ++D) {
    if (!ctx.wants_D(D)) continue;
    for (double m : {0.5, 1.0, 2.0})
      for (GridPoint pt : {GridPoint{2, 0.5}, GridPoint{1, 0.25}, GridPoint{0, 1}, GridPoint{0, 3},
                           GridPoint{3, 1}}) {
        if (classify_interval(pt.t, pt.r).causality() == Causality::Lightlike) continue;
        cases.push_back({{D, m}, pt});
      }
  }
  const std::vector<OracleOutcome> outcomes = oracle_grid(cases, ctx.options.policy);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const OracleCase& c = cases[i];
    const Params params{{"D", c.params.D}, {"m", c.params.m}, {"t", c.point.t}, {"r", c.point.r}};
    const Complex closed = scalar_feynman(c.params, classify_interval(c.point.t, c.point.r));
    const OracleOutcome& o = outcomes[i];
    if (!o.converged()) {
      const Complex got = o.report ? o.report->value : Complex(std::nan(""), 0.0);
      push(ctx, "oracle", 1, params, closed, got, std::nan(""), 0.0, true, o.error);
      continue;
    }
    const double tolerance =
        std::max(rel * std::abs(closed), o.report->extrapolated_error + 1e-9);
    push(ctx, "oracle", 1, params, closed, o.report->value, std::abs(o.report->value - closed),
         tolerance);
  }
}

// --- 2: reductions to the explicit 1+1 and 2+1 forms ----------------------

Complex compact_form(int D, double m, double s) {
  if (D == 1) {
    if (s > 0.0) return -0.25 * kI * hankel2(Order::integer(0), m * std::sqrt(s));
    return bessel_k(Order::integer(0), m * std::sqrt(-s)) / (2.0 * kPi);
  }
  if (s > 0.0) {
    const double root = std::sqrt(s);
    return -kI * std::exp(-kI * (m * root)) / (4.0 * kPi * root);
  }
  const double root = std::sqrt(-s);
  return std::exp(-m * root) / (4.0 * kPi * root);
}

void check_reduction(Context& ctx) {
  const double tol = ctx.tol(1e-12);
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> mass(0.2, 3.0);
  std::uniform_real_distribution<double> log_s(-2.0, 2.0);
  for (int D : {1, 2}) {
    for (int sign : {1, -1}) {
      for (int k = 0; k < 50; ++k) {
        const double m = mass(rng);
        const double s = sign * std::pow(10.0, log_s(rng));
        if (!ctx.wants_D(D)) continue;
        push_relative(ctx, "reduction", 2, {{"D", D}, {"m", m}, {"s", s}}, compact_form(D, m, s),
                      scalar_feynman_at({D, m}, s), tol);
      }
    }
  }
}

// --- 3: half-order closed forms --------------------------------------------

void check_half_order(Context& ctx) {
  const double tol = ctx.tol(1e-12);
  for (double x : {0.1, 1.0, 10.0, 100.0}) {
    const Complex h_expected = kI * std::sqrt(2.0 / (kPi * x)) * std::exp(-kI * x);
    const Complex h_got = hankel2(Order::half(0), x);
    push(ctx, "half-order", 3, {{"nu", 0.5}, {"x", x}}, h_expected, h_got,
         relative_deviation(h_expected, h_got), tol, true, "H2_{1/2}(x) = i sqrt(2/(pi x)) e^{-ix}");
    const double k_expected = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
    const double k_got = bessel_k(Order::half(0), x);
    push(ctx, "half-order", 3, {{"nu", 0.5}, {"x", x}}, k_expected, k_got,
         relative_deviation(k_expected, k_got), tol, false, "K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}");
  }
}

// --- 4: spinor propagator against (i dslash + m) D_F -------------------------

double matrix_deviation(const CMatrix& reference, const CMatrix& other) {
  return (other - reference).cwiseAbs().maxCoeff() / reference.cwiseAbs().maxCoeff();
}

SpacetimeVector random_event(int D, double t, double r, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> c(D + 1);
  double norm = 0.0;
  for (int i = 1; i <= D; ++i) {
    c[i] = normal(rng);
    norm += c[i] * c[i];
  }
  norm = std::sqrt(norm);
  c[0] = t;
  for (int i = 1; i <= D; ++i) c[i] *= r / norm;
  return {c};
}

void check_spinor_fd(Context& ctx) {
  const double tol = ctx.tol(1e-5);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> mass(0.5, 2.0);
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int D = 1; D <= 4; ++D) {
    const GammaRep rep = build_gamma(D + 1);
    for (int sign : {1, -1}) {
      for (int k = 0; k < 10; ++k) {
        const double m = mass(rng);
        const double r = radius(rng);
        double t;
        if (sign > 0) {
          t = std::sqrt(r * r + 0.1 + 3.0 * unit(rng));
        } else {
          // |s| between 0.1 and r^2
          t = std::sqrt(r * r - 0.1 - (r * r - 0.1) * unit(rng));
        }
        const SpacetimeVector x = random_event(D, t, r, rng);
        if (!ctx.wants_D(D)) continue;
        const double s = x.minkowski_square();
        const Params params{{"D", D}, {"m", m}, {"t", t}, {"r", r}, {"s", s}};
        guarded(ctx, "spinor-fd", 4, params, [&] {
          const ModelParams p{D, m};
          const CMatrix closed = spinor_feynman_matrix(p, x, rep);
          const CMatrix fd = dirac_fd_check(p, x, rep, lightcone_fd_step(m, t, r));
          push(ctx, "spinor-fd", 4, params, closed(0, 0), fd(0, 0), matrix_deviation(closed, fd),
               tol, true, "deviation is the largest entry difference over the largest entry");
        });
      }
    }
    // second order: the defect drops by about 4 when h halves
    for (GridPoint pt : {GridPoint{1.8, 0.5}, GridPoint{0.4, 1.6}}) {
      if (!ctx.wants_D(D)) continue;
      const double h = 4e-3;
      const SpacetimeVector x = random_event(D, pt.t, pt.r, rng);
      const Params params{{"D", D}, {"m", 1.0}, {"t", pt.t}, {"r", pt.r}, {"h", h}};
      guarded(ctx, "spinor-fd", 4, params, [&] {
        const ModelParams p{D, 1.0};
        const CMatrix closed = spinor_feynman_matrix(p, x, rep);
        const double coarse = (dirac_fd_check(p, x, rep, h) - closed).cwiseAbs().maxCoeff();
        const double fine = (dirac_fd_check(p, x, rep, 0.5 * h) - closed).cwiseAbs().maxCoeff();
        const double ratio = coarse / fine;
        push(ctx, "spinor-fd", 4, params, 4.0, ratio, std::abs(ratio - 4.0), 1.0, false,
             "defect ratio between steps h and h/2");
      });
    }
  }
}

// --- 5: recurrence relation -----------------------------------------------

void check_recurrence(Context& ctx) {
  const double tol = ctx.tol(1e-10);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> mass(0.5, 2.0);
  std::uniform_real_distribution<double> span(0.3, 4.0);
  std::uniform_real_distribution<double> fraction(0.0, 0.9);
  for (int D = 2; D <= 6; ++D) {
    for (int sign : {1, -1}) {
      for (int k = 0; k < 20; ++k) {
        const double m = mass(rng);
        const double a = span(rng);
        const double b = a * fraction(rng);
        const double t = sign > 0 ? a : b;
        const double r = sign > 0 ? b : a;
        if (!ctx.wants_D(D)) continue;
        const Params params{{"D", D}, {"m", m}, {"t", t}, {"r", r}};
        guarded(ctx, "recurrence", 5, params, [&] {
          const Interval iv = classify_interval(t, r);
          const SpinorCoefficients direct = spinor_coefficients({D, m}, iv);
          const SpinorCoefficients rebuilt = recurrence_rhs({D, m}, iv);
          const double dev = std::max(relative_deviation(direct.A, rebuilt.A),
                                      relative_deviation(direct.B, rebuilt.B));
          push(ctx, "recurrence", 5, params, direct.A, rebuilt.A, dev, tol, true,
               "values are A; the deviation also covers B");
        });
      }
    }
  }
}

// --- 6: delta-term cancellation -------------------------------------------

void check_delta_term(Context& ctx) {
  const double tol = ctx.tol(1e-10);
  for (double m : {0.5, 1.0, 2.0})
    for (int k = -6; k <= 2; ++k)
      for (int sign : {1, -1}) {
        const double s = sign * std::pow(10.0, k);
        const Complex residual = delta_term_residual(m, s);
        push(ctx, "delta-term", 6, {{"m", m}, {"s", s}}, 0.0, residual, std::abs(residual), tol);
      }
}

// --- 7: lightcone asymptotics ----------------------------------------------

void check_lightcone(Context& ctx) {
  const double tol = ctx.tol(1e-2);
  for (int D = 1; D <= 3; ++D) {
    if (!ctx.wants_D(D)) continue;
    for (double m : {0.5, 1.0, 2.0})
      for (int sign : {1, -1}) {
        const double s = sign * 1e-6 / (m * m);
        const ModelParams p{D, m};
        const Complex ratio = scalar_feynman_at(p, s) / scalar_lightcone_asymptotic(p, s);
        push(ctx, "lightcone", 7, {{"D", D}, {"m", m}, {"s", s}}, 1.0, ratio,
             std::abs(ratio - 1.0), tol, true, "values are closed form / asymptotic");
      }
  }
}

// --- 8: special-function identities -----------------------------------------

void check_specfun(Context& ctx) {
  const double tol = ctx.tol(1e-9);
  const Order orders[] = {Order::integer(0), Order::integer(1), Order::integer(2), Order::half(0),
                          Order::half(1)};
  for (Order nu : orders) {
    for (double z : {0.1, 1.0, 10.0, 50.0}) {
      const double v = nu.value();
      const Params params{{"nu", v}, {"z", z}};
      const double j = bessel_j(nu, z), y = bessel_y(nu, z);
      const double wr_jy = j * bessel_y_derivative(nu, z) - bessel_j_derivative(nu, z) * y;
      const double want_jy = 2.0 / (kPi * z);
      push(ctx, "specfun", 8, params, want_jy, wr_jy, relative_deviation(want_jy, wr_jy), tol,
           false, "Wronskian J Y' - J' Y");
      const double i = bessel_i(nu, z), k = bessel_k(nu, z);
      const double wr_ki = k * bessel_i_derivative(nu, z) - bessel_k_derivative(nu, z) * i;
      push(ctx, "specfun", 8, params, 1.0 / z, wr_ki, relative_deviation(1.0 / z, wr_ki), tol,
           false, "Wronskian K I' - K' I");

      // three-term recurrences, deviation relative to the largest term
      const Order lo = nu.shifted(-1), hi = nu.shifted(1);
      auto three_term = [&](double a, double b, double scale, const char* what) {
        const double dev = std::abs(a - b) / std::max({std::abs(a), std::abs(b), scale});
        push(ctx, "specfun", 8, params, b, a, dev, tol, false, what);
      };
      const double jl = bessel_j(lo, z), jh = bessel_j(hi, z);
      three_term(jl + jh, 2.0 * v / z * j, std::max(std::abs(jl), std::abs(jh)),
                 "J_{nu-1} + J_{nu+1} = (2nu/z) J_nu");
      const double yl = bessel_y(lo, z), yh = bessel_y(hi, z);
      three_term(yl + yh, 2.0 * v / z * y, std::max(std::abs(yl), std::abs(yh)),
                 "Y_{nu-1} + Y_{nu+1} = (2nu/z) Y_nu");
      const double kl = bessel_k(lo, z), kh = bessel_k(hi, z);
      three_term(kh, kl + 2.0 * v / z * k, std::abs(kl), "K_{nu+1} = K_{nu-1} + (2nu/z) K_nu");
    }
  }
}

// --- 9: figure properties ---------------------------------------------------

void check_figures(Context& ctx) {
  // Figure 1: D_F(0, 2) decreasing in D and every plotted value positive.
  const std::vector<Figure1Row> f1 = figure1_rows();
  for (int D = 1; D <= kFigure1MaxD; ++D) {
    if (!ctx.wants_D(D)) continue;
    double smallest = INFINITY;
    for (const auto& row : f1)
      if (row.D == D) smallest = std::min(smallest, row.value);
    push(ctx, "figure", 9, {{"D", D}, {"figure", 1}}, 0.0, smallest, smallest > 0.0 ? 0.0 : 1.0,
         0.0, false, "smallest plotted D_F(0, r); must be positive");
    if (D == 1) continue;
    const double prev = scalar_feynman({D - 1, 1.0}, classify_interval(0.0, 2.0)).real();
    const double cur = scalar_feynman({D, 1.0}, classify_interval(0.0, 2.0)).real();
    push(ctx, "figure", 9, {{"D", D}, {"figure", 1}, {"r", 2.0}}, prev, cur,
         cur < prev ? 0.0 : 1.0, 0.0, false, "D_F(0, 2) must be below the value at D - 1");
  }

  // Figure 2: damped oscillation of Re and Im on [1, 15].
  const std::vector<Figure2Row> f2 = figure2_rows();
  for (int D = 1; D <= kFigure2MaxD; ++D) {
    if (!ctx.wants_D(D)) continue;
    std::vector<double> re, im;
    for (const auto& row : f2)
      if (row.D == D && row.t >= 1.0) {
        re.push_back(row.value.real());
        im.push_back(row.value.imag());
      }
    const int re_changes = sign_changes(re);
    const int im_changes = sign_changes(im);
    push(ctx, "figure", 9, {{"D", D}, {"figure", 2}, {"part", 0}}, 3.0, re_changes,
         re_changes >= 3 ? 0.0 : 1.0, 0.0, false, "sign changes of Re D_F(t, 0) on [1, 15]");
    push(ctx, "figure", 9, {{"D", D}, {"figure", 2}, {"part", 1}}, 3.0, im_changes,
         im_changes >= 3 ? 0.0 : 1.0, 0.0, false, "sign changes of Im D_F(t, 0) on [1, 15]");
    const double early = std::abs(scalar_feynman({D, 1.0}, classify_interval(2.0, 0.0)));
    const double late = std::abs(scalar_feynman({D, 1.0}, classify_interval(10.0, 0.0)));
    push(ctx, "figure", 9, {{"D", D}, {"figure", 2}, {"t", 10.0}}, early, late,
         late < early ? 0.0 : 1.0, 0.0, false, "|D_F(10, 0)| must be below |D_F(2, 0)|");
  }
}

// --- 10: D = 0 extension ------------------------------------------------------

void check_d0(Context& ctx) {
  const double tol = ctx.tol(1e-12);
  if (!ctx.wants_D(0)) return;
  for (double m : {0.5, 1.0, 2.0})
    for (double t : {0.3, 1.0, 5.0, -3.0, 40.0}) {
      const Complex expected = std::exp(Complex(0.0, -m * std::abs(t))) / (2.0 * m);
      push_relative(ctx, "d0", 10, {{"D", 0}, {"m", m}, {"t", t}}, expected,
                    scalar_feynman({0, m}, classify_interval(t, 0.0)), tol);
    }
}

struct Group {
  std::string name;
  void (*run)(Context&);
  bool has_D;
};

const std::vector<Group>& groups() {
  static const std::vector<Group> all = {
      {"oracle", check_oracle, true},         {"reduction", check_reduction, true},
      {"half-order", check_half_order, false}, {"spinor-fd", check_spinor_fd, true},
      {"recurrence", check_recurrence, true}, {"delta-term", check_delta_term, false},
      {"lightcone", check_lightcone, true},   {"specfun", check_specfun, false},
      {"figure", check_figures, true},        {"d0", check_d0, true},
  };
  return all;
}

}  // namespace

std::optional<double> CheckRecord::param(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return std::nullopt;
}

const std::vector<std::string>& verify_groups() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Group& g : groups()) out.push_back(g.name);
    return out;
  }();
  return names;
}

std::vector<CheckRecord> run_verify(const VerifyOptions& options) {
  for (const std::string& name : options.only)
    if (std::find(verify_groups().begin(), verify_groups().end(), name) == verify_groups().end())
      throw std::invalid_argument("verify: unknown check group '" + name + "'");
  std::vector<CheckRecord> out;
  Context ctx{options, out};
  for (const Group& g : groups()) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), g.name) == options.only.end())
      continue;
    if (options.D && !g.has_D) continue;
    g.run(ctx);
  }
  return out;
}

}  // namespace propkit
