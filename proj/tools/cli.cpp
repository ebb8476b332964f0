#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "format.hpp"
#include "propkit/figures.hpp"
#include "propkit/verify.hpp"

namespace propkit::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string output;
  std::string format = "csv";
  double tol_lc = kDefaultLightconeTol;
};

struct EvalArgs {
  int D = 0;
  double m = 1.0;
  double t = 0.0;
  double r = 0.0;
  std::optional<double> s;
  bool spinor = false;
  bool matrix = false;
};

struct FigureArgs {
  double m = 1.0;
  double lo = 0.0;
  double hi = 0.0;
  int points = 0;
  bool log_y = false;
};

struct VerifyArgs {
  std::vector<std::string> only;
  std::optional<int> D;
  std::optional<double> tol;
};

struct DeltaArgs {
  double m = 1.0;
  double s = 0.0;
};

const char* causality_name(Causality c) {
  switch (c) {
    case Causality::Timelike: return "timelike";
    case Causality::Spacelike: return "spacelike";
    default: return "lightlike";
  }
}

void require_format(const Common& c, std::initializer_list<const char*> allowed, const char* cmd) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw std::invalid_argument(std::string(cmd) + ": format '" + c.format + "' not supported");
}

std::string complex_fields(Complex z) { return number(z.real()) + "," + number(z.imag()); }

// --- eval --------------------------------------------------------------------

std::string eval_output(const Common& c, const EvalArgs& a) {
  require_format(c, {"csv", "json"}, "eval");
  if (a.matrix && !a.spinor) throw std::invalid_argument("eval: --matrix requires --spinor");
  if (a.matrix && a.s) throw std::invalid_argument("eval: --matrix needs --t and --r, not --s");
  if (a.spinor && a.m == 0.0) throw std::invalid_argument("eval: --spinor requires m > 0");
  if (a.m < 0.0) throw std::invalid_argument("eval: mass must be nonnegative");

  const ModelParams p{a.D, a.m};
  double s;
  if (a.s) {
    s = *a.s;
    if (std::abs(s) <= c.tol_lc) throw LightconeSingular("eval: |s| within the lightcone tolerance");
  } else {
    if (a.r < 0.0) throw std::invalid_argument("eval: r must be nonnegative");
    const Interval iv = classify_interval(a.t, a.r, c.tol_lc);
    if (iv.causality() == Causality::Lightlike)
      throw LightconeSingular("eval: interval is lightlike");
    s = iv.s();
  }
  const Complex df = a.m == 0.0 ? scalar_massless_at(a.D, s) : scalar_feynman_at(p, s);
  std::optional<SpinorCoefficients> coeffs;
  if (a.spinor) coeffs = spinor_coefficients_at(p, s);
  std::optional<CMatrix> matrix;
  if (a.matrix) {
    std::vector<double> x(a.D + 1, 0.0);
    x[0] = a.t;
    if (a.D >= 1) x[1] = a.r;
    matrix = spinor_feynman_matrix(p, SpacetimeVector{x}, build_gamma(a.D + 1), c.tol_lc);
  }

  if (c.format == "json") {
    nlohmann::json j;
    j["D"] = a.D;
    j["m"] = a.m;
    if (!a.s) {
      j["t"] = a.t;
      j["r"] = a.r;
    }
    j["s"] = s;
    j["causality"] = s > 0.0 ? "timelike" : "spacelike";
    j["DF"] = complex_json(df);
    if (coeffs) {
      j["A"] = complex_json(coeffs->A);
      j["B"] = complex_json(coeffs->B);
    }
    if (matrix) {
      nlohmann::json rows = nlohmann::json::array();
      for (int i = 0; i < matrix->rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < matrix->cols(); ++k) row.push_back(complex_json((*matrix)(i, k)));
        rows.push_back(row);
      }
      j["matrix"] = rows;
    }
    return j.dump(2) + "\n";
  }

  std::string out = a.s ? "D,m,s,ReDF,ImDF" : "D,m,t,r,ReDF,ImDF";
  if (coeffs) out += ",ReA,ImA,ReB,ImB";
  out += "\n";
  std::vector<std::string> row{std::to_string(a.D), number(a.m)};
  if (a.s) {
    row.push_back(number(s));
  } else {
    row.push_back(number(a.t));
    row.push_back(number(a.r));
  }
  row.push_back(complex_fields(df));
  if (coeffs) {
    row.push_back(complex_fields(coeffs->A));
    row.push_back(complex_fields(coeffs->B));
  }
  out += csv_row(row) + "\n";
  if (matrix) {
    out += "\nrow,col,Re,Im\n";
    for (int i = 0; i < matrix->rows(); ++i)
      for (int k = 0; k < matrix->cols(); ++k)
        out += csv_row({std::to_string(i), std::to_string(k), complex_fields((*matrix)(i, k))}) +
               "\n";
  }
  return out;
}

// --- figures -----------------------------------------------------------------

std::string figure1_output(const Common& c, const FigureArgs& a) {
  require_format(c, {"csv", "svg"}, "figure1");
  const auto rows = figure1_rows(a.m, {a.lo, a.hi, a.points});
  if (c.format == "svg") {
    std::vector<Curve> curves;
    for (const auto& row : rows) {
      if (curves.empty() || curves.back().label != "D = " + std::to_string(row.D))
        curves.push_back({"D = " + std::to_string(row.D), {}});
      curves.back().points.emplace_back(row.r, row.value);
    }
    return render_svg(curves, {"Scalar propagator at t = 0, m = " + number(a.m), "r",
                               a.log_y ? "D_F(0, r), log scale" : "D_F(0, r)", a.log_y});
  }
  std::string out = "D,r,DF\n";
  for (const auto& row : rows)
    out += csv_row({std::to_string(row.D), number(row.r), number(row.value)}) + "\n";
  return out;
}

std::string figure2_output(const Common& c, const FigureArgs& a) {
  require_format(c, {"csv", "svg"}, "figure2");
  if (a.log_y) throw std::invalid_argument("figure2: --log is only available for figure1");
  const auto rows = figure2_rows(a.m, {a.lo, a.hi, a.points});
  if (c.format == "svg") {
    std::vector<Curve> curves;
    for (int D = 1; D <= kFigure2MaxD; ++D) {
      Curve re{"Re, D = " + std::to_string(D), {}, false};
      Curve im{"Im, D = " + std::to_string(D), {}, true};
      for (const auto& row : rows)
        if (row.D == D) {
          re.points.emplace_back(row.t, row.value.real());
          im.points.emplace_back(row.t, row.value.imag());
        }
      curves.push_back(std::move(re));
      curves.push_back(std::move(im));
    }
    return render_svg(curves,
                      {"Scalar propagator at r = 0, m = " + number(a.m), "t", "D_F(t, 0)", false});
  }
  std::string out = "D,t,ReDF,ImDF\n";
  for (const auto& row : rows)
    out += csv_row({std::to_string(row.D), number(row.t), complex_fields(row.value)}) + "\n";
  return out;
}

// --- verify ------------------------------------------------------------------

std::string verify_output(const Common& c, const VerifyArgs& a, bool& all_passed) {
  require_format(c, {"json"}, "verify");
  VerifyOptions options;
  options.only = a.only;
  options.D = a.D;
  options.tol = a.tol;
  options.policy = QuadraturePolicy::from_environment();
  const auto records = run_verify(options);
  all_passed = all_pass(records);
  return verify_json(records, options.policy.damping_schedule).dump(2) + "\n";
}

// --- recurrence / delta-term ---------------------------------------------------

std::string recurrence_output(const Common& c, const EvalArgs& a) {
  require_format(c, {"csv", "json"}, "recurrence");
  const ModelParams p{a.D, a.m};
  const Interval iv = classify_interval(a.t, a.r, c.tol_lc);
  const SpinorCoefficients direct = spinor_coefficients(p, iv);
  const SpinorCoefficients rebuilt = recurrence_rhs(p, iv);
  const SpinorCoefficients unit = recurrence_rhs_unit_coefficient(p, iv);
  const double dev = std::abs(rebuilt.A - direct.A) / std::abs(direct.A);
  if (c.format == "json") {
    nlohmann::json j{{"D", a.D},
                     {"m", a.m},
                     {"t", a.t},
                     {"r", a.r},
                     {"causality", causality_name(iv.causality())},
                     {"A", complex_json(direct.A)},
                     {"A_recurrence", complex_json(rebuilt.A)},
                     {"A_unit_coefficient", complex_json(unit.A)},
                     {"B", complex_json(direct.B)},
                     {"relative_deviation", dev}};
    return j.dump(2) + "\n";
  }
  return "D,m,t,r,ReA,ImA,ReA_rec,ImA_rec,ReA_unit,ImA_unit,ReB,ImB,rel_dev\n" +
         csv_row({std::to_string(a.D), number(a.m), number(a.t), number(a.r),
                  complex_fields(direct.A), complex_fields(rebuilt.A), complex_fields(unit.A),
                  complex_fields(direct.B), number(dev)}) +
         "\n";
}

std::string delta_output(const Common& c, const DeltaArgs& a) {
  require_format(c, {"csv", "json"}, "delta-term");
  const DeltaTermBreakdown d = delta_term_breakdown(a.m, a.s);
  if (c.format == "json") {
    nlohmann::json j{{"m", a.m},
                     {"s", a.s},
                     {"first", complex_json(d.first)},
                     {"second", complex_json(d.second)},
                     {"residual", complex_json(d.residual)}};
    return j.dump(2) + "\n";
  }
  return "m,s,ReFirst,ImFirst,ReSecond,ImSecond,ReResidual,ImResidual\n" +
         csv_row({number(a.m), number(a.s), complex_fields(d.first), complex_fields(d.second),
                  complex_fields(d.residual)}) +
         "\n";
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.output.empty() || c.output == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw IoError("cannot open '" + c.output + "' for writing");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing '" + c.output + "'");
}

void add_common(CLI::App* sub, Common& c, const std::string& default_format,
                const std::vector<std::string>& formats) {
  c.format = default_format;
  sub->add_option("-o,--output", c.output, "Write to this file instead of stdout");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
  sub->add_option("--tol-lc", c.tol_lc, "Relative lightcone tolerance")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Position-space Feynman propagators of free scalar and Dirac fields in D+1 "
               "dimensions",
               "propkit"};
  app.require_subcommand(1);

  Common c_eval, c_fig1, c_fig2, c_verify, c_rec, c_delta;
  EvalArgs ev;
  FigureArgs fig1{1.0, kFigure1Grid.lo, kFigure1Grid.hi, kFigure1Grid.count, false};
  FigureArgs fig2{1.0, kFigure2Grid.lo, kFigure2Grid.hi, kFigure2Grid.count, false};
  VerifyArgs ver;
  DeltaArgs delta;

  CLI::App* eval = app.add_subcommand("eval", "Scalar (and spinor) propagator at one point");
  add_common(eval, c_eval, "csv", {"csv", "json", "svg"});
  eval->add_option("--D", ev.D, "Spatial dimension")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--m", ev.m, "Mass (0 selects the massless propagator)");
  auto* t_opt = eval->add_option("--t", ev.t, "Time separation");
  auto* r_opt = eval->add_option("--r", ev.r, "Spatial separation");
  eval->add_option("--s", ev.s, "Invariant t^2 - r^2 instead of --t/--r")
      ->excludes(t_opt)
      ->excludes(r_opt);
  eval->add_flag("--spinor", ev.spinor, "Also print the spinor coefficients A and B");
  eval->add_flag("--matrix", ev.matrix, "With --spinor: the full matrix at x = (t, r, 0, ...)");

  CLI::App* f1 = app.add_subcommand("figure1", "D_F(0, r) against r for D = 1..5");
  add_common(f1, c_fig1, "csv", {"csv", "json", "svg"});
  f1->add_option("--m", fig1.m, "Mass")->check(CLI::PositiveNumber);
  f1->add_option("--r-min", fig1.lo, "Smallest r");
  f1->add_option("--r-max", fig1.hi, "Largest r");
  f1->add_option("--points", fig1.points, "Grid points per curve")->check(CLI::Range(2, 1000000));
  f1->add_flag("--log", fig1.log_y, "Logarithmic vertical axis (svg)");

  CLI::App* f2 = app.add_subcommand("figure2", "Re and Im of D_F(t, 0) against t for D = 1..3");
  add_common(f2, c_fig2, "csv", {"csv", "json", "svg"});
  f2->add_option("--m", fig2.m, "Mass")->check(CLI::PositiveNumber);
  f2->add_option("--t-min", fig2.lo, "Smallest t");
  f2->add_option("--t-max", fig2.hi, "Largest t");
  f2->add_option("--points", fig2.points, "Grid points per curve")->check(CLI::Range(2, 1000000));
  f2->add_flag("--log", fig2.log_y, "Not available for this figure");

  CLI::App* vf = app.add_subcommand("verify", "Run the verification checks, JSON report");
  add_common(vf, c_verify, "json", {"csv", "json", "svg"});
  vf->add_option("--only", ver.only, "Check groups to run")->delimiter(',');
  vf->add_option("--D", ver.D, "Only checks at this spatial dimension");
  vf->add_option("--tol", ver.tol, "Replace every relative tolerance")
      ->check(CLI::PositiveNumber);

  CLI::App* rec = app.add_subcommand("recurrence", "Spinor coefficients two ways");
  add_common(rec, c_rec, "csv", {"csv", "json", "svg"});
  rec->add_option("--D", ev.D, "Spatial dimension (>= 2)")->required();
  rec->add_option("--m", ev.m, "Mass")->check(CLI::PositiveNumber);
  rec->add_option("--t", ev.t, "Time separation");
  rec->add_option("--r", ev.r, "Spatial separation")->check(CLI::NonNegativeNumber);

  CLI::App* dt = app.add_subcommand("delta-term", "Residual of the delta(x^2) bracket");
  add_common(dt, c_delta, "csv", {"csv", "json", "svg"});
  dt->add_option("--m", delta.m, "Mass")->check(CLI::PositiveNumber);
  dt->add_option("--s", delta.s, "Invariant t^2 - r^2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::string text;
    bool passed = true;
    const Common* used = nullptr;
    if (eval->parsed()) {
      text = eval_output(c_eval, ev);
      used = &c_eval;
    } else if (f1->parsed()) {
      text = figure1_output(c_fig1, fig1);
      used = &c_fig1;
    } else if (f2->parsed()) {
      text = figure2_output(c_fig2, fig2);
      used = &c_fig2;
    } else if (vf->parsed()) {
      text = verify_output(c_verify, ver, passed);
      used = &c_verify;
    } else if (rec->parsed()) {
      text = recurrence_output(c_rec, ev);
      used = &c_rec;
    } else {
      text = delta_output(c_delta, delta);
      used = &c_delta;
    }
    emit(*used, text, out);
    if (!passed) {
      err << "propkit: verification failed\n";
      return kDataFailure;
    }
    return kOk;
  } catch (const LightconeSingular& e) {
    err << "propkit: " << e.what() << "\n";
    return kLightcone;
  } catch (const ConvergenceFailure& e) {
    err << "propkit: " << e.what() << "\n";
    return kDataFailure;
  } catch (const IoError& e) {
    err << "propkit: " << e.what() << "\n";
    return kDataFailure;
  } catch (const std::logic_error& e) {
    // domain_error and invalid_argument: bad parameter values
    err << "propkit: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "propkit: " << e.what() << "\n";
    return kDataFailure;
  }
}

}  // namespace propkit::cli
