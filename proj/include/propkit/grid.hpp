#pragma once

// Propagator and oracle evaluation over lists of spacetime points. Each kernel
// has a serial reference and an OpenMP version; both fill the output in input
// order and give identical values.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "propkit/oracle.hpp"
#include "propkit/propagator.hpp"

namespace propkit {

struct GridPoint {
  double t;
  double r;
};

/// count evenly spaced values from lo to hi inclusive; count >= 2.
std::vector<double> linspace(double lo, double hi, int count);

/// scalar_feynman (m > 0) or scalar_massless (m == 0) at every point.
/// Throws LightconeSingular naming the first lightlike point before any work.
std::vector<Complex> scalar_grid_serial(const ModelParams& p, std::span<const GridPoint> points,
                                        double tol_lc = kDefaultLightconeTol);
std::vector<Complex> scalar_grid(const ModelParams& p, std::span<const GridPoint> points,
                                 double tol_lc = kDefaultLightconeTol);

struct OracleCase {
  ModelParams params;
  GridPoint point;
};

/// Either a report or the message of the exception the oracle raised; a
/// ConvergenceFailure still carries its report.
struct OracleOutcome {
  std::optional<QuadratureReport> report;
  std::string error;
  bool converged() const { return report.has_value() && error.empty(); }
};

/// oracle_scalar_general per case; every case needs r > 0.
std::vector<OracleOutcome> oracle_grid_serial(std::span<const OracleCase> cases,
                                              const QuadraturePolicy& policy = {});
std::vector<OracleOutcome> oracle_grid(std::span<const OracleCase> cases,
                                       const QuadraturePolicy& policy = {});

}  // namespace propkit
