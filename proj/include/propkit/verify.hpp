#pragma once

// The verification run: closed forms against the quadrature oracles, the
// reductions, identities and figure properties, as a flat list of records.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "propkit/oracle.hpp"

namespace propkit {

struct CheckRecord {
  std::string check;  ///< group name, see verify_groups()
  int criterion = 0;
  std::vector<std::pair<std::string, double>> params;
  Complex expected{};
  Complex got{};
  bool complex_values = true;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;

  /// Value of a named parameter, if present.
  std::optional<double> param(const std::string& key) const;
};

struct VerifyOptions {
  /// Groups to run; empty runs all.
  std::vector<std::string> only;
  /// Keep only checks with this spatial dimension.
  std::optional<int> D;
  /// Replaces every relative tolerance.
  std::optional<double> tol;
  QuadraturePolicy policy;
};

/// oracle, reduction, half-order, spinor-fd, recurrence, delta-term,
/// lightcone, specfun, figure, d0.
const std::vector<std::string>& verify_groups();

/// Throws std::invalid_argument for an unknown group in options.only.
std::vector<CheckRecord> run_verify(const VerifyOptions& options = {});

inline bool all_pass(const std::vector<CheckRecord>& records) {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

}  // namespace propkit
