// One line per acceptance criterion, PASS or FAIL, followed by the failing
// checks. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "propkit/propagator.hpp"
#include "propkit/verify.hpp"

using namespace propkit;

namespace {

const std::map<int, std::string> kTitles{
    {1, "oracle agreement (scalar)"},   {2, "reductions to D = 1 and D = 2"},
    {3, "half-order identities"},       {4, "spinor vs Dirac operator"},
    {5, "recurrence relation"},         {6, "delta-term cancellation"},
    {7, "lightcone asymptotics"},       {8, "special-function suite"},
    {9, "figure properties"},           {10, "D = 0 extension"},
};

std::string describe(const CheckRecord& r) {
  std::string s = r.check;
  for (const auto& [k, v] : r.params) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " %s=%g", k.c_str(), v);
    s += buf;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, " deviation %.3g > tolerance %.3g", r.deviation, r.tolerance);
  s += buf;
  if (!r.note.empty()) s += " (" + r.note + ")";
  return s;
}

double ratio(const CheckRecord& r) {
  if (r.tolerance > 0.0) return r.deviation / r.tolerance;
  return r.pass ? 0.0 : INFINITY;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;

  VerifyOptions oracle_only;
  oracle_only.only = {"oracle"};
  const auto start = clock::now();
  std::vector<CheckRecord> records = run_verify(oracle_only);
  const double oracle_seconds = std::chrono::duration<double>(clock::now() - start).count();

  VerifyOptions rest;
  for (const std::string& g : verify_groups())
    if (g != "oracle") rest.only.push_back(g);
  for (CheckRecord& r : run_verify(rest)) records.push_back(std::move(r));

  int failed_criteria = 0;
  for (const auto& [criterion, title] : kTitles) {
    int total = 0, passed = 0;
    double worst = 0.0;
    std::vector<const CheckRecord*> failures;
    for (const CheckRecord& r : records) {
      if (r.criterion != criterion) continue;
      ++total;
      worst = std::max(worst, ratio(r));
      if (r.pass)
        ++passed;
      else
        failures.push_back(&r);
    }
    bool ok = total > 0 && passed == total;
    std::string extra;
    if (criterion == 1) {
      char buf[64];
      std::snprintf(buf, sizeof buf, ", %.1f s (limit 60 s)", oracle_seconds);
      extra = buf;
      ok = ok && oracle_seconds < 60.0;
    }
    std::printf("criterion %2d %s  %-30s %d/%d checks, worst deviation/tolerance %.3g%s\n",
                criterion, ok ? "PASS" : "FAIL", title.c_str(), passed, total, worst,
                extra.c_str());
    for (const CheckRecord* r : failures) std::printf("    failed: %s\n", describe(*r).c_str());
    if (!ok) ++failed_criteria;
  }

  // The recurrence with a unit coefficient on the first term, for reference.
  std::printf("note: unit-coefficient recurrence, relative deviation from the spinor A at t=2, r=1:");
  const Interval iv = classify_interval(2.0, 1.0);
  for (int D = 2; D <= 6; ++D) {
    const Complex direct = spinor_coefficients({D, 1.0}, iv).A;
    const Complex unit = recurrence_rhs_unit_coefficient({D, 1.0}, iv).A;
    std::printf(" D=%d %.2g", D, std::abs(unit - direct) / std::abs(direct));
  }
  std::printf("\n");

  std::printf("%d of %zu criteria failed\n", failed_criteria, kTitles.size());
  return failed_criteria == 0 ? 0 : 1;
}
