#pragma once

// Verification battery: one check per acceptance criterion, each producing a
// pass flag and a JSON detail object. The report is a pure function of the
// options, so equal seeds give byte-identical documents.

#include <cstdint>
#include <string>
#include <vector>

namespace nclandau {

struct BatteryOptions {
  std::uint64_t seed = 7;
  int commutator_points = 100;
  int algebra_cases = 200;
  int moyal_cases = 100;
  int identity_points = 1000;
  int sw_points = 50;
  int gauge_points = 10;
  std::vector<int> spectrum_n{24, 32, 40};
  double truncation_tolerance = 0.02;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail_json;  // compact JSON object
};

CheckResult check_commutator_table(const BatteryOptions& o);
CheckResult check_associativity_equivalence(const BatteryOptions& o);
CheckResult check_moyal(const BatteryOptions& o);
CheckResult check_identity_suite(const BatteryOptions& o);
CheckResult check_field_strength(const BatteryOptions& o);
CheckResult check_sw_expansions(const BatteryOptions& o);
CheckResult check_gauge_function(const BatteryOptions& o);
CheckResult check_spectral_invariance(const BatteryOptions& o);
CheckResult check_naive_contrast(const BatteryOptions& o);
/// Reruns the seeded algebraic checks and compares their serialized details
/// with `earlier`; passes only when they match and every earlier check passed.
CheckResult check_determinism(const BatteryOptions& o, const std::vector<CheckResult>& earlier);

std::vector<CheckResult> run_battery(const BatteryOptions& o);
/// Deterministic JSON document (two-space indent, trailing newline).
std::string battery_report_json(const BatteryOptions& o, const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace nclandau
