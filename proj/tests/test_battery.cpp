#include <doctest.h>

#include "nclandau/battery.hpp"
#include "nclandau/params.hpp"

#include <cmath>

using namespace nclandau;

namespace {

BatteryOptions small_options() {
  BatteryOptions o;
  o.seed = 19;
  o.commutator_points = 12;
  o.algebra_cases = 200;
  o.moyal_cases = 10;
  o.identity_points = 40;
  o.sw_points = 6;
  o.gauge_points = 3;
  o.spectrum_n = {16, 20};
  o.truncation_tolerance = 0.05;
  return o;
}

}  // namespace

TEST_CASE("battery checks pass on reduced options") {
  const BatteryOptions o = small_options();
  const auto results = run_battery(o);
  REQUIRE(results.size() == 10);
  for (std::size_t i = 0; i < results.size(); ++i) {
    INFO(results[i].name << ": " << results[i].detail_json);
    CHECK(results[i].id == static_cast<int>(i) + 1);
    CHECK(results[i].pass);
    CHECK(results[i].detail_json.front() == '{');
  }
  CHECK(all_passed(results));
}

TEST_CASE("associativity check demands the minimum case count") {
  BatteryOptions o = small_options();
  o.algebra_cases = 199;
  const CheckResult r = check_associativity_equivalence(o);
  CHECK(r.detail_json.find("\"associativity_failures\":0") != std::string::npos);
  CHECK_FALSE(r.pass);
}

TEST_CASE("battery report is deterministic and seed dependent") {
  BatteryOptions o = small_options();
  const std::vector<CheckResult> a{check_commutator_table(o), check_associativity_equivalence(o), check_moyal(o)};
  const std::vector<CheckResult> b{check_commutator_table(o), check_associativity_equivalence(o), check_moyal(o)};
  CHECK(battery_report_json(o, a) == battery_report_json(o, b));
  CHECK(battery_report_json(o, a).back() == '\n');
  o.seed = 20;
  const CheckResult c = check_commutator_table(o);
  CHECK(c.detail_json != a[0].detail_json);
}

TEST_CASE("determinism check rejects tampered or failing earlier results") {
  const BatteryOptions o = small_options();
  std::vector<CheckResult> earlier{check_commutator_table(o), check_associativity_equivalence(o), check_moyal(o)};
  for (int id = 4; id <= 9; ++id) earlier.push_back(CheckResult{id, "stub", true, "{}"});
  CHECK(check_determinism(o, earlier).pass);

  auto tampered = earlier;
  tampered[2].detail_json += " ";
  CHECK_FALSE(check_determinism(o, tampered).pass);

  auto failing = earlier;
  failing[5].pass = false;
  CHECK_FALSE(check_determinism(o, failing).pass);
}

TEST_CASE("kinematic commutator with exact cancellation") {
  PlaneParams p;
  p.hbar = Rational(2, 3);
  p.theta = Rational(-1, 6);
  p.e = 2;
  p.B = 2;
  p.m = 1;
  p.r = Rational(-1, 2);
  REQUIRE(p.discriminant() > 0);
  const KinematicCommutators k = kinematic_commutators(p);
  CHECK(k.x_pi_x_closed.abs() < HPReal(1e-25));
  CHECK(k.x_pi_x.abs() < HPReal(1e-25));
  CHECK(relative_residual(k.pi_x_pi_y, k.pi_x_pi_y_table) < HPReal(1e-20));
  CHECK(k.non_central_residual < HPReal(1e-20));
}
