#include "nclandau/battery.hpp"

#include "nclandau/osc.hpp"
#include "nclandau/swmap.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace nclandau {

namespace {

using Json = nlohmann::ordered_json;

const ConfigPoly X = var_x<GaussianRational>();
const ConfigPoly Y = var_y<GaussianRational>();
const GaussianRational I = GaussianRational::i();

ConfigPoly constant(const GaussianRational& v) { return ConfigPoly::constant(v); }

class Draw {
public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  Rational rational(long nb = 12, long db = 9) { return Rational(integer(-nb, nb), integer(1, db)); }
  Rational nonzero(long nb = 12, long db = 9) {
    Rational q;
    do q = rational(nb, db);
    while (q == 0);
    return q;
  }
  Rational positive(long nb = 12, long db = 9) { return Rational(integer(1, nb), integer(1, db)); }
  GaussianRational gaussian() { return {rational(6, 5), coin() ? rational(6, 5) : Rational(0)}; }

  ConfigPoly poly(unsigned max_degree, int max_terms = 5) {
    ConfigPoly p;
    const int terms = static_cast<int>(integer(1, max_terms));
    for (int t = 0; t < terms; ++t) {
      const auto d = static_cast<unsigned>(integer(0, max_degree));
      const auto a = static_cast<unsigned>(integer(0, d));
      p.add_term(ConfigPoly::Key{a, d - a}, gaussian());
    }
    return p;
  }

  PlaneParams valid_point() {
    for (;;) {
      PlaneParams p;
      p.hbar = positive();
      p.theta = rational();
      p.e = nonzero();
      p.B = rational();
      p.m = positive();
      p.r = rational(3, 4);
      if (p.discriminant() > 0) return p;
    }
  }

  SWContext sw_context(int order) {
    SWContext ctx;
    ctx.r = rational(5, 7);
    ctx.e = nonzero(4, 3);
    ctx.B = nonzero(5, 3);
    ctx.hbar = positive(4, 3);
    ctx.order = order;
    ctx.theta_value = rational(3, 4);
    if (ctx.hbar - 4 * ctx.r * (ctx.r - 1) * ctx.e * ctx.theta_value * ctx.B == 0) ctx.theta_value = 0;
    return ctx;
  }

private:
  std::mt19937_64 rng_;
};

std::uint64_t sub_seed(std::uint64_t seed, int check) { return seed * 1000003ULL + static_cast<std::uint64_t>(check); }

double to_double(const HPReal& v) { return v.convert_to<double>(); }

CheckResult finish(int id, std::string name, bool pass, const Json& detail) {
  return {id, std::move(name), pass, detail.dump()};
}

Rational binom(unsigned n, unsigned k) { return detail::factorial(n) / (detail::factorial(k) * detail::factorial(n - k)); }

// Textbook Moyal product f exp((i theta/2)(<-dx ->dy - <-dy ->dx)) g, summed
// from the binomial expansion of the bidifferential power.
ConfigPoly moyal_reference(const ConfigPoly& f, const ConfigPoly& g, const Rational& theta) {
  ConfigPoly out;
  GaussianRational pref(1);
  for (unsigned n = 0; n <= f.degree() + g.degree(); ++n) {
    if (n > 0) pref = pref * GaussianRational(Rational(0), theta / 2) / GaussianRational(Rational(n));
    for (unsigned k = 0; k <= n; ++k) {
      const Rational sign = (k % 2) ? Rational(-1) : Rational(1);
      out += f.derivative(0, n - k).derivative(1, k) * g.derivative(0, k).derivative(1, n - k) *
             (pref * GaussianRational(binom(n, k) * sign));
    }
  }
  return out;
}

/// Runs fn(i) for i in [0, n) on up to hardware_concurrency threads; results
/// are stored by index so the order never depends on scheduling.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F fn) {
  std::vector<T> out(n);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      ensure_precision();
      for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
    });
  for (auto& t : pool) t.join();
  return out;
}

const std::vector<Rational>& r_grid() {
  static const std::vector<Rational> g{Rational(0), Rational(1, 2), Rational(7, 10), Rational(1)};
  return g;
}

PlaneParams standard_point(const Rational& r) {
  PlaneParams p;
  p.hbar = 1;
  p.theta = 1;
  p.e = 1;
  p.B = 3;
  p.m = 1;
  p.r = r;
  return p;
}

}  // namespace

CheckResult check_commutator_table(const BatteryOptions& o) {
  Draw d(sub_seed(o.seed, 1));
  int exact_failures = 0;
  HPReal max_res(0), max_central(0), max_noncentral(0);
  for (int t = 0; t < o.commutator_points; ++t) {
    const PlaneParams p = d.valid_point();
    const StarContext ctx{p.r, p.theta, p.hbar, p.e};
    if (star_commutator(X, Y, ctx) != constant(I * GaussianRational(p.theta))) ++exact_failures;
    if (!star_commutator(X, X, ctx).is_zero() || !star_commutator(Y, Y, ctx).is_zero()) ++exact_failures;
    const KinematicCommutators k = kinematic_commutators(p);
    // i hbar (1 + c) can cancel exactly; the scale is then the operand size hbar.
    const HPReal hbar = to_hp(p.hbar);
    auto res = [&](const HPComplex& a, const HPComplex& b) {
      return HPReal((a - b).abs() / std::max({a.abs(), b.abs(), hbar}));
    };
    max_res = std::max({max_res, res(k.x_pi_x, k.x_pi_x_closed), res(k.y_pi_y, k.y_pi_y_closed)});
    max_central = std::max(max_central, relative_residual(k.pi_x_pi_y, k.pi_x_pi_y_table));
    max_noncentral = std::max(max_noncentral, k.non_central_residual);
  }
  const bool pass = exact_failures == 0 && max_res <= HPReal(1e-20) && max_central <= HPReal(1e-20) &&
                    max_noncentral <= HPReal(1e-20);
  Json j;
  j["points"] = o.commutator_points;
  j["exact_failures"] = exact_failures;
  j["max_rel_residual_x_pi"] = to_double(max_res);
  j["max_rel_residual_pi_pi_vs_ie_hbar_B"] = to_double(max_central);
  j["max_noncentral_coefficient"] = to_double(max_noncentral);
  j["tolerance"] = 1e-20;
  return finish(1, "star commutator table", pass, j);
}

CheckResult check_associativity_equivalence(const BatteryOptions& o) {
  Draw d(sub_seed(o.seed, 2));
  int assoc_failures = 0, equiv_failures = 0;
  for (int t = 0; t < o.algebra_cases; ++t) {
    const StarContext ctx{d.rational(), d.rational()};
    const ConfigPoly a = d.poly(5), b = d.poly(5), c = d.poly(5);
    if (star_product(star_product(a, b, ctx), c, ctx) != star_product(a, star_product(b, c, ctx), ctx)) ++assoc_failures;
    const Rational r2 = d.rational();
    const ConfigPoly lhs = equivalence_map(star_product(a, b, ctx), ctx.r, r2, ctx.theta);
    const ConfigPoly rhs = star_product(equivalence_map(a, ctx.r, r2, ctx.theta), equivalence_map(b, ctx.r, r2, ctx.theta),
                                       StarContext{r2, ctx.theta});
    if (lhs != rhs) ++equiv_failures;
  }
  Json j;
  j["cases"] = o.algebra_cases;
  j["associativity_failures"] = assoc_failures;
  j["equivalence_failures"] = equiv_failures;
  return finish(2, "associativity and c-equivalence", assoc_failures == 0 && equiv_failures == 0 && o.algebra_cases >= 200, j);
}

CheckResult check_moyal(const BatteryOptions& o) {
  Draw d(sub_seed(o.seed, 3));
  int failures = 0;
  for (int t = 0; t < o.moyal_cases; ++t) {
    const Rational theta = d.rational();
    const ConfigPoly a = d.poly(5), b = d.poly(5);
    if (star_product(a, b, StarContext{Rational(1, 2), theta}) != moyal_reference(a, b, theta)) ++failures;
  }
  Json j;
  j["cases"] = o.moyal_cases;
  j["failures"] = failures;
  return finish(3, "Moyal specialization", failures == 0, j);
}

CheckResult check_identity_suite(const BatteryOptions& o) {
  Draw d(sub_seed(o.seed, 4));
  HPReal worst(0);
  std::string worst_name;
  for (int t = 0; t < o.identity_points; ++t) {
    const IdentityReport rep = identity_suite(d.valid_point());
    for (const auto& id : rep.identities)
      if (id.rel_residual > worst) {
        worst = id.rel_residual;
        worst_name = id.name;
      }
  }
  Json j;
  j["points"] = o.identity_points;
  j["precision_digits"] = precision_digits();
  j["max_rel_residual"] = to_double(worst);
  j["worst_identity"] = worst_name;
  j["tolerance"] = 1e-20;
  return finish(4, "scalar identity suite", worst <= HPReal(1e-20), j);
}

CheckResult check_field_strength(const BatteryOptions& o) {
  Draw d(sub_seed(o.seed, 5));
  HPReal worst(0);
  for (int t = 0; t < o.identity_points; ++t) {
    const PlaneParams p = d.valid_point();
    const StarContext ctx{p.r, p.theta, p.hbar, p.e};
    const HPConfigPoly diff = field_strength_star(gauge_field_nc(p), ctx) - HPConfigPoly::constant(HPComplex(p.B));
    const HPReal scale = p.B == 0 ? HPReal(1) : HPReal(abs(to_hp(p.B)));
    worst = std::max(worst, HPReal(max_abs_coefficient(diff) / scale));
  }
  int closed_checked = 0, closed_failures = 0;
  for (int t = 0; t < o.sw_points; ++t) {
    const SWContext ctx = d.sw_context(2);
    try {
      const FieldStrengthExpansion fs = expand_field_strength_nc(ctx);
      ++closed_checked;
      if (fs.closed_form != ctx.B || !fs.closed_form_equals_B) ++closed_failures;
    } catch (const ParameterError&) {
    }
  }
  Json j;
  j["points"] = o.identity_points;
  j["max_residual_over_B"] = to_double(worst);
  j["tolerance"] = 1e-18;
  j["closed_form_points"] = closed_checked;
  j["closed_form_failures"] = closed_failures;
  return finish(5, "field-strength consistency", worst <= HPReal(1e-18) && closed_failures == 0 && closed_checked > 0, j);
}

CheckResult check_sw_expansions(const BatteryOptions& o) {
  Draw d(sub_seed(o.seed, 6));
  int failures = 0, symmetric_routes = 0;
  std::vector<std::string> failed;
  for (int t = 0; t <= o.sw_points; ++t) {
    SWContext ctx = d.sw_context(2);
    if (t == o.sw_points) ctx.r = Rational(1, 2);  // symmetric-gauge forms
    const SWMapReport rep = sw_map_gauge_field(ctx);
    bool ok = rep.pass;
    if (ctx.r == Rational(1, 2)) symmetric_routes = static_cast<int>(rep.routes.size());
    try {
      ok = ok && expand_field_strength_nc(ctx).series_matches_sw_form;
    } catch (const ParameterError&) {
    }
    if (!ok) {
      ++failures;
      failed.push_back(rational_to_string(ctx.r));
    }
  }
  Json j;
  j["points"] = o.sw_points + 1;
  j["failures"] = failures;
  j["failed_r"] = failed;
  j["symmetric_gauge_routes"] = symmetric_routes;
  return finish(6, "Seiberg-Witten expansions", failures == 0 && symmetric_routes == 5, j);
}

CheckResult check_gauge_function(const BatteryOptions& o) {
  Draw d(sub_seed(o.seed, 7));
  int failures = 0, transform_failures = 0;
  std::string standard_lambda1;
  for (int t = 0; t <= o.gauge_points; ++t) {
    SWContext ctx = d.sw_context(2);
    if (t == 0) {
      ctx.r = Rational(1, 2);
      ctx.e = 1;
      ctx.B = 3;
      ctx.hbar = 1;
      ctx.theta_value = 1;
    }
    const GaugeFunctionResult res = solve_gauge_function(ctx);
    const Rational& r = ctx.r;
    const bool ok = res.lambda_nc.extract(0) == X * Y * GaussianRational(ctx.B) &&
                    res.lambda_nc.extract(1) == X * Y * GaussianRational(3 * ctx.e * r * (r - 1) * ctx.B * ctx.B / ctx.hbar) &&
                    res.residual_x.is_zero() && res.residual_y.is_zero();
    if (!ok) ++failures;
    if (t == 0) standard_lambda1 = res.lambda_nc.extract(1).to_string();
    const FiniteTransformReport fin = verify_finite_gauge_transform(ctx);
    if (!fin.pass || !fin.residual_slope.first.is_zero() || !fin.residual_slope.second.is_zero()) ++transform_failures;
  }
  Json j;
  j["contexts"] = o.gauge_points + 1;
  j["solve_failures"] = failures;
  j["finite_transform_failures"] = transform_failures;
  j["standard_point_lambda_theta1"] = standard_lambda1;
  return finish(7, "gauge-function solve", failures == 0 && transform_failures == 0, j);
}

CheckResult check_spectral_invariance(const BatteryOptions& o) {
  struct Row {
    std::vector<double> e0;
    double ladder = 0, ladder_comm = 0, route = 0, herm = 0, e0_exact = 0;
  };
  const auto& grid = r_grid();
  const auto rows = parallel_map<Row>(grid.size(), [&](std::size_t i) {
    Row row;
    const PlaneParams p = standard_point(grid[i]);
    for (int n : o.spectrum_n) {
      const LandauSpectrumReport rep = landau_spectrum_check(p, OscBasis::cyclotron(p, n), 1);
      row.e0.push_back(rep.e0_estimate);
      row.e0_exact = rep.e0_analytic;
      row.ladder = rep.ladder_residual;
      row.ladder_comm = rep.ladder_commutator;
      row.route = rep.route_difference;
      row.herm = rep.hermiticity_residual;
    }
    return row;
  });
  bool pass = !o.spectrum_n.empty();
  Json per_r = Json::array();
  std::vector<double> finals;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Row& row = rows[i];
    const double e0 = row.e0_exact, last = row.e0.back();
    bool monotone = true;
    for (std::size_t k = 1; k < row.e0.size(); ++k) monotone = monotone && row.e0[k] <= row.e0[k - 1] + 1e-12 * e0;
    // The compression bounds E_0 from above; the slack covers eigensolver rounding.
    const bool bracket = last >= e0 * (1 - 1e-10) && last <= e0 * (1 + o.truncation_tolerance);
    const bool ok = monotone && bracket && row.ladder <= 1e-8 && row.ladder_comm <= 1e-8 && row.route <= 1e-10 && row.herm <= 1e-12;
    pass = pass && ok;
    finals.push_back(last);
    Json r;
    r["r"] = rational_to_string(grid[i]);
    r["N"] = o.spectrum_n;
    r["E0_estimate"] = row.e0;
    r["E0_analytic"] = e0;
    r["rel_err"] = (last - e0) / e0;
    r["monotone"] = monotone;
    r["ladder_residual"] = row.ladder;
    r["ladder_commutator_residual"] = row.ladder_comm;
    r["route_difference"] = row.route;
    r["pass"] = ok;
    per_r.push_back(r);
  }
  double spread = 0;
  for (double a : finals)
    for (double b : finals) spread = std::max(spread, std::abs(a - b));
  const double e0 = rows.front().e0_exact;
  const bool pairwise = spread <= 2 * o.truncation_tolerance * e0;
  Json j;
  j["points"] = per_r;
  j["pairwise_max_difference"] = spread;
  j["pairwise_tolerance"] = 2 * o.truncation_tolerance * e0;
  return finish(8, "spectral gauge invariance", pass && pairwise, j);
}

CheckResult check_naive_contrast(const BatteryOptions& o) {
  const auto& grid = r_grid();
  const int n = o.spectrum_n.empty() ? 24 : o.spectrum_n.back();
  const auto reps = parallel_map<NaiveSpectrumReport>(grid.size(), [&](std::size_t i) {
    const PlaneParams p = standard_point(grid[i]);
    return naive_spectrum_check(p, OscBasis::cyclotron(p, n));
  });
  bool pass = true;
  Json per_r = Json::array();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& rep = reps[i];
    const bool ok = std::abs(rep.scale_estimate - rep.scale_analytic) <= 1e-8 && rep.scale_spread <= 1e-8;
    pass = pass && ok;
    Json r;
    r["r"] = rational_to_string(grid[i]);
    r["scale_estimate"] = rep.scale_estimate;
    r["scale_analytic"] = rep.scale_analytic;
    r["E0_estimate"] = rep.e0_estimate;
    r["E0_analytic"] = rep.e0_analytic;
    r["spacing_estimate"] = rep.spacing_estimate;
    per_r.push_back(r);
  }
  const auto& half = reps[1];
  const auto& one = reps[3];
  const double predicted = half.scale_analytic / one.scale_analytic;
  const double spectral_ratio = half.e0_estimate / one.e0_estimate;
  const double spacing_ratio = half.spacing_estimate / one.spacing_estimate;
  const bool ratio_ok = std::abs(spectral_ratio - predicted) <= o.truncation_tolerance * predicted &&
                        std::abs(spacing_ratio - predicted) <= o.truncation_tolerance * predicted;
  Json j;
  j["N"] = n;
  j["points"] = per_r;
  j["predicted_ratio_r_half_over_r_one"] = predicted;
  j["ground_energy_ratio"] = spectral_ratio;
  j["spacing_ratio"] = spacing_ratio;
  return finish(9, "naive-prescription contrast", pass && ratio_ok && predicted != 1, j);
}

CheckResult check_determinism(const BatteryOptions& o, const std::vector<CheckResult>& earlier) {
  const std::vector<CheckResult> again{check_commutator_table(o), check_associativity_equivalence(o), check_moyal(o)};
  bool same = true;
  for (const auto& a : again) {
    const auto it = std::find_if(earlier.begin(), earlier.end(), [&](const CheckResult& e) { return e.id == a.id; });
    same = same && it != earlier.end() && it->detail_json == a.detail_json && it->pass == a.pass;
  }
  bool prior = !earlier.empty();
  for (const auto& e : earlier) prior = prior && e.pass;
  Json j;
  j["rerun_matches"] = same;
  j["all_checks_passed"] = prior;
  return finish(10, "determinism", same && prior, j);
}

std::vector<CheckResult> run_battery(const BatteryOptions& o) {
  std::vector<CheckResult> out{check_commutator_table(o),  check_associativity_equivalence(o), check_moyal(o),
                               check_identity_suite(o),    check_field_strength(o),            check_sw_expansions(o),
                               check_gauge_function(o),    check_spectral_invariance(o),       check_naive_contrast(o)};
  out.push_back(check_determinism(o, out));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return !results.empty() && std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::string battery_report_json(const BatteryOptions& o, const std::vector<CheckResult>& results) {
  Json j;
  j["seed"] = o.seed;
  j["precision_digits"] = precision_digits();
  j["pass"] = all_passed(results);
  Json checks = Json::array();
  for (const auto& r : results) {
    Json c;
    c["id"] = r.id;
    c["name"] = r.name;
    c["pass"] = r.pass;
    c["detail"] = Json::parse(r.detail_json);
    checks.push_back(c);
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

}  // namespace nclandau
