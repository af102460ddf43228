// Command-line front end. Exit codes: 0 all requested checks pass, 1 a check
// failed, 2 invalid input (arguments, config or parameter point).

#include "nclandau/battery.hpp"
#include "nclandau/config.hpp"
#include "nclandau/expr.hpp"
#include "nclandau/osc.hpp"
#include "nclandau/swmap.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace nclandau;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;

struct ParamFlags {
  std::string config;
  std::optional<std::string> hbar, theta, e, B, m, r;

  void add(CLI::App* app) {
    app->add_option("--config", config, "JSON run configuration (see docs/config.schema.json)");
    app->add_option("--hbar", hbar, "hbar as p/q or decimal");
    app->add_option("--theta", theta, "noncommutativity theta");
    app->add_option("--e", e, "charge e");
    app->add_option("--B", B, "magnetic field B");
    app->add_option("--m", m, "mass m");
    app->add_option("--r", r, "gauge parameter r");
  }

  /// Config file first, then flags; validates the resulting point.
  RunConfig load(bool require_valid = true) const {
    RunConfig c = config.empty() ? parse_run_config(R"({"params": {}})") : load_run_config(config);
    std::vector<std::string> errs;
    auto set = [&](const std::optional<std::string>& v, Rational& slot, const char* name) {
      if (!v) return;
      try {
        slot = parse_rational(*v);
      } catch (const std::exception& ex) {
        errs.push_back(std::string("--") + name + ": " + ex.what());
      }
    };
    set(hbar, c.params.hbar, "hbar");
    set(theta, c.params.theta, "theta");
    set(e, c.params.e, "e");
    set(B, c.params.B, "B");
    set(m, c.params.m, "m");
    set(r, c.params.r, "r");
    if (!errs.empty()) throw ConfigError(errs);
    if (require_valid) validate(c.params);
    return c;
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

/// Shortest p/q (q <= 10^6) within 10^-(digits-5) of v, else the decimal.
std::string exact_or_decimal(const HPReal& v) {
  const HPReal tol = pow(HPReal(10), -(precision_digits() - 5)) * std::max(HPReal(1), HPReal(abs(v)));
  HPReal x = v;
  boost::multiprecision::mpz_int h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int it = 0; it < 40; ++it) {
    const HPReal fl = floor(x);
    const boost::multiprecision::mpz_int a(fl.convert_to<boost::multiprecision::mpz_int>());
    const boost::multiprecision::mpz_int h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > 1000000) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const Rational q(h1, k1);
    if (abs(to_hp(q) - v) <= tol) return rational_to_string(q);
    const HPReal frac = x - fl;
    if (frac == 0) break;
    x = 1 / frac;
  }
  return to_string(HPComplex(v));
}

class Output {
public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ConfigError({"$.output.path: cannot open '" + path + "'"});
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
  std::ofstream file_;
};

std::string output_path(const RunConfig& c, const std::string& flag) { return flag.empty() ? c.output.path : flag; }

int cmd_star(const std::string& r, const std::string& theta, const std::string& lhs, const std::string& rhs, bool commutator) {
  const StarContext ctx{parse_rational(r), parse_rational(theta)};
  const ConfigPoly f = to_config_poly(parse_expression(lhs, ExprKind::config));
  const ConfigPoly g = to_config_poly(parse_expression(rhs, ExprKind::config));
  std::cout << (commutator ? star_commutator(f, g, ctx) : star_product(f, g, ctx)).to_string() << "\n";
  return kPass;
}

int cmd_equiv(const std::string& r_from, const std::string& r_to, const std::string& theta, const std::string& lhs,
              const std::string& rhs, int cases, std::uint64_t seed) {
  const Rational r1 = parse_rational(r_from), r2 = parse_rational(r_to), th = parse_rational(theta);
  std::vector<std::pair<ConfigPoly, ConfigPoly>> pairs;
  if (!lhs.empty() || !rhs.empty()) {
    pairs.emplace_back(to_config_poly(parse_expression(lhs.empty() ? "1" : lhs, ExprKind::config)),
                       to_config_poly(parse_expression(rhs.empty() ? "1" : rhs, ExprKind::config)));
  } else {
    std::mt19937_64 rng(seed);
    auto draw = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    auto poly = [&] {
      ConfigPoly p;
      for (long t = draw(1, 5); t > 0; --t) {
        const auto d = static_cast<unsigned>(draw(0, 5));
        const auto a = static_cast<unsigned>(draw(0, d));
        p.add_term(ConfigPoly::Key{a, d - a}, GaussianRational(Rational(draw(-12, 12), draw(1, 9)), Rational(draw(-3, 3), draw(1, 4))));
      }
      return p;
    };
    for (int i = 0; i < cases; ++i) {
      ConfigPoly a = poly();
      pairs.emplace_back(std::move(a), poly());
    }
  }
  int failures = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    const ConfigPoly left = equivalence_map(star_product(a, b, StarContext{r1, th}), r1, r2, th);
    const ConfigPoly right = star_product(equivalence_map(a, r1, r2, th), equivalence_map(b, r1, r2, th), StarContext{r2, th});
    const bool ok = left == right;
    if (!ok) ++failures;
    if (pairs.size() == 1 || !ok) std::cout << "case " << i << ": " << (ok ? "PASS" : "FAIL") << "  T(F*G) = " << left.to_string() << "\n";
  }
  std::cout << (failures == 0 ? "PASS" : "FAIL") << " equivalence map on " << pairs.size() << " case(s), " << failures << " failure(s)\n";
  return failures == 0 ? kPass : kFail;
}

int cmd_params(const RunConfig& c, bool json) {
  const PlaneParams& p = c.params;
  const DerivedScalars d = derived_scalars(p);
  const IdentityReport rep = identity_suite(p);
  const KinematicCommutators k = kinematic_commutators(p);
  const HPReal tol = pow(HPReal(10), -(precision_digits() - 10));
  const bool pass = rep.max_residual <= tol;
  if (json) {
    Json j;
    j["Lambda_bar"] = exact_or_decimal(d.lambda_bar);
    j["B_bar"] = exact_or_decimal(d.b_bar);
    j["frak_B"] = d.frak_b ? exact_or_decimal(*d.frak_b) : "undefined";
    j["m_star"] = exact_or_decimal(d.m_star);
    j["e_star"] = exact_or_decimal(d.e_star);
    j["E0"] = exact_or_decimal(landau_levels(p, 0).front());
    j["commutator_Pi_x_Pi_y"] = to_string(k.pi_x_pi_y);
    j["commutator_Pi_x_Pi_y_table_form"] = to_string(k.pi_x_pi_y_table);
    j["commutator_Pi_x_Pi_y_without_e"] = to_string(k.pi_x_pi_y_alternate);
    Json ids = Json::array();
    for (const auto& id : rep.identities)
      ids.push_back({{"name", id.name}, {"lhs", to_string(HPComplex(id.lhs))}, {"rhs", to_string(HPComplex(id.rhs))},
                     {"rel_residual", id.rel_residual.convert_to<double>()}, {"pass", id.rel_residual <= tol}});
    j["identities"] = ids;
    j["tolerance"] = tol.convert_to<double>();
    j["pass"] = pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Lambda_bar = " << exact_or_decimal(d.lambda_bar) << "\n"
              << "B_bar = " << exact_or_decimal(d.b_bar) << "\n"
              << "frak_B = " << (d.frak_b ? exact_or_decimal(*d.frak_b) : "undefined") << "\n"
              << "m_star = " << exact_or_decimal(d.m_star) << "\n"
              << "e_star = " << exact_or_decimal(d.e_star) << "\n"
              << "E0 = " << exact_or_decimal(landau_levels(p, 0).front()) << "\n"
              << "[Pi_x, Pi_y] = " << to_string(k.pi_x_pi_y) << "  (i e hbar B = " << to_string(k.pi_x_pi_y_table)
              << "; i hbar B = " << to_string(k.pi_x_pi_y_alternate) << ")\n";
    for (const auto& id : rep.identities)
      std::cout << (id.rel_residual <= tol ? "PASS " : "FAIL ") << id.name << "  residual " << fmt(id.rel_residual.convert_to<double>())
                << "\n";
    std::cout << (pass ? "PASS" : "FAIL") << " identity suite (tolerance " << fmt(tol.convert_to<double>()) << ")\n";
  }
  return pass ? kPass : kFail;
}

SWContext sw_context(const RunConfig& c) {
  SWContext ctx;
  ctx.r = c.params.r;
  ctx.e = c.params.e;
  ctx.B = c.params.B;
  ctx.hbar = c.params.hbar;
  ctx.order = c.series_order;
  ctx.theta_value = c.params.theta;
  ctx.validate();
  return ctx;
}

int cmd_sw_expand(const RunConfig& c) {
  const SWContext ctx = sw_context(c);
  const auto [ax, ay] = expand_gauge_field_nc(ctx);
  std::cout << "A_x = " << ax.to_string() << "\nA_y = " << ay.to_string() << "\n";
  const SWMapReport rep = sw_map_gauge_field(ctx);
  for (const auto& route : rep.routes) {
    std::cout << (route.agree ? "PASS " : "FAIL ") << route.name << "\n";
    for (std::size_t i = 0; i < route.direct.size(); ++i)
      std::cout << "  " << route.direct[i] << "  |  " << (i < route.reassembled.size() ? route.reassembled[i] : "") << "\n";
  }
  return rep.pass ? kPass : kFail;
}

int cmd_gauge_function(const RunConfig& c) {
  const SWContext ctx = sw_context(c);
  const GaugeFunctionResult res = solve_gauge_function(ctx);
  std::cout << "lambda = " << res.lambda_nc.to_string() << "  (per unit epsilon; " << res.normalization << ")\n"
            << "x-equation residual = " << res.residual_x.to_string() << "\n"
            << "y-equation residual = " << res.residual_y.to_string() << "\n";
  const FiniteTransformReport fin = verify_finite_gauge_transform(ctx);
  std::cout << "finite transform residual (eps^1) = " << fin.residual_slope.first.to_string() << ", "
            << fin.residual_slope.second.to_string() << "\n";
  const bool pass = res.residual_x.is_zero() && res.residual_y.is_zero() && fin.pass;
  std::cout << (pass ? "PASS" : "FAIL") << " gauge function\n";
  return pass ? kPass : kFail;
}

int cmd_field_strength(const RunConfig& c) {
  const PlaneParams& p = c.params;
  const StarContext sctx{p.r, p.theta, p.hbar, p.e};
  const HPConfigPoly f = field_strength_star(gauge_field_nc(p), sctx);
  const HPReal res = max_abs_coefficient(f - HPConfigPoly::constant(HPComplex(p.B)));
  const HPReal tol = pow(HPReal(10), -(precision_digits() - 12)) * std::max(HPReal(1), HPReal(abs(to_hp(p.B))));
  std::cout << "F_xy = " << f.to_string() << "\nresidual vs B = " << fmt(res.convert_to<double>()) << "\n";
  bool pass = res <= tol;
  const SWContext ctx = sw_context(c);
  try {
    const FieldStrengthExpansion fs = expand_field_strength_nc(ctx);
    std::cout << "frak = " << rational_to_string(fs.frak) << ", t = " << rational_to_string(fs.t)
              << ", frak/(1+t) = " << rational_to_string(fs.closed_form) << "\n"
              << "series = " << fs.series.to_string() << "\n";
    pass = pass && fs.closed_form_equals_B && fs.series_matches_sw_form;
  } catch (const ParameterError& e) {
    std::cout << "closed form undefined: " << e.what() << "\n";
  }
  std::cout << (pass ? "PASS" : "FAIL") << " field strength\n";
  return pass ? kPass : kFail;
}

OscBasis basis_for(const RunConfig& c, const SweepPoint& pt) {
  OscBasis b = OscBasis::cyclotron(pt.params, pt.n_per_mode);
  if (c.basis.length_scale) b.length_scale = *c.basis.length_scale;
  return b;
}

int cmd_spectrum(const RunConfig& c, const std::string& out_path, int levels, double tolerance) {
  Output out(output_path(c, out_path));
  bool pass = true;
  Json rows = Json::array();
  std::vector<std::string> csv;
  for (const auto& pt : sweep_points(c)) {
    validate(pt.params);
    const OscBasis b = basis_for(c, pt);
    const LandauSpectrumReport rep = landau_spectrum_check(pt.params, b, levels);
    const bool ok = rep.ladder_residual <= 1e-8 && rep.ladder_commutator <= 1e-8 && rep.route_difference <= 1e-10 &&
                    rep.e0_estimate >= rep.e0_analytic * (1 - 1e-10) - 1e-12 && rep.rel_err <= tolerance;
    pass = pass && ok;
    csv.push_back(spectrum_csv_row(pt.params, b, rep));
    Json j;
    j["r"] = rational_to_string(pt.params.r);
    j["theta"] = rational_to_string(pt.params.theta);
    j["N"] = pt.n_per_mode;
    j["E0_estimate"] = rep.e0_estimate;
    j["E0_analytic"] = rep.e0_analytic;
    j["rel_err"] = rep.rel_err;
    j["ladder_residual"] = rep.ladder_residual;
    j["ladder_commutator_residual"] = rep.ladder_commutator;
    j["route_difference"] = rep.route_difference;
    j["lowest"] = rep.lowest;
    j["near_ground_count"] = rep.near_ground_count;
    j["pass"] = ok;
    rows.push_back(j);
  }
  switch (c.output.format) {
    case OutputFormat::csv:
      out.out() << spectrum_csv_header() << "\n";
      for (const auto& row : csv) out.out() << row << "\n";
      break;
    case OutputFormat::json: out.out() << Json{{"points", rows}, {"pass", pass}}.dump(2) << "\n"; break;
    case OutputFormat::text:
      for (const auto& j : rows)
        out.out() << (j["pass"].get<bool>() ? "PASS" : "FAIL") << " r=" << j["r"].get<std::string>() << " theta=" << j["theta"].get<std::string>()
                  << " N=" << j["N"].get<int>() << " E0=" << fmt(j["E0_estimate"].get<double>()) << " (exact "
                  << fmt(j["E0_analytic"].get<double>()) << ") ladder=" << fmt(j["ladder_residual"].get<double>()) << "\n";
      break;
  }
  return pass ? kPass : kFail;
}

int cmd_naive(const RunConfig& c, const std::string& out_path) {
  Output out(output_path(c, out_path));
  bool pass = true;
  Json rows = Json::array();
  for (const auto& pt : sweep_points(c)) {
    validate(pt.params);
    const NaiveSpectrumReport rep = naive_spectrum_check(pt.params, basis_for(c, pt));
    const bool ok = std::abs(rep.scale_estimate - rep.scale_analytic) <= 1e-8 && rep.scale_spread <= 1e-8;
    pass = pass && ok;
    rows.push_back({{"r", rational_to_string(pt.params.r)},
                    {"theta", rational_to_string(pt.params.theta)},
                    {"N", pt.n_per_mode},
                    {"scale_estimate", rep.scale_estimate},
                    {"scale_analytic", rep.scale_analytic},
                    {"E0_estimate", rep.e0_estimate},
                    {"E0_analytic", rep.e0_analytic},
                    {"spacing_estimate", rep.spacing_estimate},
                    {"pass", ok}});
  }
  if (c.output.format == OutputFormat::csv) {
    out.out() << "r,theta,N,scale_estimate,scale_analytic,E0_estimate,E0_analytic,spacing_estimate\n";
    for (const auto& j : rows)
      out.out() << j["r"].get<std::string>() << ',' << j["theta"].get<std::string>() << ',' << j["N"].get<int>() << ','
                << fmt(j["scale_estimate"].get<double>()) << ',' << fmt(j["scale_analytic"].get<double>()) << ','
                << fmt(j["E0_estimate"].get<double>()) << ',' << fmt(j["E0_analytic"].get<double>()) << ','
                << fmt(j["spacing_estimate"].get<double>()) << "\n";
  } else {
    out.out() << Json{{"points", rows}, {"pass", pass}}.dump(2) << "\n";
  }
  return pass ? kPass : kFail;
}

int cmd_report(std::uint64_t seed, const std::string& out_path) {
  BatteryOptions o;
  o.seed = seed;
  const auto results = run_battery(o);
  Output out(out_path);
  out.out() << battery_report_json(o, results);
  for (const auto& r : results) std::cerr << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.name << "\n";
  return all_passed(results) ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative Landau problem: star products, Seiberg-Witten expansions and oscillator-basis spectra.\n"
               "Expressions use x, y, px, py, i and t (theta)."};
  app.require_subcommand(1);
  std::uint64_t seed = 7;
  std::string out_path, format;

  auto* star = app.add_subcommand("star", "Star product or commutator of two config expressions");
  std::string s_r = "1/2", s_theta = "1", s_lhs, s_rhs;
  bool s_comm = false;
  star->add_option("--r", s_r, "gauge parameter r");
  star->add_option("--theta", s_theta, "theta");
  star->add_option("--lhs", s_lhs, "left factor")->required();
  star->add_option("--rhs", s_rhs, "right factor")->required();
  star->add_flag("--commutator", s_comm, "print [lhs, rhs] instead of the product");

  auto* equiv = app.add_subcommand("equiv-check", "Check T(F * G) = T(F) *' T(G) on given or random polynomials");
  std::string e_from = "0", e_to = "1", e_theta = "1", e_lhs, e_rhs;
  int e_cases = 200;
  equiv->add_option("--r-from", e_from, "source gauge parameter");
  equiv->add_option("--r-to", e_to, "target gauge parameter");
  equiv->add_option("--theta", e_theta, "theta");
  equiv->add_option("--lhs", e_lhs, "F (random when both --lhs and --rhs are absent)");
  equiv->add_option("--rhs", e_rhs, "G");
  equiv->add_option("--cases", e_cases, "random cases")->check(CLI::Range(1, 100000));
  equiv->add_option("--seed", seed, "random seed");

  ParamFlags pf_params, pf_sw, pf_gauge, pf_field, pf_spec, pf_naive;
  auto* params = app.add_subcommand("params", "Derived scalars and the identity suite");
  pf_params.add(params);
  bool p_json = false;
  params->add_flag("--json", p_json, "JSON output");

  int order = -1;
  auto* sw = app.add_subcommand("sw-expand", "Theta expansion of the gauge field and first-order SW maps (theta is the evaluation point)");
  pf_sw.add(sw);
  sw->add_option("--order", order, "series order K (>= 2)");
  auto* gauge = app.add_subcommand("gauge-function", "Solve for the noncommutative gauge function");
  pf_gauge.add(gauge);
  gauge->add_option("--order", order, "series order K (>= 2)");
  auto* field = app.add_subcommand("field-strength", "Star field strength and its theta expansion");
  pf_field.add(field);
  field->add_option("--order", order, "series order K (>= 2)");

  int n_per_mode = -1, levels = 5;
  double tolerance = 0.02;
  auto* spec = app.add_subcommand("spectrum", "Oscillator-basis Landau spectrum over the configured sweep");
  pf_spec.add(spec);
  spec->add_option("--n", n_per_mode, "states per mode")->check(CLI::Range(4, 64));
  spec->add_option("--levels", levels, "eigenvalues to report")->check(CLI::Range(1, 4096));
  spec->add_option("--tolerance", tolerance, "allowed relative excess of the ground energy over E_0");
  spec->add_option("--format", format, "json, csv or text");
  spec->add_option("--output", out_path, "output file");
  auto* naive = app.add_subcommand("naive-compare", "Naive minimal prescription: commutator scale and ground energy");
  pf_naive.add(naive);
  naive->add_option("--n", n_per_mode, "states per mode")->check(CLI::Range(4, 64));
  naive->add_option("--format", format, "json or csv");
  naive->add_option("--output", out_path, "output file");

  auto* report = app.add_subcommand("report", "Full verification battery as one JSON document");
  report->add_option("--seed", seed, "random seed");
  report->add_option("--output", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  auto with_cli = [&](const ParamFlags& pf, bool need_order) {
    RunConfig c = pf.load();
    if (order >= 0) c.series_order = order;
    if (need_order && c.series_order < 2) c.series_order = 2;
    if (n_per_mode > 0) {
      c.basis.n_per_mode = n_per_mode;
      c.sweep.n_per_mode.clear();
    }
    if (!format.empty()) c.output.format = parse_output_format(format);
    return c;
  };

  try {
    if (star->parsed()) return cmd_star(s_r, s_theta, s_lhs, s_rhs, s_comm);
    if (equiv->parsed()) return cmd_equiv(e_from, e_to, e_theta, e_lhs, e_rhs, e_cases, seed);
    if (params->parsed()) return cmd_params(with_cli(pf_params, false), p_json);
    if (sw->parsed()) return cmd_sw_expand(with_cli(pf_sw, true));
    if (gauge->parsed()) return cmd_gauge_function(with_cli(pf_gauge, true));
    if (field->parsed()) return cmd_field_strength(with_cli(pf_field, true));
    if (spec->parsed()) return cmd_spectrum(with_cli(pf_spec, false), out_path, levels, tolerance);
    if (naive->parsed()) return cmd_naive(with_cli(pf_naive, false), out_path);
    if (report->parsed()) return cmd_report(seed, out_path);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  } catch (const ParameterError& e) {
    std::cerr << "invalid parameter point (" << e.quantity() << "): " << e.what() << "\n";
    return kInvalid;
  } catch (const ParseError& e) {
    std::cerr << "expression error at " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kInvalid;
}
