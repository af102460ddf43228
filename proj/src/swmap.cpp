#include "nclandau/swmap.hpp"

#include "nclandau/linsolve.hpp"

#include <map>
#include <stdexcept>

namespace nclandau {

namespace {

GaussianRational gr(const Rational& q) { return GaussianRational(q); }

ConfigPoly cpoly(const Rational& q) { return ConfigPoly::constant(gr(q)); }

ThetaSeries constant_series(int order, const Rational& q) { return ThetaSeries(order, cpoly(q)); }

// Series whose theta^k coefficient is coeffs[k] (missing entries are zero).
ThetaSeries scalar_series(int order, const std::vector<Rational>& coeffs) {
  ThetaSeries s(order);
  for (int k = 0; k <= order && k < static_cast<int>(coeffs.size()); ++k) s.set(k, cpoly(coeffs[static_cast<std::size_t>(k)]));
  return s;
}

SeriesPair field_from_profile(const ThetaSeries& bbar, const Rational& r) {
  return {bbar.times(var_y<GaussianRational>()) * gr(r - 1), bbar.times(var_x<GaussianRational>()) * gr(r)};
}

// Series truncated to theta^0 and theta^1, the accuracy of the bracket maps.
ThetaSeries first_order(const ThetaSeries& s) {
  ThetaSeries out(s.order());
  out.set(0, s.extract(0));
  if (s.order() >= 1) out.set(1, s.extract(1));
  return out;
}

std::vector<std::string> low_orders(const SeriesPair& p) {
  return {p.first.extract(0).to_string(), p.first.extract(1).to_string(), p.second.extract(0).to_string(),
          p.second.extract(1).to_string()};
}

bool agree_through_first(const SeriesPair& a, const SeriesPair& b) {
  for (int k = 0; k <= 1; ++k)
    if (a.first.extract(k) != b.first.extract(k) || a.second.extract(k) != b.second.extract(k)) return false;
  return true;
}

Rational binomial(const Rational& p, int k) {
  Rational b(1);
  for (int j = 1; j <= k; ++j) b = b * (p - (j - 1)) / j;
  return b;
}

// Pair of (epsilon^0, epsilon^1) parts; epsilon^2 is dropped.
struct EpsLinear {
  ThetaSeries value;
  ThetaSeries slope;

  friend EpsLinear operator+(const EpsLinear& a, const EpsLinear& b) { return {a.value + b.value, a.slope + b.slope}; }
};

EpsLinear eps_star(const EpsLinear& a, const EpsLinear& b, const Rational& r) {
  return {series_star_product(a.value, b.value, r),
          series_star_product(a.value, b.slope, r) + series_star_product(a.slope, b.value, r)};
}

}  // namespace

void SWContext::validate() const {
  if (order < 2) throw std::invalid_argument("series order K must be >= 2, got " + std::to_string(order));
  if (hbar <= 0) throw std::invalid_argument("hbar must be positive");
}

PlaneParams SWContext::plane() const {
  PlaneParams p;
  p.hbar = hbar;
  p.theta = theta_value;
  p.e = e;
  p.B = B;
  p.r = r;
  return p;
}

SeriesPair expand_gauge_field_nc(const SWContext& ctx) {
  ctx.validate();
  const int K = ctx.order;
  const Rational s = ctx.r * (ctx.r - 1) * ctx.e * ctx.B / ctx.hbar;
  // Bbar / B = 2 / (1 + sqrt(1 - 4 s theta)) = 1 / (1 + v), v = (sqrt(1 - 4 s theta) - 1) / 2.
  ThetaSeries u = ThetaSeries::theta(K) * gr(-4 * s);
  ThetaSeries v = (series_binomial_power(u, Rational(1, 2)) - constant_series(K, 1)) * gr(Rational(1, 2));
  ThetaSeries bbar = series_binomial_power(v, Rational(-1)) * gr(ctx.B);
  return field_from_profile(bbar, ctx.r);
}

ThetaSeries commutative_field_series(const SWContext& ctx) {
  ctx.validate();
  const Rational s = ctx.r * (ctx.r - 1) * ctx.e * ctx.B / ctx.hbar;
  return series_binomial_power(ThetaSeries::theta(ctx.order) * gr(-4 * s), Rational(-1)) * gr(ctx.B);
}

Rational commutative_field_value(const SWContext& ctx) {
  const Rational den = ctx.hbar - 4 * ctx.r * (ctx.r - 1) * ctx.e * ctx.theta_value * ctx.B;
  if (den == 0)
    throw ParameterError("sw_denominator", "hbar - 4r(r-1)e*theta*B vanishes; commutative field strength undefined");
  return ctx.hbar * ctx.B / den;
}

SeriesPair gauge_field_fixed_frak(const SWContext& ctx, const Rational& frak) {
  ctx.validate();
  const Rational c = 4 * ctx.r * (ctx.r - 1) * ctx.e * frak / ctx.hbar;
  // Bbar = -2 frak sum_{k>=1} binom(-1/2, k) c^(k-1) theta^(k-1).
  std::vector<Rational> coeffs;
  Rational c_pow(1);
  for (int j = 0; j <= ctx.order; ++j) {
    coeffs.push_back(-2 * frak * binomial(Rational(-1, 2), j + 1) * c_pow);
    c_pow *= c;
  }
  return field_from_profile(scalar_series(ctx.order, coeffs), ctx.r);
}

SeriesPair sw_bracket_form(const SeriesPair& a, const ThetaSeries& f_xy, const SWContext& ctx) {
  const ThetaSeries& ax = a.first;
  const ThetaSeries& ay = a.second;
  const ThetaSeries f_yx = -f_xy;
  const GaussianRational k = gr(ctx.e / ctx.hbar);
  ThetaSeries bx = ax.derivative(1) * gr(3 * ctx.r - 1) + f_yx * gr(1 - ctx.r);
  ThetaSeries by = ay.derivative(0) * gr(2 - 3 * ctx.r) + f_xy * gr(ctx.r);
  ThetaSeries cx = series_mul(ax, bx).shifted(1) * (k * gr(theta_sign(0, 1)));
  ThetaSeries cy = series_mul(ay, by).shifted(1) * (k * gr(theta_sign(1, 0)));
  return {ax - cx, ay - cy};
}

SeriesPair sw_symmetric_form(const SeriesPair& a, const ThetaSeries& f_xy, const SWContext& ctx) {
  const ThetaSeries& ax = a.first;
  const ThetaSeries& ay = a.second;
  const GaussianRational k = gr(ctx.e / (2 * ctx.hbar));
  ThetaSeries cx = series_mul(ax, ax.derivative(1) - f_xy).shifted(1) * (k * gr(theta_sign(0, 1)));
  ThetaSeries cy = series_mul(ay, ay.derivative(0) + f_xy).shifted(1) * (k * gr(theta_sign(1, 0)));
  return {ax - cx, ay - cy};
}

SWMapReport sw_map_gauge_field(const SWContext& ctx) {
  ctx.validate();
  const int K = ctx.order;
  SWMapReport rep;
  auto add = [&](std::string name, const SeriesPair& direct, const SeriesPair& reassembled) {
    rep.routes.push_back({std::move(name), low_orders(direct), low_orders(reassembled),
                          agree_through_first(direct, reassembled)});
  };

  // Fixed B: commutative data carry the theta dependence of frak(theta).
  const SeriesPair direct_b = expand_gauge_field_nc(ctx);
  const ThetaSeries frak_series = commutative_field_series(ctx);
  const SeriesPair comm_b = field_from_profile(frak_series, ctx.r);
  add("fixed-B bracket form", direct_b, sw_bracket_form(comm_b, frak_series, ctx));

  // Fixed frak: theta-independent commutative data.
  const Rational frak = commutative_field_value(ctx);
  const SeriesPair direct_f = gauge_field_fixed_frak(ctx, frak);
  const ThetaSeries frak_const = constant_series(K, frak);
  const SeriesPair comm_f = field_from_profile(frak_const, ctx.r);
  add("fixed-frak bracket form", direct_f, sw_bracket_form(comm_f, frak_const, ctx));

  // Stated first-order coefficients at fixed frak.
  const Rational q = ctx.r * ctx.e * frak * frak / ctx.hbar;
  SeriesPair stated{first_order(comm_f.first), first_order(comm_f.second)};
  ConfigPoly sx = var_y<GaussianRational>() * gr(-3 * q * (ctx.r - 1) * (ctx.r - 1));
  ConfigPoly sy = var_x<GaussianRational>() * gr(3 * q * ctx.r * (1 - ctx.r));
  stated.first.set(1, sx);
  stated.second.set(1, sy);
  add("fixed-frak stated coefficients", direct_f, stated);

  if (ctx.r == Rational(1, 2)) {
    add("fixed-B symmetric form", direct_b, sw_symmetric_form(comm_b, frak_series, ctx));
    add("fixed-frak symmetric form", direct_f, sw_symmetric_form(comm_f, frak_const, ctx));
  }

  rep.pass = true;
  for (const auto& r : rep.routes) rep.pass = rep.pass && r.agree;
  return rep;
}

FieldStrengthExpansion expand_field_strength_nc(const SWContext& ctx) {
  ctx.validate();
  FieldStrengthExpansion out{Rational(0), Rational(0), Rational(0), ThetaSeries(ctx.order), ThetaSeries(ctx.order)};
  out.frak = commutative_field_value(ctx);
  out.t = 4 * ctx.r * (ctx.r - 1) * ctx.e * ctx.theta_value * out.frak / ctx.hbar;
  if (out.t == -1) throw ParameterError("one_plus_t", "1 + t vanishes; closed form undefined");
  out.closed_form = out.frak / (1 + out.t);
  out.closed_form_equals_B = out.closed_form == ctx.B;

  const Rational c = 4 * ctx.r * (ctx.r - 1) * ctx.e * out.frak / ctx.hbar;
  out.series = series_binomial_power(ThetaSeries::theta(ctx.order) * gr(c), Rational(-1)) * gr(out.frak);

  const ThetaSeries f_xy = constant_series(ctx.order, out.frak);
  const ThetaSeries f_yx = -f_xy;
  const GaussianRational k = gr(4 * ctx.e * ctx.r * (1 - ctx.r) / ctx.hbar) * gr(theta_sign(1, 0));
  out.sw_form = f_xy + series_mul(f_xy, f_yx).shifted(1) * k;
  out.series_matches_sw_form =
      out.series.extract(0) == out.sw_form.extract(0) && out.series.extract(1) == out.sw_form.extract(1);
  return out;
}

ThetaSeries field_strength_series(const SeriesPair& a, const SWContext& ctx) {
  const GaussianRational coupling{Rational(0), -ctx.e / ctx.hbar};
  return a.second.derivative(0) - a.first.derivative(1) + series_star_commutator(a.first, a.second, ctx.r) * coupling;
}

SeriesPair delta_gauge_field(const SWContext& ctx) {
  ctx.validate();
  // Coefficient k is a polynomial in r of degree <= 2k+1.
  const int n_nodes = 2 * ctx.order + 2;
  std::vector<Rational> nodes;
  for (int j = 0; j < n_nodes; ++j) nodes.push_back(ctx.r + j);

  std::vector<Rational> w(static_cast<std::size_t>(n_nodes));
  const Rational& x0 = nodes[0];
  for (int j = 0; j < n_nodes; ++j) {
    if (j == 0) {
      Rational s(0);
      for (int k = 1; k < n_nodes; ++k) s += 1 / (x0 - nodes[static_cast<std::size_t>(k)]);
      w[0] = s;
      continue;
    }
    Rational num(1), den(1);
    for (int k = 0; k < n_nodes; ++k) {
      if (k == j) continue;
      den *= nodes[static_cast<std::size_t>(j)] - nodes[static_cast<std::size_t>(k)];
      if (k != 0) num *= x0 - nodes[static_cast<std::size_t>(k)];
    }
    w[static_cast<std::size_t>(j)] = num / den;
  }

  SeriesPair out{ThetaSeries(ctx.order), ThetaSeries(ctx.order)};
  for (int j = 0; j < n_nodes; ++j) {
    SeriesPair a = expand_gauge_field_nc(ctx.with_r(nodes[static_cast<std::size_t>(j)]));
    out.first += a.first * gr(w[static_cast<std::size_t>(j)]);
    out.second += a.second * gr(w[static_cast<std::size_t>(j)]);
  }
  return out;
}

namespace {

using Key = ConfigPoly::Key;

// Solves dx lambda_k = rhs with zero constant and zero pure-y terms,
// ansatz monomials of total degree <= degree.
std::optional<ConfigPoly> solve_x_equation(const ConfigPoly& rhs, unsigned degree) {
  std::vector<Key> unknowns;
  for (unsigned d = 0; d <= degree; ++d)
    for (unsigned a = 0; a <= d; ++a) unknowns.push_back(Key{a, d - a});

  std::map<Key, std::size_t, GradedLexDesc<2>> row_of;
  auto row_index = [&](const Key& k) {
    auto [it, inserted] = row_of.try_emplace(k, row_of.size());
    return it->second;
  };
  for (const auto& [k, c] : rhs.terms()) row_index(k);
  for (const auto& m : unknowns)
    if (m[0] > 0) row_index(Key{m[0] - 1, m[1]});

  const std::size_t n_eq = row_of.size();
  std::vector<std::size_t> pure_y;
  for (std::size_t j = 0; j < unknowns.size(); ++j)
    if (unknowns[j][0] == 0) pure_y.push_back(j);

  std::vector<std::vector<GaussianRational>> a(n_eq + pure_y.size(),
                                               std::vector<GaussianRational>(unknowns.size(), GaussianRational(0)));
  std::vector<GaussianRational> b(a.size(), GaussianRational(0));
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    const Key& m = unknowns[j];
    if (m[0] == 0) continue;
    a[row_of.at(Key{m[0] - 1, m[1]})][j] = GaussianRational(Rational(m[0]));
  }
  for (const auto& [k, c] : rhs.terms()) b[row_of.at(k)] = c;
  for (std::size_t i = 0; i < pure_y.size(); ++i) a[n_eq + i][pure_y[i]] = GaussianRational(1);

  LinearSolution sol = solve_exact(std::move(a), std::move(b));
  if (sol.status != SolveStatus::unique) return std::nullopt;
  ConfigPoly out;
  for (std::size_t j = 0; j < unknowns.size(); ++j) out.add_term(unknowns[j], sol.x[j]);
  return out;
}

}  // namespace

GaugeFunctionResult solve_gauge_function(const SWContext& ctx) {
  ctx.validate();
  const int K = ctx.order;
  const SeriesPair a = expand_gauge_field_nc(ctx);
  const SeriesPair da = delta_gauge_field(ctx);
  const GaussianRational coupling{Rational(0), ctx.e / ctx.hbar};

  GaugeFunctionResult res{ThetaSeries(K), ThetaSeries(K), ThetaSeries(K), {}, {}};
  res.normalization = "constant and pure-y terms vanish at every order; pure-x terms are fixed by the x equation";
  for (int k = 0; k <= K; ++k) {
    // lambda_k does not enter order k of the commutator: its partner there is A at theta^0 with no bidifferential term.
    const ThetaSeries comm = series_star_commutator(res.lambda_nc, a.first, ctx.r);
    const ConfigPoly rhs = da.first.extract(k) - comm.extract(k) * coupling;
    std::optional<ConfigPoly> lam;
    unsigned degree = static_cast<unsigned>(k) + 2;
    for (; degree <= static_cast<unsigned>(k) + 6; ++degree) {
      lam = solve_x_equation(rhs, degree);
      if (lam) break;
    }
    if (!lam) throw GaugeSolveError(k, "gauge-function system has no unique solution at theta order " + std::to_string(k));
    res.ansatz_degree.push_back(static_cast<int>(degree));
    res.lambda_nc.set(k, *lam);
  }

  res.residual_x = da.first - res.lambda_nc.derivative(0) - series_star_commutator(res.lambda_nc, a.first, ctx.r) * coupling;
  res.residual_y =
      da.second - res.lambda_nc.derivative(1) - series_star_commutator(res.lambda_nc, a.second, ctx.r) * coupling;
  return res;
}

FiniteTransformReport verify_finite_gauge_transform(const SWContext& ctx, const Rational& eps_weight) {
  ctx.validate();
  if (ctx.e == 0) throw std::invalid_argument("finite gauge transformation needs e != 0");
  const int K = ctx.order;
  const Rational& r = ctx.r;
  const SeriesPair a = expand_gauge_field_nc(ctx);
  const SeriesPair da = delta_gauge_field(ctx);
  const ThetaSeries lambda = solve_gauge_function(ctx).lambda_nc * gr(eps_weight);

  const ThetaSeries zero(K);
  const EpsLinear one{constant_series(K, 1), zero};
  const GaussianRational ie_hbar{Rational(0), ctx.e / ctx.hbar};
  const EpsLinear gen{zero, lambda * ie_hbar};
  const EpsLinear neg_gen{zero, lambda * (-ie_hbar)};

  auto mul = [&](const EpsLinear& x, const EpsLinear& y) { return eps_star(x, y, r); };
  auto scale = [](const EpsLinear& x, const Rational& q) { return EpsLinear{x.value * gr(q), x.slope * gr(q)}; };
  const EpsLinear u = truncated_exponential(gen, one, K, mul, scale);
  const EpsLinear u_inv = truncated_exponential(neg_gen, one, K, mul, scale);

  FiniteTransformReport rep{zero, zero, {zero, zero}, {zero, zero}, {zero, zero}, false};
  const EpsLinear unit = mul(u, u_inv);
  rep.unitarity_value = unit.value - one.value;
  rep.unitarity_slope = unit.slope;

  const GaussianRational ihbar_e{Rational(0), ctx.hbar / ctx.e};
  auto transform = [&](const ThetaSeries& aj, std::size_t var) {
    const EpsLinear field{aj, zero};
    EpsLinear conj = mul(mul(u, field), u_inv);
    EpsLinear d_inv{u_inv.value.derivative(var), u_inv.slope.derivative(var)};
    EpsLinear inhom = mul(u, d_inv);
    return EpsLinear{conj.value + inhom.value * ihbar_e, conj.slope + inhom.slope * ihbar_e};
  };
  const EpsLinear tx = transform(a.first, 0);
  const EpsLinear ty = transform(a.second, 1);
  rep.residual_value = {tx.value - a.first, ty.value - a.second};
  rep.residual_slope = {tx.slope - da.first * gr(eps_weight), ty.slope - da.second * gr(eps_weight)};
  rep.abelian_order0 = {ThetaSeries(K, tx.slope.extract(0)), ThetaSeries(K, ty.slope.extract(0))};

  rep.pass = rep.unitarity_value.is_zero() && rep.unitarity_slope.is_zero() && rep.residual_value.first.is_zero() &&
             rep.residual_value.second.is_zero() && rep.residual_slope.first.is_zero() &&
             rep.residual_slope.second.is_zero();
  return rep;
}

}  // namespace nclandau
