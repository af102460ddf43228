#include "nclandau/params.hpp"

namespace nclandau {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::sqrt;

HPReal hp(const Rational& q) { return to_hp(q); }

// hbar + sqrt(discriminant), shared denominator of the radical forms.
HPReal radical_denominator(const PlaneParams& p) { return hp(p.hbar) + sqrt(hp(p.discriminant())); }

}  // namespace

const PlaneParams& validate(const PlaneParams& p) {
  if (p.hbar <= 0) throw ParameterError("hbar", "hbar must be positive, got " + rational_to_string(p.hbar));
  if (p.m <= 0) throw ParameterError("m", "mass m must be positive, got " + rational_to_string(p.m));
  Rational disc = p.discriminant();
  if (disc <= 0)
    throw ParameterError("discriminant", "discriminant hbar^2 - 4r(r-1)e*hbar*theta*B must be positive, got " +
                                             rational_to_string(disc));
  return p;
}

HPReal effective_field(const PlaneParams& p) {
  validate(p);
  if (p.coupling() == 0) return hp(p.B);
  return 2 * hp(p.hbar) * hp(p.B) / radical_denominator(p);
}

HPReal lambda_bar(const PlaneParams& p) {
  validate(p);
  if (p.coupling() == 0) return HPReal(1);
  return 1 + 2 * hp(p.r * (1 - p.r) * p.e * p.theta * p.B) / radical_denominator(p);
}

HPReal lambda_bar_from_bbar(const PlaneParams& p) {
  return 1 - hp(p.r * (p.r - 1) * p.e * p.theta) * effective_field(p) / hp(p.hbar);
}

std::pair<HPReal, HPReal> reduced_params(const PlaneParams& p) {
  HPReal lam = lambda_bar(p);
  return {hp(p.m) / (lam * lam), hp(p.e) / lam};
}

HPReal sw_field_strength(const PlaneParams& p) {
  validate(p);
  Rational den = p.hbar - 4 * p.coupling();
  if (den == 0)
    throw ParameterError("sw_denominator", "hbar - 4r(r-1)e*theta*B vanishes; commutative field strength undefined");
  return hp(p.hbar * p.B / den);
}

HPReal bbar_from_frak(const HPReal& frak, const PlaneParams& p) {
  const Rational c = p.r * (p.r - 1) * p.e * p.theta;
  if (c == 0) return frak;
  HPReal arg = 1 + 4 * hp(c) * frak / hp(p.hbar);
  if (arg <= 0) throw ParameterError("sqrt_argument", "1 + 4r(r-1)e*theta*frakB/hbar must be positive");
  return hp(p.hbar) / (2 * hp(p.r * (1 - p.r) * p.e * p.theta)) * (1 / sqrt(arg) - 1);
}

DerivedScalars derived_scalars(const PlaneParams& p) {
  DerivedScalars d;
  d.lambda_bar = lambda_bar(p);
  d.b_bar = effective_field(p);
  if (p.hbar - 4 * p.coupling() != 0) d.frak_b = sw_field_strength(p);
  auto [ms, es] = reduced_params(p);
  d.m_star = ms;
  d.e_star = es;
  return d;
}

std::vector<HPReal> landau_levels(const PlaneParams& p, int n_max) {
  validate(p);
  std::vector<HPReal> out;
  HPReal omega = abs(hp(p.e * p.B)) / hp(p.m);
  for (int n = 0; n <= n_max; ++n) out.push_back(hp(p.hbar) * omega * (HPReal(n) + HPReal(0.5)));
  return out;
}

std::vector<HPReal> landau_levels_deformed(const PlaneParams& p, int n_max) {
  auto [ms, es] = reduced_params(p);
  HPReal omega = abs(es * effective_field(p)) / ms;
  std::vector<HPReal> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(hp(p.hbar) * omega * (HPReal(n) + HPReal(0.5)));
  return out;
}

std::pair<HPConfigPoly, HPConfigPoly> gauge_field_nc(const PlaneParams& p) {
  HPReal bb = effective_field(p);
  HPConfigPoly ax = var_y<HPComplex>() * HPComplex(hp(p.r - 1) * bb);
  HPConfigPoly ay = var_x<HPComplex>() * HPComplex(hp(p.r) * bb);
  return {ax, ay};
}

NaivePrescription naive_prescription(const PlaneParams& p) {
  validate(p);
  NaivePrescription n;
  n.fields.first = var_y<GaussianRational>() * GaussianRational((p.r - 1) * p.B);
  n.fields.second = var_x<GaussianRational>() * GaussianRational(p.r * p.B);
  n.commutator_scale = 1 - p.e * p.r * (p.r - 1) * p.theta * p.B / p.hbar;
  return n;
}

HPReal relative_residual(const HPReal& a, const HPReal& b) {
  HPReal aa = abs(a), ab = abs(b);
  HPReal scale = aa > ab ? aa : ab;
  if (scale == 0) return HPReal(0);
  return abs(a - b) / scale;
}

HPReal relative_residual(const HPComplex& a, const HPComplex& b) {
  HPReal aa = a.abs(), ab = b.abs();
  HPReal scale = aa > ab ? aa : ab;
  if (scale == 0) return HPReal(0);
  return (a - b).abs() / scale;
}

KinematicCommutators kinematic_commutators(const PlaneParams& p) {
  validate(p);
  const StarContext ctx{p.r, p.theta, p.hbar, p.e};
  const auto [ax, ay] = gauge_field_nc(p);
  const HPConfigPoly x = var_x<HPComplex>(), y = var_y<HPComplex>();
  const HPComplex i_hbar{HPReal(0), hp(p.hbar)};
  const HPComplex e{hp(p.e)};
  const HPReal d = radical_denominator(p);

  KinematicCommutators k;
  k.x_pi_x = i_hbar - e * star_commutator(x, ax, ctx).constant_term();
  k.y_pi_y = i_hbar - e * star_commutator(y, ay, ctx).constant_term();
  k.x_pi_x_closed = i_hbar * HPComplex(1 + 2 * hp((1 - p.r) * p.e * p.theta * p.B) / d);
  k.y_pi_y_closed = i_hbar * HPComplex(1 + 2 * hp(p.r * p.e * p.theta * p.B) / d);

  using Op = DiffOperator<HPComplex>;
  const HPComplex minus_i_hbar = -i_hbar;
  Op pix = Op::derivative(1, 0, minus_i_hbar) - star_action_operator(ax, ctx) * e;
  Op piy = Op::derivative(0, 1, minus_i_hbar) - star_action_operator(ay, ctx) * e;
  Op comm = compose(pix, piy) - compose(piy, pix);
  for (const auto& [ord, c] : comm.terms()) {
    for (const auto& [mono, v] : c.terms()) {
      if (ord == Op::Order{0, 0} && mono == HPConfigPoly::Key{}) {
        k.pi_x_pi_y = v;
        continue;
      }
      HPReal a = v.abs();
      if (a > k.non_central_residual) k.non_central_residual = a;
    }
  }
  k.pi_x_pi_y_table = HPComplex(HPReal(0), hp(p.e * p.hbar * p.B));
  k.pi_x_pi_y_alternate = HPComplex(HPReal(0), hp(p.hbar * p.B));
  return k;
}

IdentityReport identity_suite(const PlaneParams& p) {
  validate(p);
  IdentityReport rep;
  // `operand_scale` is the size of the terms that cancel inside a closed form;
  // residuals are measured against it when it exceeds both sides.
  auto add = [&](std::string name, HPReal lhs, HPReal rhs, HPReal operand_scale = HPReal(0)) {
    HPReal res = relative_residual(lhs, rhs);
    HPReal aa = abs(lhs), ab = abs(rhs);
    if (operand_scale > aa && operand_scale > ab) res = abs(lhs - rhs) / operand_scale;
    if (res > rep.max_residual) rep.max_residual = res;
    rep.identities.push_back({std::move(name), std::move(lhs), std::move(rhs), std::move(res)});
  };

  const HPReal lam = lambda_bar(p);
  const HPReal bb = effective_field(p);
  const HPReal B = hp(p.B);
  add("lambda_bar*b_bar = B", lam * bb, B);
  add("B = (1 - r(r-1)e*theta*b_bar/hbar)*b_bar", B, (1 - hp(p.r * (p.r - 1) * p.e * p.theta) * bb / hp(p.hbar)) * bb);
  add("lambda_bar = 1 - r(r-1)e*theta*b_bar/hbar", lam, lambda_bar_from_bbar(p));
  auto [ms, es] = reduced_params(p);
  add("e*^2 B^2/m* = e^2 B^2/m", es * es * B * B / ms, hp(p.e * p.e * p.B * p.B / p.m));
  add("E_0 deformed form = E_0", landau_levels_deformed(p, 0).front(), landau_levels(p, 0).front());
  if (p.hbar - 4 * p.coupling() != 0)
    add("bbar_from_frak(frak) = b_bar", bbar_from_frak(sw_field_strength(p), p), bb);

  const PlaneParams sym = p.with_r(Rational(1, 2));
  if (sym.discriminant() > 0) {
    const HPReal bb_sym = effective_field(sym);
    add("lambda_bar(1/2) = 1 + e*theta*b_bar/(4 hbar)", lambda_bar(sym),
        1 + hp(p.e * p.theta) * bb_sym / (4 * hp(p.hbar)));
    if (p.e * p.theta != 0)
      add("b_bar(1/2) = (2/(e*theta))(sqrt(hbar^2 + e*hbar*theta*B) - hbar)", bb_sym,
          2 / hp(p.e * p.theta) * (sqrt(hp(p.hbar * p.hbar + p.e * p.hbar * p.theta * p.B)) - hp(p.hbar)),
          abs(2 * hp(p.hbar / (p.e * p.theta))));
  }
  return rep;
}

}  // namespace nclandau
