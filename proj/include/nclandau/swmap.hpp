#pragma once

// Theta expansions of the noncommutative U(1) gauge data, the first-order
// Seiberg-Witten maps, the star field-strength equation, the infinitesimal
// gauge-function solve and the finite U(1)-star transformation check.
//
// Two parametrizations appear. With B held fixed the noncommutative field is
// ((r-1) Bbar y, r Bbar x), Bbar = 2B / (1 + sqrt(1 - 4 s theta)),
// s = r(r-1)eB/hbar. With the commutative field strength frak held fixed the
// same field reads Bbar = frak (1 + c theta)^(-1/2) expanded, c = 4r(r-1)e frak/hbar.
// The bracketed first-order maps are statements in the second form.

#include "nclandau/params.hpp"
#include "nclandau/theta_series.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nclandau {

/// Signs of the antisymmetric theta tensor: theta^{xy} = +theta, theta^{yx} = -theta.
inline constexpr int theta_sign(int i, int j) { return i == j ? 0 : (i < j ? 1 : -1); }

struct SWContext {
  Rational r{Rational(1, 2)};
  Rational e{1};
  Rational B{1};
  Rational hbar{1};
  int order = 2;
  /// Value of theta at which the closed forms are evaluated and the fixed
  /// commutative field strength frak = hbar B / (hbar - 4r(r-1)e theta B) is taken.
  Rational theta_value{1};

  /// Throws std::invalid_argument unless order >= 2 and hbar > 0.
  void validate() const;
  PlaneParams plane() const;
  SWContext with_r(const Rational& new_r) const {
    SWContext c = *this;
    c.r = new_r;
    return c;
  }
};

using SeriesPair = std::pair<ThetaSeries, ThetaSeries>;

/// Noncommutative gauge field at fixed B as exact theta series.
SeriesPair expand_gauge_field_nc(const SWContext& ctx);

/// Commutative field strength frak(theta) = B / (1 - 4 s theta) at fixed B.
ThetaSeries commutative_field_series(const SWContext& ctx);

/// frak at theta_value; throws ParameterError when hbar - 4r(r-1)e theta B = 0.
Rational commutative_field_value(const SWContext& ctx);

/// Gauge field at fixed frak: ((r-1) Bbar(theta) y, r Bbar(theta) x).
SeriesPair gauge_field_fixed_frak(const SWContext& ctx, const Rational& frak);

/// Bracketed first-order maps applied to commutative data (A, F_xy):
///   x: A_x - (e/hbar) theta^{xy} A_x [(3r-1) dy A_x + (1-r) F_yx]
///   y: A_y - (e/hbar) theta^{yx} A_y [(2-3r) dx A_y + r F_xy]
/// A and F are theta series so the theta-dependent frak of the fixed-B
/// parametrization can be fed through.
SeriesPair sw_bracket_form(const SeriesPair& a, const ThetaSeries& f_xy, const SWContext& ctx);

/// Symmetric-gauge forms: A_j - (e/2hbar) theta^{jk} A_j (dk A_j + F_kj).
SeriesPair sw_symmetric_form(const SeriesPair& a, const ThetaSeries& f_xy, const SWContext& ctx);

struct SWRouteCheck {
  std::string name;
  std::vector<std::string> direct;      // order-0 and order-1 coefficients, x then y
  std::vector<std::string> reassembled;
  bool agree = false;
};

struct SWMapReport {
  std::vector<SWRouteCheck> routes;
  bool pass = false;
};

/// Compares direct expansions against the bracket reassembly through order 1
/// in both parametrizations, plus the symmetric-gauge forms when r = 1/2 and
/// the stated first-order coefficients of the fixed-frak field.
SWMapReport sw_map_gauge_field(const SWContext& ctx);

struct FieldStrengthExpansion {
  Rational frak;          // commutative field strength at theta_value
  Rational t;             // 4r(r-1)e theta frak / hbar
  Rational closed_form;   // frak / (1 + t)
  ThetaSeries series;     // frak (1 + c theta)^(-1), c = 4r(r-1)e frak/hbar
  ThetaSeries sw_form;    // F_xy + (4er(1-r)/hbar) theta^{yx} F_xy F_yx
  bool closed_form_equals_B = false;
  bool series_matches_sw_form = false;  // through order 1
};

/// Throws ParameterError when 1 + t = 0 or frak is undefined.
FieldStrengthExpansion expand_field_strength_nc(const SWContext& ctx);

/// dx A_y - dy A_x - (ie/hbar)[A_x *r A_y].
template <typename S>
Poly<S, 2> field_strength_star(const std::pair<Poly<S, 2>, Poly<S, 2>>& a, const StarContext& ctx) {
  Poly<S, 2> curl = a.second.derivative(0) - a.first.derivative(1);
  const GaussianRational coupling{Rational(0), -ctx.e / ctx.hbar};
  return curl + star_commutator(a.first, a.second, ctx) * S(coupling);
}

/// Series version with theta formal: equals B at every order for the fixed-B field.
ThetaSeries field_strength_series(const SeriesPair& a, const SWContext& ctx);

/// d/dr of expand_gauge_field_nc, per unit epsilon, computed exactly by
/// differentiating the Lagrange interpolant through 2K+2 rational nodes.
SeriesPair delta_gauge_field(const SWContext& ctx);

class GaugeSolveError : public std::runtime_error {
public:
  GaugeSolveError(int order, const std::string& what) : std::runtime_error(what), order_(order) {}
  int order() const { return order_; }

private:
  int order_;
};

struct GaugeFunctionResult {
  ThetaSeries lambda_nc;   // per unit epsilon
  ThetaSeries residual_x;  // defining equation used in the solve
  ThetaSeries residual_y;  // independent cross-check
  std::vector<int> ansatz_degree;
  std::string normalization;
};

/// Solves delta A_j = dj lambda + (ie/hbar)[lambda *r A_j] order by order,
/// using only the x equation. Throws GaugeSolveError naming the order when
/// the linear system has no unique solution up to degree order+6.
GaugeFunctionResult solve_gauge_function(const SWContext& ctx);

struct FiniteTransformReport {
  ThetaSeries unitarity_value;  // (U * U^-1) - 1, epsilon^0 part
  ThetaSeries unitarity_slope;  // epsilon^1 part
  SeriesPair residual_value;    // transformed A - A
  SeriesPair residual_slope;    // transformed A slope - delta A
  SeriesPair abelian_order0;    // theta^0 of the transformed slope
  bool pass = false;
};

/// U = exp*(eps (ie/hbar) lambda) to first order in eps; eps_weight scales
/// the generator (0 gives the identity transformation). Requires e != 0.
FiniteTransformReport verify_finite_gauge_transform(const SWContext& ctx, const Rational& eps_weight = Rational(1));

}  // namespace nclandau
