#include <doctest.h>

#include "gen.hpp"
#include "nclandau/swmap.hpp"

using namespace nclandau;

namespace {

const ConfigPoly X = var_x<GaussianRational>();
const ConfigPoly Y = var_y<GaussianRational>();

ConfigPoly c(const Rational& v) { return ConfigPoly::constant(GaussianRational(v)); }
GaussianRational g_(const Rational& v) { return GaussianRational(v); }

SWContext standard(Rational r = Rational(1, 2), int order = 2) {
  SWContext ctx;
  ctx.r = r;
  ctx.e = 1;
  ctx.B = 3;
  ctx.hbar = 1;
  ctx.order = order;
  ctx.theta_value = 1;
  return ctx;
}

SWContext random_ctx(testgen::Gen& g, int order) {
  SWContext ctx;
  ctx.r = g.rational(5, 7);
  ctx.e = g.nonzero_rational(4, 3);
  ctx.B = g.nonzero_rational(5, 3);
  ctx.hbar = g.positive_rational(4, 3);
  ctx.order = order;
  ctx.theta_value = g.rational(3, 4);
  if (ctx.hbar - 4 * ctx.r * (ctx.r - 1) * ctx.e * ctx.theta_value * ctx.B == 0) ctx.theta_value = 0;
  return ctx;
}

Rational catalan(int k) {
  Rational c(1);
  for (int j = 0; j < k; ++j) c = c * 2 * (2 * j + 1) / (j + 2);
  return c;
}

}  // namespace

TEST_CASE("gauge field expansion against the Catalan closed form") {
  testgen::Gen g(61);
  for (int t = 0; t < 30; ++t) {
    SWContext ctx = random_ctx(g, 5);
    auto [ax, ay] = expand_gauge_field_nc(ctx);
    const Rational s = ctx.r * (ctx.r - 1) * ctx.e * ctx.B / ctx.hbar;
    Rational sk(1);
    for (int k = 0; k <= ctx.order; ++k) {
      const Rational bk = ctx.B * catalan(k) * sk;
      CHECK(ax.extract(k) == Y * g_((ctx.r - 1) * bk));
      CHECK(ay.extract(k) == X * g_(ctx.r * bk));
      sk *= s;
    }
  }
}

TEST_CASE("gauge field low orders") {
  testgen::Gen g(62);
  for (int t = 0; t < 20; ++t) {
    SWContext ctx = random_ctx(g, 2);
    auto [ax, ay] = expand_gauge_field_nc(ctx);
    const Rational& r = ctx.r;
    const Rational q = ctx.e * ctx.B * ctx.B / ctx.hbar;
    CHECK(ax.extract(0) == Y * g_((r - 1) * ctx.B));
    CHECK(ay.extract(0) == X * g_(r * ctx.B));
    CHECK(ax.extract(1) == Y * g_(r * (r - 1) * (r - 1) * q));
    CHECK(ay.extract(1) == X * g_(r * r * (r - 1) * q));
  }
  SUBCASE("Landau gauge has no corrections") {
    auto [ax, ay] = expand_gauge_field_nc(standard(Rational(1), 4));
    CHECK(ax.is_zero());
    CHECK(ay == ThetaSeries(4, X * g_(3)));
  }
  SUBCASE("order below two is rejected") {
    CHECK_THROWS_AS(expand_gauge_field_nc(standard(Rational(1, 2), 1)), std::invalid_argument);
  }
}

TEST_CASE("first-order Seiberg-Witten maps") {
  SUBCASE("symmetric gauge point") {
    SWMapReport rep = sw_map_gauge_field(standard());
    CHECK(rep.pass);
    CHECK(rep.routes.size() == 5);
  }
  SUBCASE("random rational r") {
    testgen::Gen g(63);
    for (int t = 0; t < 50; ++t) {
      SWContext ctx = random_ctx(g, 2);
      SWMapReport rep = sw_map_gauge_field(ctx);
      CHECK(rep.pass);
      for (const auto& route : rep.routes) CHECK_MESSAGE(route.agree, route.name);
    }
  }
  SUBCASE("theta order zero is the commutative field") {
    SWContext ctx = standard(Rational(2, 9));
    const Rational frak = commutative_field_value(ctx);
    auto [ax, ay] = gauge_field_fixed_frak(ctx, frak);
    CHECK(ax.extract(0) == Y * g_((ctx.r - 1) * frak));
    CHECK(ay.extract(0) == X * g_(ctx.r * frak));
  }
  SUBCASE("bracket contents reproduce the fixed-frak coefficients") {
    testgen::Gen g(64);
    for (int t = 0; t < 20; ++t) {
      SWContext ctx = random_ctx(g, 2);
      const Rational frak = g.nonzero_rational();
      const Rational& r = ctx.r;
      ThetaSeries f(2, c(frak));
      SeriesPair comm{ThetaSeries(2, Y * g_((r - 1) * frak)), ThetaSeries(2, X * g_(r * frak))};
      SeriesPair br = sw_bracket_form(comm, f, ctx);
      const Rational q = ctx.e * frak * frak / ctx.hbar;
      CHECK(br.first.extract(1) == Y * g_(-3 * r * (r - 1) * (r - 1) * q));
      CHECK(br.second.extract(1) == X * g_(3 * r * r * (1 - r) * q));
      CHECK(gauge_field_fixed_frak(ctx, frak).first.extract(1) == br.first.extract(1));
    }
  }
}

TEST_CASE("field strength expansion") {
  SUBCASE("standard point") {
    FieldStrengthExpansion fs = expand_field_strength_nc(standard());
    CHECK(fs.frak == Rational(3, 4));
    CHECK(fs.t == Rational(-3, 4));
    CHECK(fs.closed_form == 3);
    CHECK(fs.closed_form_equals_B);
    CHECK(fs.series_matches_sw_form);
    // Symmetric gauge order one: (e/hbar) theta^{yx} F_xy F_yx.
    CHECK(fs.series.extract(1) == c(Rational(9, 16)));
  }
  SUBCASE("random exact points") {
    testgen::Gen g(65);
    for (int t = 0; t < 50; ++t) {
      SWContext ctx = random_ctx(g, 3);
      FieldStrengthExpansion fs = expand_field_strength_nc(ctx);
      CHECK(fs.closed_form == ctx.B);
      CHECK(fs.series_matches_sw_form);
      const Rational& r = ctx.r;
      CHECK(fs.series.extract(1) == c(4 * r * (1 - r) * ctx.e * fs.frak * fs.frak / ctx.hbar));
    }
  }
  SUBCASE("undefined frak is rejected") {
    SWContext ctx = standard();
    ctx.B = -1;  // hbar - 4r(r-1)e theta B = 1 - 1
    CHECK_THROWS_AS(expand_field_strength_nc(ctx), ParameterError);
  }
}

TEST_CASE("star field strength") {
  SUBCASE("symmetric gauge example is exact") {
    std::pair<ConfigPoly, ConfigPoly> a{-Y, X};
    StarContext ctx{Rational(1, 2), Rational(1), Rational(1), Rational(1)};
    CHECK(field_strength_star(a, ctx) == c(3));
  }
  SUBCASE("commutative limit is the curl") {
    Rational r(3, 11), B(5, 2);
    std::pair<ConfigPoly, ConfigPoly> a{Y * g_((r - 1) * B), X * g_(r * B)};
    CHECK(field_strength_star(a, StarContext{r, Rational(0)}) == c(B));
  }
  SUBCASE("naive fields pick up the commutator scale") {
    testgen::Gen g(66);
    for (int t = 0; t < 30; ++t) {
      PlaneParams p;
      p.hbar = g.positive_rational();
      p.theta = g.rational();
      p.e = g.rational();
      p.B = g.rational();
      p.r = g.rational(3, 4);
      if (p.discriminant() <= 0) continue;
      NaivePrescription n = naive_prescription(p);
      StarContext ctx{p.r, p.theta, p.hbar, p.e};
      CHECK(field_strength_star(n.fields, ctx) == c(p.B * n.commutator_scale));
    }
  }
  SUBCASE("noncommutative field gives B in high precision") {
    testgen::Gen g(67);
    for (int t = 0; t < 30; ++t) {
      PlaneParams p;
      p.hbar = g.positive_rational();
      p.theta = g.rational();
      p.e = g.rational();
      p.B = g.nonzero_rational();
      p.r = g.rational(3, 4);
      if (p.discriminant() <= 0) continue;
      StarContext ctx{p.r, p.theta, p.hbar, p.e};
      HPConfigPoly f = field_strength_star(gauge_field_nc(p), ctx);
      HPConfigPoly diff = f - HPConfigPoly::constant(HPComplex(p.B));
      CHECK(max_abs_coefficient(diff) <= HPReal(1e-18) * abs(to_hp(p.B)));
    }
  }
  SUBCASE("series form equals B at every order") {
    testgen::Gen g(68);
    for (int t = 0; t < 20; ++t) {
      SWContext ctx = random_ctx(g, 4);
      CHECK(field_strength_series(expand_gauge_field_nc(ctx), ctx) == ThetaSeries(4, c(ctx.B)));
    }
  }
}

TEST_CASE("infinitesimal variation of the gauge field") {
  SUBCASE("stated polynomials in r") {
    testgen::Gen g(69);
    for (int t = 0; t < 30; ++t) {
      SWContext ctx = random_ctx(g, 2);
      auto [dx, dy] = delta_gauge_field(ctx);
      const Rational& r = ctx.r;
      const Rational q = ctx.e * ctx.B * ctx.B / ctx.hbar;
      CHECK(dx.extract(0) == Y * g_(ctx.B));
      CHECK(dy.extract(0) == X * g_(ctx.B));
      CHECK(dx.extract(1) == Y * g_((3 * r * r - 4 * r + 1) * q));
      CHECK(dy.extract(1) == X * g_((3 * r * r - 2 * r) * q));
    }
  }
  SUBCASE("analytic r-derivative at every order") {
    testgen::Gen g(70);
    for (int t = 0; t < 15; ++t) {
      SWContext ctx = random_ctx(g, 5);
      auto [dx, dy] = delta_gauge_field(ctx);
      const Rational& r = ctx.r;
      const Rational k0 = ctx.e * ctx.B / ctx.hbar;
      const Rational s = r * (r - 1) * k0, ds = (2 * r - 1) * k0;
      for (int k = 0; k <= ctx.order; ++k) {
        Rational sk(1), sk1(0);
        for (int j = 0; j < k; ++j) {
          sk1 = sk;
          sk *= s;
        }
        const Rational dsk = k * sk1 * ds;
        const Rational cb = ctx.B * catalan(k);
        CHECK(dx.extract(k) == Y * g_(cb * (sk + (r - 1) * dsk)));
        CHECK(dy.extract(k) == X * g_(cb * (sk + r * dsk)));
      }
    }
  }
}

TEST_CASE("gauge function solve") {
  SUBCASE("stated first-order solution") {
    testgen::Gen g(71);
    for (int t = 0; t < 25; ++t) {
      SWContext ctx = random_ctx(g, 3);
      GaugeFunctionResult res = solve_gauge_function(ctx);
      const Rational& r = ctx.r;
      CHECK(res.lambda_nc.extract(0) == X * Y * g_(ctx.B));
      CHECK(res.lambda_nc.extract(1) == X * Y * g_(3 * ctx.e * r * (r - 1) * ctx.B * ctx.B / ctx.hbar));
      CHECK(res.residual_x.is_zero());
      CHECK(res.residual_y.is_zero());
      for (int d : res.ansatz_degree) CHECK(d >= 2);
    }
  }
  SUBCASE("standard point") {
    GaugeFunctionResult res = solve_gauge_function(standard());
    CHECK(res.lambda_nc.extract(0).to_string() == "3*x*y");
    CHECK(res.lambda_nc.extract(1).to_string() == "-27/4*x*y");
    CHECK(res.residual_y.is_zero());
  }
}

TEST_CASE("finite gauge transformation") {
  SUBCASE("standard point") {
    FiniteTransformReport rep = verify_finite_gauge_transform(standard());
    CHECK(rep.pass);
    CHECK(rep.residual_slope.first.is_zero());
    CHECK(rep.residual_slope.second.is_zero());
  }
  SUBCASE("zero epsilon is the identity") {
    FiniteTransformReport rep = verify_finite_gauge_transform(standard(Rational(1, 3)), Rational(0));
    CHECK(rep.pass);
    CHECK(rep.abelian_order0.first.is_zero());
  }
  SUBCASE("theta order zero is the abelian transformation") {
    SWContext ctx = standard(Rational(-2, 5), 3);
    FiniteTransformReport rep = verify_finite_gauge_transform(ctx);
    CHECK(rep.abelian_order0.first.extract(0) == Y * g_(ctx.B));
    CHECK(rep.abelian_order0.second.extract(0) == X * g_(ctx.B));
  }
  SUBCASE("random contexts") {
    testgen::Gen g(72);
    for (int t = 0; t < 10; ++t) CHECK(verify_finite_gauge_transform(random_ctx(g, 3)).pass);
  }
  SUBCASE("zero coupling is rejected") {
    SWContext ctx = standard();
    ctx.e = 0;
    CHECK_THROWS_AS(verify_finite_gauge_transform(ctx), std::invalid_argument);
  }
}
