#include <doctest.h>

#include "gen.hpp"
#include "nclandau/star.hpp"

using namespace nclandau;

namespace {

const ConfigPoly X = var_x<GaussianRational>();
const ConfigPoly Y = var_y<GaussianRational>();
const GaussianRational I = GaussianRational::i();

ConfigPoly c(const GaussianRational& v) { return ConfigPoly::constant(v); }

Rational binom(unsigned n, unsigned k) {
  return detail::factorial(n) / (detail::factorial(k) * detail::factorial(n - k));
}

// Textbook Moyal product f exp((i theta/2)(<-dx ->dy - <-dy ->dx)) g, coded
// from the binomial expansion of the bidifferential power.
ConfigPoly moyal(const ConfigPoly& f, const ConfigPoly& g, const Rational& theta) {
  ConfigPoly out;
  const unsigned n_max = f.degree() + g.degree();
  GaussianRational pref(1);
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n > 0) pref = pref * GaussianRational(Rational(0), theta / 2) / GaussianRational(Rational(n));
    for (unsigned k = 0; k <= n; ++k) {
      ConfigPoly lhs = f.derivative(0, n - k).derivative(1, k);
      ConfigPoly rhs = g.derivative(0, k).derivative(1, n - k);
      Rational sign = (k % 2) ? Rational(-1) : Rational(1);
      out += lhs * rhs * (pref * GaussianRational(binom(n, k) * sign));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("star product of x and y in the symmetric gauge") {
  StarContext ctx{Rational(1, 2), Rational(1)};
  ConfigPoly p = star_product(X, Y, ctx);
  CHECK(p == X * Y + c(GaussianRational(Rational(0), Rational(1, 2))));
  CHECK(p.to_string() == "x*y + 1/2*i");
}

TEST_CASE("theta = 0 reduces to the pointwise product") {
  testgen::Gen g(11);
  for (int t = 0; t < 50; ++t) {
    ConfigPoly f = g.config_poly(4), h = g.config_poly(4);
    StarContext ctx{g.rational(), Rational(0)};
    CHECK(star_product(f, h, ctx) == f * h);
  }
}

TEST_CASE("commutator table") {
  testgen::Gen g(12);
  for (int t = 0; t < 100; ++t) {
    StarContext ctx{g.rational(), g.rational()};
    CHECK(star_commutator(X, Y, ctx) == c(I * GaussianRational(ctx.theta)));
    CHECK(star_commutator(Y, X, ctx) == c(-I * GaussianRational(ctx.theta)));
    CHECK(star_commutator(X, X, ctx).is_zero());
    CHECK(star_commutator(Y, Y, ctx).is_zero());
    ConfigPoly f = g.config_poly(4);
    CHECK(star_commutator(f, f, ctx).is_zero());
  }
}

TEST_CASE("commutator of x with a field linear in y") {
  testgen::Gen g(13);
  for (int t = 0; t < 30; ++t) {
    StarContext ctx{g.rational(), g.rational()};
    GaussianRational a = g.gaussian();
    ConfigPoly ax = Y * a;
    CHECK(star_commutator(X, ax, ctx) == c(I * GaussianRational(ctx.theta) * a));
  }
}

TEST_CASE("associativity on random triples") {
  testgen::Gen g(2024);
  for (int t = 0; t < 200; ++t) {
    StarContext ctx{g.rational(), g.rational()};
    ConfigPoly a = g.config_poly(5), b = g.config_poly(5), d = g.config_poly(5);
    CHECK(star_product(star_product(a, b, ctx), d, ctx) == star_product(a, star_product(b, d, ctx), ctx));
  }
}

TEST_CASE("Moyal specialization matches an independent product") {
  testgen::Gen g(77);
  for (int t = 0; t < 100; ++t) {
    Rational theta = g.rational();
    ConfigPoly a = g.config_poly(5), b = g.config_poly(5);
    CHECK(star_product(a, b, StarContext{Rational(1, 2), theta}) == moyal(a, b, theta));
  }
}

TEST_CASE("equivalence map") {
  SUBCASE("single term on xy") {
    Rational d(3, 7), theta(5, 2);
    ConfigPoly t = equivalence_map(X * Y, d, Rational(0), theta);
    CHECK(t == X * Y + c(I * GaussianRational(d * theta)));
  }
  SUBCASE("equal parameters leave F unchanged") {
    testgen::Gen g(5);
    ConfigPoly f = g.config_poly(6);
    CHECK(equivalence_map(f, Rational(2, 3), Rational(2, 3), Rational(7)) == f);
  }
  SUBCASE("intertwines star products") {
    testgen::Gen g(31);
    for (int t = 0; t < 200; ++t) {
      Rational r1 = g.rational(), r2 = g.rational(), theta = g.rational();
      ConfigPoly a = g.config_poly(5), b = g.config_poly(5);
      ConfigPoly lhs = equivalence_map(star_product(a, b, StarContext{r1, theta}), r1, r2, theta);
      ConfigPoly rhs =
          star_product(equivalence_map(a, r1, r2, theta), equivalence_map(b, r1, r2, theta), StarContext{r2, theta});
      CHECK(lhs == rhs);
    }
  }
  SUBCASE("inverse swaps the parameters") {
    testgen::Gen g(32);
    for (int t = 0; t < 50; ++t) {
      Rational r1 = g.rational(), r2 = g.rational(), theta = g.rational();
      ConfigPoly f = g.config_poly(8, 8);
      CHECK(equivalence_map(equivalence_map(f, r1, r2, theta), r2, r1, theta) == f);
    }
  }
}

TEST_CASE("star action dictionary") {
  Rational r(3, 5), theta(2);
  StarContext ctx{r, theta};
  SUBCASE("x acts as X^r") {
    auto d = star_action_operator(X, ctx);
    DiffOperator<GaussianRational> expect = DiffOperator<GaussianRational>::multiplication(X);
    expect.add_term(c(GaussianRational(Rational(0), -(r - 1) * theta)), 0, 1);
    CHECK(d == expect);
  }
  SUBCASE("y acts as Y^r") {
    auto d = star_action_operator(Y, ctx);
    DiffOperator<GaussianRational> expect = DiffOperator<GaussianRational>::multiplication(Y);
    expect.add_term(c(GaussianRational(Rational(0), -r * theta)), 1, 0);
    CHECK(d == expect);
  }
  SUBCASE("constants act by scaling") {
    CHECK(star_action_operator(c(1), ctx) == DiffOperator<GaussianRational>::identity());
  }
  SUBCASE("applying the operator equals the star product") {
    testgen::Gen g(41);
    for (int t = 0; t < 100; ++t) {
      StarContext k{g.rational(), g.rational()};
      ConfigPoly f = g.config_poly(5), psi = g.config_poly(5);
      CHECK(star_action_operator(f, k).apply(psi) == star_product(f, psi, k));
    }
  }
  SUBCASE("composition of actions is the action of the product") {
    testgen::Gen g(42);
    for (int t = 0; t < 40; ++t) {
      StarContext k{g.rational(), g.rational()};
      ConfigPoly f = g.config_poly(3), h = g.config_poly(3);
      CHECK(compose(star_action_operator(f, k), star_action_operator(h, k)) ==
            star_action_operator(star_product(f, h, k), k));
    }
  }
}

TEST_CASE("phase-space action") {
  StarContext ctx{Rational(1, 3), Rational(2), Rational(3, 2)};
  PhasePoly px = PhasePoly::variable(2);
  auto d = phase_action_operator(px, ctx);
  CHECK(d == DiffOperator<GaussianRational>::derivative(1, 0, GaussianRational(Rational(0), Rational(-3, 2))));
  // [x, px] acts as i hbar.
  PhasePoly x = PhasePoly::variable(0);
  auto comm = compose(phase_action_operator(x, ctx), d) - compose(d, phase_action_operator(x, ctx));
  CHECK(comm == DiffOperator<GaussianRational>::multiplication(c(GaussianRational(Rational(0), Rational(3, 2)))));
}

TEST_CASE("truncated star exponential") {
  StarContext ctx{Rational(1, 4), Rational(3)};
  CHECK(star_exp_truncated(ConfigPoly(), ctx, 5) == c(1));
  testgen::Gen g(9);
  ConfigPoly f = g.config_poly(3);
  CHECK(star_exp_truncated(f, ctx, 1) == c(1) + f);
  ConfigPoly bxy = X * Y * GaussianRational(Rational(3));
  ConfigPoly two = star_exp_truncated(bxy, ctx, 2) - star_exp_truncated(bxy, ctx, 1);
  CHECK(two == star_product(bxy, bxy, ctx) * GaussianRational(Rational(1, 2)));
}
