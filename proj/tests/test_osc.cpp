#include <doctest.h>

#include "gen.hpp"
#include "nclandau/osc.hpp"

#include <cmath>

using namespace nclandau;

namespace {

PlaneParams standard(Rational r = Rational(1, 2)) {
  PlaneParams p;
  p.hbar = 1;
  p.theta = 1;
  p.e = 1;
  p.B = 3;
  p.m = 1;
  p.r = r;
  return p;
}

PlaneParams random_valid(testgen::Gen& g) {
  for (;;) {
    PlaneParams p;
    p.hbar = g.positive_rational(4, 3);
    p.theta = g.rational(3, 4);
    p.e = g.nonzero_rational(3, 3);
    p.B = g.rational(4, 3);
    p.m = g.positive_rational(4, 3);
    p.r = g.rational(3, 4);
    if (p.discriminant() > 0) return p;
  }
}

double d(const Rational& q) { return q.convert_to<double>(); }

OperatorMatrix scaled_identity(std::size_t dim, cplx c) { return OperatorMatrix::identity(dim) * c; }

}  // namespace

TEST_CASE("osc: basis validation and state vectors") {
  OscBasis b;
  b.n_per_mode = 3;
  CHECK_THROWS_AS(b.validate(), std::invalid_argument);
  b.n_per_mode = 6;
  b.length_scale = 0;
  CHECK_THROWS_AS(b.validate(), std::invalid_argument);
  b.length_scale = 1;
  const auto s = StateVector::basis_state(b, 2, 3);
  CHECK(s.amplitudes()[2 * 6 + 3] == cplx(1, 0));
  CHECK(std::abs(s.norm() - 1) < 1e-12);
  CHECK(std::abs(StateVector({cplx(3, 0), cplx(0, 4)}).norm() - 1) < 1e-12);
  CHECK_THROWS_AS(StateVector({cplx(0, 0)}), std::invalid_argument);
  CHECK(OscBasis::cyclotron(standard(), 8).length_scale == doctest::Approx(1 / std::sqrt(3.0)));
}

TEST_CASE("osc: ground-state variance of x is l^2/2") {
  OscBasis b;
  b.n_per_mode = 10;
  b.length_scale = 0.7;
  b.hbar = 1.3;
  const auto ops = basis_operators(b);
  const auto x2 = (ops.x * ops.x).to_dense(10);
  const auto p2 = (ops.px * ops.px).to_dense(10);
  const auto g0 = StateVector::basis_state(b, 0, 0);
  CHECK(std::abs(expectation(x2, g0) - cplx(0.49 / 2, 0)) < 1e-14);
  CHECK(std::abs(expectation(p2, g0) - cplx(1.69 / (2 * 0.49), 0)) < 1e-14);
}

TEST_CASE("osc: canonical commutators of the basis matrices") {
  OscBasis b;
  b.n_per_mode = 9;
  b.length_scale = 1.4;
  b.hbar = 0.5;
  const std::size_t n = 9;
  const auto m = basis_matrices(b);
  for (const auto* op : {&m.x, &m.y, &m.px, &m.py}) {
    CHECK(op->hermitian());
    CHECK(op->hermiticity_residual() == 0);
  }
  const auto ops = basis_operators(b);
  const auto one = scaled_identity(n * n, cplx(0, b.hbar));
  const auto edge = interior_indices(b.n_per_mode, b.n_per_mode - 1);
  CHECK(interior_difference(truncated_commutator(ops.x, ops.px, n), one, edge) < 1e-14);
  CHECK(interior_difference(truncated_commutator(ops.y, ops.py, n), one, edge) < 1e-14);
  CHECK(truncated_commutator(ops.x, ops.y, n).max_abs() == 0);
  CHECK(truncated_commutator(ops.x, ops.py, n).max_abs() == 0);
  CHECK(truncated_commutator(ops.px, ops.py, n).max_abs() == 0);
  // The truncation edge is where the canonical relation fails.
  CHECK(std::abs(truncated_commutator(ops.x, ops.px, n)(n * n - 1, n * n - 1) - cplx(0, b.hbar)) > 1);
}

TEST_CASE("osc: minimal coupling at r = 1 is the Landau-gauge form") {
  PlaneParams p = standard(1);
  p.e = 2;
  p.theta = Rational(1, 3);
  const auto b = OscBasis::cyclotron(p, 8);
  const auto mc = minimal_coupling_matrices(p, b);
  const auto m = basis_matrices(b);
  const double th = d(p.theta), eb = d(p.e * p.B);
  CHECK(max_abs_difference(mc.X, m.x) < 1e-14);
  CHECK(max_abs_difference(mc.Y, m.y + m.px * cplx(th, 0)) < 1e-14);
  CHECK(max_abs_difference(mc.Pi_x, m.px) < 1e-14);
  CHECK(max_abs_difference(mc.Pi_y, m.py - m.x * cplx(eb, 0)) < 1e-13);
}

TEST_CASE("osc: interior commutators reproduce the kinematic table") {
  testgen::Gen g(31);
  for (int t = 0; t < 25; ++t) {
    const PlaneParams p = t == 0 ? standard() : random_valid(g);
    const auto b = OscBasis::cyclotron(p, 10);
    const std::size_t n = 10;
    const auto mc = minimal_coupling_operators(p, b);
    const auto dense = minimal_coupling_matrices(p, b);
    for (const auto* op : {&dense.X, &dense.Y, &dense.Pi_x, &dense.Pi_y}) CHECK(op->hermitian());
    const auto kc = kinematic_commutators(p);
    const auto idx = interior_indices(b.n_per_mode, b.n_per_mode - 2);
    const double scale = 1e-8 * std::max(1.0, std::abs(d(p.e * p.hbar * p.B)));
    INFO("seed 31 trial " << t);
    CHECK(interior_difference(truncated_commutator(mc.X, mc.Y, n), scaled_identity(n * n, cplx(0, d(p.theta))), idx) <= 1e-8);
    CHECK(interior_difference(truncated_commutator(mc.Pi_x, mc.Pi_y, n),
                              scaled_identity(n * n, cplx(0, d(p.e * p.hbar * p.B))), idx) <= scale);
    CHECK(interior_difference(truncated_commutator(mc.X, mc.Pi_x, n), scaled_identity(n * n, kc.x_pi_x_closed.to_complex()), idx) <=
          1e-8 * std::max(1.0, std::abs(kc.x_pi_x_closed.to_complex())));
    CHECK(interior_difference(truncated_commutator(mc.Y, mc.Pi_y, n), scaled_identity(n * n, kc.y_pi_y_closed.to_complex()), idx) <=
          1e-8 * std::max(1.0, std::abs(kc.y_pi_y_closed.to_complex())));
    CHECK(truncated_commutator(mc.X, mc.Pi_y, n).max_abs() <= 1e-12);
    CHECK(truncated_commutator(mc.Y, mc.Pi_x, n).max_abs() <= 1e-12);
  }
}

TEST_CASE("osc: star-action dictionary on matrices") {
  testgen::Gen g(47);
  for (int t = 0; t < 20; ++t) {
    const PlaneParams p = random_valid(g);
    const auto b = OscBasis::cyclotron(p, 7);
    const StarContext ctx{p.r, p.theta, p.hbar, p.e};
    const auto mc = minimal_coupling_matrices(p, b);
    INFO("seed 47 trial " << t);
    CHECK(max_abs_difference(operator_from_diff(star_action_operator(var_x<GaussianRational>(), ctx), b).to_dense(7), mc.X) < 1e-12);
    CHECK(max_abs_difference(operator_from_diff(star_action_operator(var_y<GaussianRational>(), ctx), b).to_dense(7), mc.Y) < 1e-12);
  }
  OscBasis b;
  b.n_per_mode = 5;
  CHECK(max_abs_difference(operator_from_diff(DiffOperator<GaussianRational>::identity(), b).to_dense(5), OperatorMatrix::identity(25)) == 0);
  // d/dx maps to (i/hbar) p_x
  const auto dx = operator_from_diff(DiffOperator<GaussianRational>::derivative(1, 0), b).to_dense(5);
  CHECK(max_abs_difference(dx, basis_matrices(b).px * cplx(0, 1)) < 1e-15);
}

TEST_CASE("osc: the two Hamiltonian routes agree") {
  const PlaneParams p = standard();
  const auto b = OscBasis::cyclotron(p, 12);
  const auto hs = deformed_hamiltonian(p, b, HamiltonianRoute::star_action);
  const auto hr = deformed_hamiltonian(p, b, HamiltonianRoute::reduced);
  CHECK(hs.hermitian());
  CHECK(hr.hermitian());
  CHECK(max_abs_difference(hs, hr) <= 1e-10);
  CHECK(std::abs(hs.trace() - hr.trace()) <= 1e-9);

  testgen::Gen g(53);
  for (int t = 0; t < 20; ++t) {
    const PlaneParams q = random_valid(g);
    const auto bq = OscBasis::cyclotron(q, static_cast<int>(g.integer(4, 9)));
    const auto a = deformed_hamiltonian(q, bq, HamiltonianRoute::star_action);
    const auto c = deformed_hamiltonian(q, bq, HamiltonianRoute::reduced);
    INFO("seed 53 trial " << t);
    CHECK(max_abs_difference(a, c) <= 1e-10 * std::max(1.0, a.max_abs()));
    CHECK(std::abs(a.trace() - c.trace()) <= 1e-9 * std::max(1.0, std::abs(a.trace())));
  }
}

TEST_CASE("osc: commutative limit is the Landau-gauge Hamiltonian") {
  PlaneParams p = standard(1);
  p.theta = 0;
  p.m = 2;
  const auto b = OscBasis::cyclotron(p, 8);
  const auto ops = basis_operators(b);
  const auto kin = ops.py - ops.x * cplx(d(p.e * p.B), 0);
  const auto want = ((ops.px * ops.px + kin * kin) * cplx(0.25, 0)).to_dense(8);
  for (auto route : {HamiltonianRoute::star_action, HamiltonianRoute::reduced})
    CHECK(max_abs_difference(deformed_hamiltonian(p, b, route), want) < 1e-12);
}

TEST_CASE("osc: Landau spectrum at the standard point") {
  const PlaneParams p = standard();
  const auto rep = landau_spectrum_check(p, OscBasis::cyclotron(p, 40), 3);
  CHECK(rep.e0_analytic == doctest::Approx(1.5));
  CHECK(rep.e0_estimate >= 1.5 - 1e-10);
  CHECK(rep.e0_estimate <= 1.5 * 1.02);
  REQUIRE(rep.ladder_defined);
  CHECK(rep.ladder_residual <= 1e-8);
  CHECK(rep.ladder_commutator <= 1e-8);
  CHECK(rep.route_difference <= 1e-10);
  CHECK(rep.hermiticity_residual <= 1e-12);
  CHECK(rep.lowest.size() == 3);
}

TEST_CASE("osc: ground energy is independent of r and decreases with N") {
  std::vector<double> e0;
  for (auto r : {Rational(0), Rational(1, 2), Rational(7, 10), Rational(1)}) {
    const PlaneParams p = standard(r);
    const auto rep = landau_spectrum_check(p, OscBasis::cyclotron(p, 20), 1);
    CHECK(std::abs(rep.rel_err) <= 0.02);
    e0.push_back(rep.e0_estimate);
  }
  for (double a : e0)
    for (double c : e0) CHECK(std::abs(a - c) <= 2 * 0.02 * 1.5);

  const PlaneParams p = standard(Rational(7, 10));
  double prev = 1e300;
  for (int n = 4; n <= 16; ++n) {
    const double v = landau_spectrum_check(p, OscBasis::cyclotron(p, n), 1).e0_estimate;
    INFO("N = " << n);
    CHECK(v <= prev + 1e-12);
    CHECK(v >= 1.5 - 1e-10);
    prev = v;
  }
}

TEST_CASE("osc: naive prescription scale and spectrum") {
  const auto half = naive_spectrum_check(standard(), OscBasis::cyclotron(standard(), 16));
  CHECK(half.scale_analytic == doctest::Approx(1.75));
  CHECK(std::abs(half.scale_estimate - 1.75) < 1e-10);
  CHECK(half.scale_spread < 1e-10);
  const auto one = naive_spectrum_check(standard(1), OscBasis::cyclotron(standard(1), 16));
  CHECK(std::abs(one.scale_estimate - 1) < 1e-10);
  CHECK(std::abs(one.e0_estimate - landau_spectrum_check(standard(1), OscBasis::cyclotron(standard(1), 16), 1).e0_estimate) < 1e-10);
  CHECK(std::abs(half.e0_estimate / one.e0_estimate - 1.75) <= 0.02 * 1.75);
  CHECK(std::abs(half.spacing_estimate / one.spacing_estimate - 1.75) < 1e-10);

  PlaneParams flat = standard();
  flat.theta = 0;
  const auto f0 = naive_spectrum_check(flat, OscBasis::cyclotron(flat, 12));
  const auto f1 = naive_spectrum_check(flat.with_r(1), OscBasis::cyclotron(flat, 12));
  CHECK(std::abs(f0.scale_estimate - 1) < 1e-12);
  CHECK(std::abs(f0.spacing_estimate - f1.spacing_estimate) < 1e-12);
}

TEST_CASE("osc: CSV rows") {
  CHECK(spectrum_csv_header() == "r,theta,N,E0_estimate,E0_analytic,rel_err,ladder_residual");
  const PlaneParams p = standard();
  const auto b = OscBasis::cyclotron(p, 6);
  const auto row = spectrum_csv_row(p, b, landau_spectrum_check(p, b, 1));
  CHECK(row.rfind("1/2,1,6,", 0) == 0);
}
