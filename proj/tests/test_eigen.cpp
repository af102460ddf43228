#include <doctest.h>

#include "gen.hpp"
#include "nclandau/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

using namespace nclandau;

namespace {

OperatorMatrix random_hermitian(testgen::Gen& g, std::size_t n, double density = 1.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  OperatorMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = u(g.engine());
    for (std::size_t j = i + 1; j < n; ++j) {
      if (u(g.engine()) > 2.0 * density - 1.0) continue;
      const cplx v(u(g.engine()), u(g.engine()));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  m.tag_hermitian();
  return m;
}

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("eigen: diagonal and swap matrices") {
  auto d = OperatorMatrix::diagonal({3, 1, 2});
  d.tag_hermitian();
  const auto v = hermitian_eigenvalues(d);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == doctest::Approx(1));
  CHECK(v[1] == doctest::Approx(2));
  CHECK(v[2] == doctest::Approx(3));

  OperatorMatrix s(2);
  s(0, 1) = 1;
  s(1, 0) = 1;
  s.tag_hermitian();
  const auto w = hermitian_eigenvalues(s);
  CHECK(w[0] == doctest::Approx(-1));
  CHECK(w[1] == doctest::Approx(1));
  const auto hv = householder_eigenvalues(s);
  CHECK(hv[0] == doctest::Approx(-1));
  CHECK(hv[1] == doctest::Approx(1));
}

TEST_CASE("eigen: truncated position operator has a spectrum symmetric about 0") {
  const std::size_t n = 40;
  OperatorMatrix x(n);
  for (std::size_t k = 1; k < n; ++k) {
    x(k - 1, k) = std::sqrt(static_cast<double>(k) / 2.0);
    x(k, k - 1) = x(k - 1, k);
  }
  x.tag_hermitian();
  const auto v = householder_eigenvalues(x);
  for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(v[k] + v[n - 1 - k]) < 1e-10);
}

TEST_CASE("eigen: non-Hermitian input is rejected") {
  OperatorMatrix m(2);
  m(0, 1) = 1;
  CHECK_THROWS_AS(hermitian_eigenvalues(m), std::invalid_argument);
  CHECK_THROWS_AS(jacobi_eigensystem(m), std::invalid_argument);
  CHECK_THROWS_AS(m.tag_hermitian(), std::domain_error);
  CHECK_FALSE(m.hermitian());
}

TEST_CASE("eigen: Householder matches Jacobi on random Hermitian matrices") {
  testgen::Gen g(101);
  for (int t = 0; t < 40; ++t) {
    const auto n = static_cast<std::size_t>(g.integer(1, 70));
    const auto m = random_hermitian(g, n);
    const auto es = jacobi_eigensystem(m);
    const auto hv = householder_eigenvalues(m);
    const double scale = std::max(1.0, m.max_abs()) * static_cast<double>(n);
    INFO("seed 101 trial " << t << " n " << n);
    CHECK(max_gap(es.values, hv) <= 1e-10 * scale);
    CHECK(reconstruction_residual(m, es) <= 1e-8 * scale);
    CHECK(std::is_sorted(hv.begin(), hv.end()));
    double sum = 0;
    for (double v : hv) sum += v;
    CHECK(std::abs(sum - m.trace().real()) <= 1e-9 * scale);
  }
}

TEST_CASE("eigen: block splitting preserves the spectrum") {
  testgen::Gen g(202);
  for (int t = 0; t < 20; ++t) {
    const auto n = static_cast<std::size_t>(g.integer(2, 90));
    const auto m = random_hermitian(g, n, 0.04);
    const auto comps = block_components(m);
    std::size_t total = 0;
    for (const auto& c : comps) total += c.size();
    CHECK(total == n);
    INFO("seed 202 trial " << t << " n " << n);
    CHECK(max_gap(hermitian_eigenvalues(m), householder_eigenvalues(m)) <= 1e-10 * static_cast<double>(n));
  }
}

TEST_CASE("eigen: components of a direct sum") {
  OperatorMatrix m(5);
  m(0, 2) = 1;
  m(2, 0) = 1;
  m(1, 4) = cplx(0, 1);
  m(4, 1) = cplx(0, -1);
  m(3, 3) = 7;
  m.tag_hermitian();
  const auto comps = block_components(m);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<std::size_t>{0, 2});
  CHECK(comps[1] == std::vector<std::size_t>{1, 4});
  CHECK(comps[2] == std::vector<std::size_t>{3});
  const auto v = hermitian_eigenvalues(m);
  const std::vector<double> want{-1, -1, 1, 1, 7};
  CHECK(max_gap(v, want) < 1e-14);
}
