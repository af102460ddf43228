#include <doctest.h>

#include "gen.hpp"
#include "nclandau/kernels.hpp"

#include <cmath>
#include <vector>

using namespace nclandau;
using kernels::cplx;

namespace {

std::vector<cplx> random_vec(testgen::Gen& g, std::size_t n) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<cplx> v(n);
  for (auto& z : v) z = cplx(u(g.engine()), u(g.engine()));
  return v;
}

double diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("kernels: scalar reference against direct loops") {
  const auto& s = kernels::scalar_table();
  testgen::Gen g(5);
  const std::size_t n = 9;
  auto x = random_vec(g, n), y = random_vec(g, n);
  const cplx a(0.5, -1.25), b(-0.75, 0.3);
  cplx dc = 0, du = 0;
  for (std::size_t i = 0; i < n; ++i) {
    dc += std::conj(x[i]) * y[i];
    du += x[i] * y[i];
  }
  CHECK(std::abs(s.cdotc(n, x.data(), y.data()) - dc) < 1e-12);
  CHECK(std::abs(s.cdotu(n, x.data(), y.data()) - du) < 1e-12);

  auto row = random_vec(g, n);
  auto want = row;
  for (std::size_t i = 0; i < n; ++i) want[i] += a * std::conj(x[i]) + b * std::conj(y[i]);
  s.cher2_row(n, a, x.data(), b, y.data(), row.data());
  CHECK(diff(row, want) < 1e-12);

  auto xr = x, yr = y;
  const double c = std::cos(0.3);
  const cplx sn = std::polar(std::sin(0.3), 0.7);
  s.crot(n, c, sn, xr.data(), yr.data());
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(std::abs(xr[i] - (c * x[i] + sn * y[i])) < 1e-12);
    CHECK(std::abs(yr[i] - (-std::conj(sn) * x[i] + c * y[i])) < 1e-12);
  }
}

TEST_CASE("kernels: AVX2 variants match the scalar reference") {
  const auto* v = kernels::avx2_table();
  if (v == nullptr) {
    MESSAGE("AVX2 kernels unavailable on this machine");
    return;
  }
  const auto& s = kernels::scalar_table();
  testgen::Gen g(77);
  for (int t = 0; t < 300; ++t) {
    const auto n = static_cast<std::size_t>(t < 20 ? t : g.integer(0, 257));
    INFO("seed 77 trial " << t << " n " << n);
    const auto x = random_vec(g, n), y = random_vec(g, n);
    const auto ab = random_vec(g, 2);
    const double tol = 1e-12 * static_cast<double>(n + 1);

    auto y1 = y, y2 = y;
    s.caxpy(n, ab[0], x.data(), y1.data());
    v->caxpy(n, ab[0], x.data(), y2.data());
    CHECK(diff(y1, y2) <= tol);

    CHECK(std::abs(s.cdotc(n, x.data(), y.data()) - v->cdotc(n, x.data(), y.data())) <= tol);
    CHECK(std::abs(s.cdotu(n, x.data(), y.data()) - v->cdotu(n, x.data(), y.data())) <= tol);

    auto r1 = y, r2 = y;
    s.cher2_row(n, ab[0], x.data(), ab[1], y.data(), r1.data());
    v->cher2_row(n, ab[0], x.data(), ab[1], y.data(), r2.data());
    CHECK(diff(r1, r2) <= tol);

    const double c = std::cos(0.1 * t);
    const cplx sn = std::polar(std::sin(0.1 * t), 0.37 * t);
    auto xa = x, ya = y, xb = x, yb = y;
    s.crot(n, c, sn, xa.data(), ya.data());
    v->crot(n, c, sn, xb.data(), yb.data());
    CHECK(diff(xa, xb) <= tol);
    CHECK(diff(ya, yb) <= tol);

    const auto* xd = reinterpret_cast<const double*>(x.data());
    const auto* yd = reinterpret_cast<const double*>(y.data());
    CHECK(s.max_abs_diff(2 * n, xd, yd) == v->max_abs_diff(2 * n, xd, yd));
    if (n > 0) CHECK(s.max_abs_diff(2 * n - 1, xd, yd) == v->max_abs_diff(2 * n - 1, xd, yd));
  }
}

TEST_CASE("kernels: active table is one of the variants") {
  const auto& a = kernels::active();
  const auto* v = kernels::avx2_table();
  CHECK((&a == &kernels::scalar_table() || &a == v));
}
