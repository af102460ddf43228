#include "kernels_impl.hpp"

#include <immintrin.h>

#include <cmath>

namespace nclandau::kernels::avx2 {

namespace {

// Two complex numbers per register: [re0, im0, re1, im1].
inline __m256d load(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }
inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

// a * v for a broadcast complex scalar (ar, ai).
inline __m256d cmul(__m256d ar, __m256d ai, __m256d v) {
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, swap_re_im(v)));
}

inline __m256d conj(__m256d v) { return _mm256_xor_pd(v, _mm256_set_pd(-0.0, 0.0, -0.0, 0.0)); }

inline double hsum_even(__m256d v) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  return t[0] + t[2];
}
inline double hsum_odd(__m256d v) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  return t[1] + t[3];
}

}  // namespace

void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y) {
  const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store(y + i, _mm256_add_pd(load(y + i), cmul(ar, ai, load(x + i))));
  for (; i < n; ++i) y[i] += a * x[i];
}

cplx cdotc(std::size_t n, const cplx* x, const cplx* y) {
  __m256d direct = _mm256_setzero_pd(), crossed = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = load(x + i), vy = load(y + i);
    direct = _mm256_fmadd_pd(vx, vy, direct);
    crossed = _mm256_fmadd_pd(vx, swap_re_im(vy), crossed);
  }
  double re = hsum_even(direct) + hsum_odd(direct);
  double im = hsum_even(crossed) - hsum_odd(crossed);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

cplx cdotu(std::size_t n, const cplx* x, const cplx* y) {
  __m256d direct = _mm256_setzero_pd(), crossed = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = load(x + i), vy = load(y + i);
    direct = _mm256_fmadd_pd(vx, vy, direct);
    crossed = _mm256_fmadd_pd(vx, swap_re_im(vy), crossed);
  }
  double re = hsum_even(direct) - hsum_odd(direct);
  double im = hsum_even(crossed) + hsum_odd(crossed);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

void cher2_row(std::size_t n, cplx a, const cplx* x, cplx b, const cplx* y, cplx* row) {
  const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
  const __m256d br = _mm256_set1_pd(b.real()), bi = _mm256_set1_pd(b.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d acc = _mm256_add_pd(load(row + i), cmul(ar, ai, conj(load(x + i))));
    store(row + i, _mm256_add_pd(acc, cmul(br, bi, conj(load(y + i)))));
  }
  for (; i < n; ++i) row[i] += a * std::conj(x[i]) + b * std::conj(y[i]);
}

void crot(std::size_t n, double c, cplx s, cplx* x, cplx* y) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d sr = _mm256_set1_pd(s.real()), si = _mm256_set1_pd(s.imag());
  const __m256d nsr = _mm256_set1_pd(-s.real()), nsci = _mm256_set1_pd(s.imag());  // -conj(s)
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = load(x + i), vy = load(y + i);
    store(x + i, _mm256_fmadd_pd(vc, vx, cmul(sr, si, vy)));
    store(y + i, _mm256_fmadd_pd(vc, vy, cmul(nsr, nsci, vx)));
  }
  const cplx sc = std::conj(s);
  for (; i < n; ++i) {
    const cplx xi = x[i], yi = y[i];
    x[i] = c * xi + s * yi;
    y[i] = -sc * xi + c * yi;
  }
}

double max_abs_diff(std::size_t n, const double* a, const double* b) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    m = _mm256_max_pd(m, _mm256_andnot_pd(sign, d));
  }
  alignas(32) double t[4];
  _mm256_store_pd(t, m);
  double out = std::fmax(std::fmax(t[0], t[1]), std::fmax(t[2], t[3]));
  for (; i < n; ++i) out = std::fmax(out, std::fabs(a[i] - b[i]));
  return out;
}

}  // namespace nclandau::kernels::avx2
