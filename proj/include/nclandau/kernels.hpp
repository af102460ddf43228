#pragma once

// Dense complex kernels behind the oscillator-basis eigensolver and matrix
// assembly. Each kernel has a scalar reference implementation and, on x86-64,
// an AVX2/FMA variant selected once at runtime. Complex arrays are
// std::complex<double>, i.e. interleaved (re, im) doubles.

#include <complex>
#include <cstddef>

namespace nclandau::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  const char* name;
  /// y[i] += a * x[i]
  void (*caxpy)(std::size_t n, cplx a, const cplx* x, cplx* y);
  /// sum conj(x[i]) * y[i]
  cplx (*cdotc)(std::size_t n, const cplx* x, const cplx* y);
  /// sum x[i] * y[i]
  cplx (*cdotu)(std::size_t n, const cplx* x, const cplx* y);
  /// row[i] += a * conj(x[i]) + b * conj(y[i])
  void (*cher2_row)(std::size_t n, cplx a, const cplx* x, cplx b, const cplx* y, cplx* row);
  /// (x, y) <- (c x + s y, -conj(s) x + c y)
  void (*crot)(std::size_t n, double c, cplx s, cplx* x, cplx* y);
  /// max |a[i] - b[i]| over n doubles
  double (*max_abs_diff)(std::size_t n, const double* a, const double* b);
};

const KernelTable& scalar_table();
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table();

/// Table used by the library. AVX2 when available unless the environment
/// variable NCLANDAU_FORCE_SCALAR is set to a non-empty value other than "0".
const KernelTable& active();

}  // namespace nclandau::kernels
