#pragma once

#include "nclandau/kernels.hpp"

namespace nclandau::kernels {

namespace scalar {
void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y);
cplx cdotc(std::size_t n, const cplx* x, const cplx* y);
cplx cdotu(std::size_t n, const cplx* x, const cplx* y);
void cher2_row(std::size_t n, cplx a, const cplx* x, cplx b, const cplx* y, cplx* row);
void crot(std::size_t n, double c, cplx s, cplx* x, cplx* y);
double max_abs_diff(std::size_t n, const double* a, const double* b);
}  // namespace scalar

namespace avx2 {
void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y);
cplx cdotc(std::size_t n, const cplx* x, const cplx* y);
cplx cdotu(std::size_t n, const cplx* x, const cplx* y);
void cher2_row(std::size_t n, cplx a, const cplx* x, cplx b, const cplx* y, cplx* row);
void crot(std::size_t n, double c, cplx s, cplx* x, cplx* y);
double max_abs_diff(std::size_t n, const double* a, const double* b);
}  // namespace avx2

}  // namespace nclandau::kernels
