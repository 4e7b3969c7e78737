#pragma once

#include <cstddef>

namespace lieorb::kernels::detail {

void gemm_scalar(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b, double* c);
void commutator_scalar(std::size_t n, const double* a, const double* b, double* c);
void gemv_scalar(std::size_t rows, std::size_t cols, const double* a, const double* x, double* y);
double dot_scalar(std::size_t len, const double* x, const double* y);
void axpy_scalar(std::size_t len, double alpha, const double* x, double* y);

#if defined(LIEORB_HAVE_AVX2)
void gemm_avx2(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b, double* c);
void commutator_avx2(std::size_t n, const double* a, const double* b, double* c);
void gemv_avx2(std::size_t rows, std::size_t cols, const double* a, const double* x, double* y);
double dot_avx2(std::size_t len, const double* x, const double* y);
void axpy_avx2(std::size_t len, double alpha, const double* x, double* y);
#endif

#if defined(LIEORB_HAVE_NEON)
void gemm_neon(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b, double* c);
void commutator_neon(std::size_t n, const double* a, const double* b, double* c);
void gemv_neon(std::size_t rows, std::size_t cols, const double* a, const double* x, double* y);
double dot_neon(std::size_t len, const double* x, const double* y);
void axpy_neon(std::size_t len, double alpha, const double* x, double* y);
#endif

}  // namespace lieorb::kernels::detail
