// Built with -mavx2 -mfma. Must not include Eigen or any header with inline
// code shared with the rest of the library.
#include <immintrin.h>

#include "kernels_impl.hpp"

namespace lieorb::kernels::detail {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

// c_row[0..n) (+)= sum_p a_row[p] * b[p, 0..n)
inline void row_times_matrix(std::size_t k, std::size_t n, const double* a_row, const double* b, double* c_row,
                             double sign, bool accumulate) {
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d acc = accumulate ? _mm256_loadu_pd(c_row + j) : _mm256_setzero_pd();
    for (std::size_t p = 0; p < k; ++p) {
      const __m256d av = _mm256_set1_pd(sign * a_row[p]);
      acc = _mm256_fmadd_pd(av, _mm256_loadu_pd(b + p * n + j), acc);
    }
    _mm256_storeu_pd(c_row + j, acc);
  }
  for (; j < n; ++j) {
    double s = accumulate ? c_row[j] : 0.0;
    for (std::size_t p = 0; p < k; ++p) s += sign * a_row[p] * b[p * n + j];
    c_row[j] = s;
  }
}

}  // namespace

void gemm_avx2(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b, double* c) {
  for (std::size_t i = 0; i < m; ++i) row_times_matrix(k, n, a + i * k, b, c + i * n, 1.0, false);
}

void commutator_avx2(std::size_t n, const double* a, const double* b, double* c) {
  for (std::size_t i = 0; i < n; ++i) {
    row_times_matrix(n, n, a + i * n, b, c + i * n, 1.0, false);
    row_times_matrix(n, n, b + i * n, a, c + i * n, -1.0, true);
  }
}

double dot_avx2(std::size_t len, const double* x, const double* y) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= len; i += 4) acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < len; ++i) s += x[i] * y[i];
  return s;
}

void gemv_avx2(std::size_t rows, std::size_t cols, const double* a, const double* x, double* y) {
  for (std::size_t i = 0; i < rows; ++i) y[i] = dot_avx2(cols, a + i * cols, x);
}

void axpy_avx2(std::size_t len, double alpha, const double* x, double* y) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < len; ++i) y[i] += alpha * x[i];
}

}  // namespace lieorb::kernels::detail
