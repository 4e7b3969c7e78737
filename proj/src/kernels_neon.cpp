#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace lieorb::kernels::detail {

namespace {

inline void row_times_matrix(std::size_t k, std::size_t n, const double* a_row, const double* b, double* c_row,
                             double sign, bool accumulate) {
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    float64x2_t acc = accumulate ? vld1q_f64(c_row + j) : vdupq_n_f64(0.0);
    for (std::size_t p = 0; p < k; ++p) acc = vfmaq_n_f64(acc, vld1q_f64(b + p * n + j), sign * a_row[p]);
    vst1q_f64(c_row + j, acc);
  }
  for (; j < n; ++j) {
    double s = accumulate ? c_row[j] : 0.0;
    for (std::size_t p = 0; p < k; ++p) s += sign * a_row[p] * b[p * n + j];
    c_row[j] = s;
  }
}

}  // namespace

void gemm_neon(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b, double* c) {
  for (std::size_t i = 0; i < m; ++i) row_times_matrix(k, n, a + i * k, b, c + i * n, 1.0, false);
}

void commutator_neon(std::size_t n, const double* a, const double* b, double* c) {
  for (std::size_t i = 0; i < n; ++i) {
    row_times_matrix(n, n, a + i * n, b, c + i * n, 1.0, false);
    row_times_matrix(n, n, b + i * n, a, c + i * n, -1.0, true);
  }
}

double dot_neon(std::size_t len, const double* x, const double* y) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) acc = vfmaq_f64(acc, vld1q_f64(x + i), vld1q_f64(y + i));
  double s = vaddvq_f64(acc);
  for (; i < len; ++i) s += x[i] * y[i];
  return s;
}

void gemv_neon(std::size_t rows, std::size_t cols, const double* a, const double* x, double* y) {
  for (std::size_t i = 0; i < rows; ++i) y[i] = dot_neon(cols, a + i * cols, x);
}

void axpy_neon(std::size_t len, double alpha, const double* x, double* y) {
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) vst1q_f64(y + i, vfmaq_n_f64(vld1q_f64(y + i), vld1q_f64(x + i), alpha));
  for (; i < len; ++i) y[i] += alpha * x[i];
}

}  // namespace lieorb::kernels::detail
