#include "kernels_impl.hpp"

namespace lieorb::kernels::detail {

void gemm_scalar(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b, double* c) {
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = a[i * k + p];
      if (aip == 0.0) continue;
      const double* bp = b + p * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += aip * bp[j];
    }
  }
}

void commutator_scalar(std::size_t n, const double* a, const double* b, double* c) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t p = 0; p < n; ++p) s += a[i * n + p] * b[p * n + j] - b[i * n + p] * a[p * n + j];
      c[i * n + j] = s;
    }
  }
}

void gemv_scalar(std::size_t rows, std::size_t cols, const double* a, const double* x, double* y) {
  for (std::size_t i = 0; i < rows; ++i) {
    double s = 0.0;
    const double* ai = a + i * cols;
    for (std::size_t j = 0; j < cols; ++j) s += ai[j] * x[j];
    y[i] = s;
  }
}

double dot_scalar(std::size_t len, const double* x, const double* y) {
  double s = 0.0;
  for (std::size_t i = 0; i < len; ++i) s += x[i] * y[i];
  return s;
}

void axpy_scalar(std::size_t len, double alpha, const double* x, double* y) {
  for (std::size_t i = 0; i < len; ++i) y[i] += alpha * x[i];
}

}  // namespace lieorb::kernels::detail
