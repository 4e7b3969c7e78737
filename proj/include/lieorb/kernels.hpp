#pragma once

// Dense inner-loop kernels over row-major double buffers.
//
// Every kernel has a scalar reference implementation. Wider variants (AVX2+FMA
// on x86-64, NEON on aarch64) are compiled in separate translation units and
// picked once at startup from what the CPU reports. Setting LIEORB_SIMD=scalar
// in the environment pins the scalar table.

#include <cstddef>
#include <string_view>

namespace lieorb::kernels {

enum class Isa { scalar, avx2, neon };

struct KernelTable {
  Isa isa;
  // c[m x n] = a[m x k] * b[k x n]
  void (*gemm)(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b, double* c);
  // c[n x n] = a*b - b*a
  void (*commutator)(std::size_t n, const double* a, const double* b, double* c);
  // y[rows] = a[rows x cols] * x[cols]
  void (*gemv)(std::size_t rows, std::size_t cols, const double* a, const double* x, double* y);
  double (*dot)(std::size_t len, const double* x, const double* y);
  // y += alpha * x
  void (*axpy)(std::size_t len, double alpha, const double* x, double* y);
};

const KernelTable& scalar_table();
// nullptr when the variant was not compiled in or the CPU lacks the extension.
const KernelTable* avx2_table();
const KernelTable* neon_table();

const KernelTable& active();
Isa active_isa();
std::string_view isa_name(Isa isa);

// Test hook: route subsequent calls through the given table.
void force(const KernelTable& table);
void reset();

inline void gemm(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b, double* c) {
  active().gemm(m, k, n, a, b, c);
}
inline void commutator(std::size_t n, const double* a, const double* b, double* c) {
  active().commutator(n, a, b, c);
}
inline void gemv(std::size_t rows, std::size_t cols, const double* a, const double* x, double* y) {
  active().gemv(rows, cols, a, x, y);
}
inline double dot(std::size_t len, const double* x, const double* y) { return active().dot(len, x, y); }
inline void axpy(std::size_t len, double alpha, const double* x, double* y) { active().axpy(len, alpha, x, y); }

// trace(A*B) for square row-major n x n buffers. `scratch` must hold n*n doubles.
double trace_product(std::size_t n, const double* a, const double* b, double* scratch);

}  // namespace lieorb::kernels
