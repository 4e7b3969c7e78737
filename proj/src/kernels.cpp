#include "lieorb/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"

namespace lieorb::kernels {

namespace {

constexpr KernelTable kScalar{Isa::scalar, detail::gemm_scalar, detail::commutator_scalar, detail::gemv_scalar,
                              detail::dot_scalar, detail::axpy_scalar};

#if defined(LIEORB_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::avx2, detail::gemm_avx2, detail::commutator_avx2, detail::gemv_avx2,
                            detail::dot_avx2, detail::axpy_avx2};
#endif

#if defined(LIEORB_HAVE_NEON)
constexpr KernelTable kNeon{Isa::neon, detail::gemm_neon, detail::commutator_neon, detail::gemv_neon,
                            detail::dot_neon, detail::axpy_neon};
#endif

const KernelTable& detect() {
  if (const char* env = std::getenv("LIEORB_SIMD"); env != nullptr && std::string(env) == "scalar") return kScalar;
  if (const KernelTable* t = avx2_table()) return *t;
  if (const KernelTable* t = neon_table()) return *t;
  return kScalar;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{&detect()};
  return table;
}

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

const KernelTable* avx2_table() {
#if defined(LIEORB_HAVE_AVX2)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_table() {
#if defined(LIEORB_HAVE_NEON)
  return &kNeon;
#else
  return nullptr;
#endif
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

Isa active_isa() { return active().isa; }

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

void force(const KernelTable& table) { current().store(&table, std::memory_order_relaxed); }

void reset() { current().store(&detect(), std::memory_order_relaxed); }

double trace_product(std::size_t n, const double* a, const double* b, double* scratch) {
  // trace(AB) = <A, B^T>_F
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scratch[i * n + j] = b[j * n + i];
  return dot(n * n, a, scratch);
}

}  // namespace lieorb::kernels
