#include <cstdlib>
#include <string_view>

#include "coauth/kernels.hpp"
#include "kernels_impl.hpp"

namespace coauth::kernels {

namespace {

constexpr KernelSet kScalar{Isa::scalar,      "scalar",         scalar::sum,
                            scalar::dot,      scalar::l1_distance, scalar::multiply,
                            scalar::gather_sum};

#if defined(COAUTH_HAVE_AVX2)
constexpr KernelSet kAvx2{Isa::avx2,      "avx2",         avx2::sum,       avx2::dot,
                          avx2::l1_distance, avx2::multiply, avx2::gather_sum};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const KernelSet& choose() {
  const char* env = std::getenv("COAUTH_SIMD");
  const std::string_view pick = env ? env : "";
  if (pick == "scalar") return kScalar;
  if (const auto* v = avx2_kernels()) return *v;
  return kScalar;
}

}  // namespace

const KernelSet& scalar_kernels() { return kScalar; }

const KernelSet* avx2_kernels() {
#if defined(COAUTH_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active() {
  static const KernelSet& chosen = choose();
  return chosen;
}

}  // namespace coauth::kernels
