#pragma once

#include <cstddef>
#include <cstdint>

namespace coauth::kernels {

#define COAUTH_KERNEL_DECLS                                                        \
  double sum(const double* x, std::size_t n);                                      \
  double dot(const double* x, const double* y, std::size_t n);                     \
  double l1_distance(const double* x, const double* y, std::size_t n);             \
  void multiply(const double* x, const double* y, double* out, std::size_t n);     \
  double gather_sum(const double* values, const std::uint32_t* idx, std::size_t n);

namespace scalar {
COAUTH_KERNEL_DECLS
}

#if defined(COAUTH_HAVE_AVX2)
namespace avx2 {
COAUTH_KERNEL_DECLS
}
#endif

#undef COAUTH_KERNEL_DECLS

}  // namespace coauth::kernels
