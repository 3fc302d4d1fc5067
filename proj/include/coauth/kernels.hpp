#pragma once

// Dense floating-point kernels behind PageRank and the regression / rank
// correlation code. Each kernel has a scalar reference implementation and,
// on x86-64, an AVX2+FMA variant chosen at startup when the CPU supports it.
// The environment variable COAUTH_SIMD=scalar|avx2 overrides the choice.
//
// Variants agree to rounding, not bitwise: vector code sums in a different
// order. A process always uses one variant, so its output is reproducible.

#include <cstddef>
#include <cstdint>
#include <span>

namespace coauth::kernels {

enum class Isa { scalar, avx2 };

struct KernelSet {
  Isa isa;
  const char* name;
  double (*sum)(const double* x, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);
  double (*l1_distance)(const double* x, const double* y, std::size_t n);
  // out[i] = x[i] * y[i]
  void (*multiply)(const double* x, const double* y, double* out, std::size_t n);
  // sum of values[idx[i]]
  double (*gather_sum)(const double* values, const std::uint32_t* idx, std::size_t n);
};

const KernelSet& scalar_kernels();
// nullptr when not compiled in or unsupported by this CPU.
const KernelSet* avx2_kernels();
const KernelSet& active();

inline double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }
inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size());
}
inline double l1_distance(std::span<const double> x, std::span<const double> y) {
  return active().l1_distance(x.data(), y.data(), x.size());
}
inline void multiply(std::span<const double> x, std::span<const double> y, std::span<double> out) {
  active().multiply(x.data(), y.data(), out.data(), x.size());
}
inline double gather_sum(std::span<const double> values, std::span<const std::uint32_t> idx) {
  return active().gather_sum(values.data(), idx.data(), idx.size());
}

}  // namespace coauth::kernels
