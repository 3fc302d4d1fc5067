#include <cmath>

#include "kernels_impl.hpp"

namespace coauth::kernels::scalar {

double sum(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double l1_distance(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::fabs(x[i] - y[i]);
  return s;
}

void multiply(const double* x, const double* y, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

double gather_sum(const double* values, const std::uint32_t* idx, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += values[idx[i]];
  return s;
}

}  // namespace coauth::kernels::scalar
