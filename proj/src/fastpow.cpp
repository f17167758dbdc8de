#include "fastpow.hpp"

#include <cmath>

namespace gsqg::detail {

void pow_inplace(double* x, std::size_t n, double p) {
  // Square-root paths for the common exponents; several times faster than pow.
  if (p == -0.5) {
#pragma omp simd
    for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 / std::sqrt(x[i]);
    return;
  }
  if (p == -0.25) {
#pragma omp simd
    for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 / std::sqrt(std::sqrt(x[i]));
    return;
  }
#pragma omp simd
  for (std::size_t i = 0; i < n; ++i) x[i] = std::pow(x[i], p);
}

}  // namespace gsqg::detail
