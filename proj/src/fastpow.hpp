#pragma once

#include <cstddef>

namespace gsqg::detail {

// x[i] <- x[i]^p for positive x. Compiled with vector math; a few ulp.
void pow_inplace(double* x, std::size_t n, double p);

}  // namespace gsqg::detail
