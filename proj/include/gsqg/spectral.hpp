#pragma once

#include <complex>
#include <vector>

#include "gsqg/geometry.hpp"

namespace gsqg {

// Unnormalized DFTs: forward X_k = sum_j x_j e^{-2 pi i jk/M}, backward with +.
std::vector<cplx> fft_forward(const std::vector<cplx>& x);
std::vector<cplx> fft_backward(const std::vector<cplx>& x);

struct TrigCoefficients {
  std::vector<double> sine;    // g_n with G = -2 sum g_n sin(n theta), n >= 1
  std::vector<double> cosine;  // c_n with G = c_0 + sum c_n cos(n theta)
};

// Expansion of real grid values in the form i sum g_n (w^n - conj(w)^n).
// Modes 0 .. M/2-1.
TrigCoefficients trig_coefficients(const std::vector<double>& values, const UnitGrid& grid);

// c_k for k = -M/2 .. M/2-1 (stored at k + M/2) with f(w_j) = sum c_k w_j^k.
std::vector<cplx> laurent_coefficients(const std::vector<cplx>& values, const UnitGrid& grid);

// Spectral d/dtheta of periodic samples on an equispaced grid.
std::vector<cplx> spectral_derivative(const std::vector<cplx>& x);

}  // namespace gsqg
