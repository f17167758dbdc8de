#pragma once

#include <string>
#include <vector>

namespace gsqg {

struct IntegralCheck {
  std::string family;  // I, J, Z, sqg1, sqg2
  int n = 0;
  double closed_form = 0.0;
  double quadrature = 0.0;
  double rel_error = 0.0;  // absolute when the closed form is 0
};

// Closed-form moments against tanh-sinh quadrature of their sin-power forms
// on (0, pi). alpha in (0,1) checks I, J, Z; alpha = 1 checks the two
// subtracted moments.
std::vector<IntegralCheck> verify_integrals(double alpha, int n_max);

// (1/2 pi) int e^{i j eta} |1 - e^{i eta}|^{-alpha} by quadrature.
double circle_moment_quadrature(double alpha, int j);

}  // namespace gsqg
