#pragma once

namespace telhaz {

// Modified Bessel functions of the first kind, orders 0 and 1, for x >= 0.
//
// Power series with term-ratio stopping up to x = 30, Hankel asymptotic
// expansion above. The *_scaled variants return e^{-x} I_n(x) and stay finite
// for arguments where I_n itself overflows.
//
// All functions throw std::domain_error for negative or NaN arguments.

double bessel_i0(double x);
double bessel_i1(double x);

double bessel_i0_scaled(double x);
double bessel_i1_scaled(double x);

// e^{-x} I1(x) / x, continuous at 0 with value 1/2.
double bessel_i1_over_x_scaled(double x);

}  // namespace telhaz
