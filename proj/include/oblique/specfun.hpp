#pragma once

#include <complex>

namespace oblique::specfun {

using cplx = std::complex<double>;

/// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286061;

// Real-argument Bessel functions. J accepts x >= 0, Y requires x > 0; any
// other argument (including NaN) throws DomainError.
double bessel_j0(double x);
double bessel_j1(double x);
double bessel_y0(double x);
double bessel_y1(double x);

/// H_order^(1)(x) = J_order(x) + i Y_order(x) for order 0 or 1, x > 0.
cplx hankel1(int order, double x);

/// H_0^(1)(x) and H_1^(1)(x) evaluated together (the kernel hot path).
struct HankelPair {
  cplx h0;
  cplx h1;
};
HankelPair hankel01(double x);

}  // namespace oblique::specfun
