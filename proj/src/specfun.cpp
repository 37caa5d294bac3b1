#include "oblique/specfun.hpp"

#include "oblique/errors.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <string>

namespace oblique::specfun {

namespace {

void require_nonnegative(const char* name, double x) {
  if (!(x >= 0.0) || std::isinf(x))
    throw DomainError(std::string(name) + ": argument must be finite and >= 0, got " +
                      std::to_string(x));
}

void require_positive(const char* name, double x) {
  if (!(x > 0.0) || std::isinf(x))
    throw DomainError(std::string(name) + ": argument must be finite and > 0, got " +
                      std::to_string(x));
}

}  // namespace

double bessel_j0(double x) {
  require_nonnegative("bessel_j0", x);
  return boost::math::cyl_bessel_j(0, x);
}

double bessel_j1(double x) {
  require_nonnegative("bessel_j1", x);
  return boost::math::cyl_bessel_j(1, x);
}

double bessel_y0(double x) {
  require_positive("bessel_y0", x);
  return boost::math::cyl_neumann(0, x);
}

double bessel_y1(double x) {
  require_positive("bessel_y1", x);
  return boost::math::cyl_neumann(1, x);
}

cplx hankel1(int order, double x) {
  require_positive("hankel1", x);
  switch (order) {
    case 0: return {boost::math::cyl_bessel_j(0, x), boost::math::cyl_neumann(0, x)};
    case 1: return {boost::math::cyl_bessel_j(1, x), boost::math::cyl_neumann(1, x)};
    default: break;
  }
  throw DomainError("hankel1: only orders 0 and 1 are supported");
}

HankelPair hankel01(double x) {
  require_positive("hankel01", x);
  return {{boost::math::cyl_bessel_j(0, x), boost::math::cyl_neumann(0, x)},
          {boost::math::cyl_bessel_j(1, x), boost::math::cyl_neumann(1, x)}};
}

}  // namespace oblique::specfun
