#pragma once

// 256-bit MPFR reference values for J0, J1, Y0, Y1 and their derivatives.

#include <mpfr.h>

namespace oracle {

enum class Bessel { J0, J1, Y0, Y1 };

class Mpfr {
 public:
  Mpfr() {
    mpfr_inits2(256, x_, y_, a_, b_, h_, static_cast<mpfr_ptr>(nullptr));
  }
  ~Mpfr() { mpfr_clears(x_, y_, a_, b_, h_, static_cast<mpfr_ptr>(nullptr)); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  double value(Bessel f, double x) {
    mpfr_set_d(x_, x, MPFR_RNDN);
    eval(f, y_, x_);
    return mpfr_get_d(y_, MPFR_RNDN);
  }

  // Central difference with step 2^-90: truncation error far below double precision.
  double derivative(Bessel f, double x) {
    mpfr_set_d(h_, 1.0, MPFR_RNDN);
    mpfr_div_2ui(h_, h_, 90, MPFR_RNDN);
    mpfr_set_d(x_, x, MPFR_RNDN);
    mpfr_add(y_, x_, h_, MPFR_RNDN);
    eval(f, a_, y_);
    mpfr_sub(y_, x_, h_, MPFR_RNDN);
    eval(f, b_, y_);
    mpfr_sub(a_, a_, b_, MPFR_RNDN);
    mpfr_div(a_, a_, h_, MPFR_RNDN);
    mpfr_div_2ui(a_, a_, 1, MPFR_RNDN);
    return mpfr_get_d(a_, MPFR_RNDN);
  }

 private:
  static void eval(Bessel f, mpfr_t out, const mpfr_t x) {
    switch (f) {
      case Bessel::J0: mpfr_j0(out, x, MPFR_RNDN); break;
      case Bessel::J1: mpfr_j1(out, x, MPFR_RNDN); break;
      case Bessel::Y0: mpfr_y0(out, x, MPFR_RNDN); break;
      case Bessel::Y1: mpfr_y1(out, x, MPFR_RNDN); break;
    }
  }
  mpfr_t x_, y_, a_, b_, h_;
};

}  // namespace oracle
