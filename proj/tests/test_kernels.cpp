#include "oracles.hpp"

#include "oblique/errors.hpp"
#include "oblique/kernels.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

using namespace oblique;

namespace {

constexpr double pi = std::numbers::pi;
constexpr std::array<KernelTag, 6> kTags{KernelTag::S,  KernelTag::D,  KernelTag::NS,
                                         KernelTag::TS, KernelTag::ND, KernelTag::TD};

const PhysicsConfig& kite_cfg() {
  static const PhysicsConfig c = derive(MaterialInputs{});
  return c;
}

}  // namespace

TEST_CASE("single layer kernel on the unit circle") {
  const TrigCurve c = circle_curve();
  const FrameSample ft = curve_eval(c, 0.0), fs = curve_eval(c, pi);
  const cplx v = kernel_direct(KernelTag::S, 1.0, ft, fs);
  CHECK(std::abs(v - 0.25 * oracle::I * oracle::H(0, 2.0)) < 1e-15);
}

TEST_CASE("single layer symmetry M(t,s)/|z'(s)| = M(s,t)/|z'(t)|") {
  const TrigCurve kite = kite_curve();
  for (auto [t, s] : {std::pair{0.3, 2.1}, {1.1, 5.9}, {4.0, 4.5}}) {
    const FrameSample ft = curve_eval(kite, t), fs = curve_eval(kite, s);
    for (int d = 0; d < 2; ++d) {
      const cplx a = kernel_direct(kite_cfg(), {KernelTag::S, d}, ft, fs) / fs.speed;
      const cplx b = kernel_direct(kite_cfg(), {KernelTag::S, d}, fs, ft) / ft.speed;
      CHECK(std::abs(a - b) < 1e-14);
    }
  }
}

TEST_CASE("off-diagonal reconstruction m1 log + m2 (+ cot) equals the direct kernel") {
  const TrigCurve kite = kite_curve();
  const int samples = 64;
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    for (int j = 0; j < samples; ++j) {
      if (i == j) continue;
      const double t = 2 * pi * i / samples, s = 2 * pi * j / samples + pi / 512;
      const FrameSample ft = curve_eval(kite, t), fs = curve_eval(kite, s);
      for (KernelTag tag : kTags) {
        const KernelValue v = kernel_split(kite_cfg(), {tag, 1}, ft, fs);
        cplx rebuilt = v.m1 * log_factor(t, s) + v.m2;
        if (v.cauchy_present) rebuilt += cauchy_factor(t, s);
        const cplx direct = kernel_direct(kite_cfg(), {tag, 1}, ft, fs);
        worst = std::max(worst, std::abs(rebuilt - direct) / (1.0 + std::abs(direct)));
      }
    }
  }
  CHECK(worst < 1e-12);
  CHECK(kernel_split(KernelTag::TS, 1.0, curve_eval(kite, 0.1), curve_eval(kite, 0.2)).cauchy_present);
  CHECK_FALSE(kernel_split(KernelTag::TD, 1.0, curve_eval(kite, 0.1), curve_eval(kite, 0.2)).cauchy_present);
}

TEST_CASE("diagonal log coefficients") {
  const FrameSample f = curve_eval(kite_curve(), 1.2);
  const double k = kite_cfg().kappa[1];
  CHECK(std::abs(kernel_diagonal(KernelTag::S, k, f).m1 + f.speed / (4 * pi)) < 1e-16);
  CHECK(std::abs(kernel_diagonal(KernelTag::ND, k, f).m1 + k * k * f.speed * f.speed / (8 * pi)) < 1e-15);
  for (KernelTag tag : {KernelTag::D, KernelTag::NS, KernelTag::TS, KernelTag::TD})
    CHECK(kernel_diagonal(tag, k, f).m1 == cplx(0.0));

  const FrameSample fc = curve_eval(circle_curve(), 0.4);
  CHECK(kernel_diagonal(KernelTag::S, 1.0, fc).m1.real() == doctest::Approx(-1.0 / (4 * pi)));
  CHECK(kernel_diagonal(KernelTag::D, 1.0, fc).m2.real() == doctest::Approx(-1.0 / (4 * pi)));
  CHECK(kernel_diagonal(KernelTag::NS, 1.0, fc).m2 == kernel_diagonal(KernelTag::D, 1.0, fc).m2);
}

TEST_CASE("M2 approaches its diagonal value along an offset sequence") {
  // m2(t, t + h) - m2(t, t) = O(h); the error must shrink with h until
  // cancellation takes over, and the symmetric mean over t +- h is O(h^2).
  const TrigCurve kite = kite_curve();
  for (double t : {0.3, 1.7, 4.0}) {
    const FrameSample ft = curve_eval(kite, t);
    for (int d = 0; d < 2; ++d) {
      const double k = kite_cfg().kappa[d];
      for (KernelTag tag : kTags) {
        const cplx diag = kernel_diagonal(tag, k, ft).m2;
        std::vector<double> err;
        for (int p = 2; p <= 4; ++p) {
          const double h = std::pow(10.0, -p);
          const cplx plus = kernel_split(tag, k, ft, curve_eval(kite, t + h)).m2;
          const cplx minus = kernel_split(tag, k, ft, curve_eval(kite, t - h)).m2;
          err.push_back(std::abs(0.5 * (plus + minus) - diag));
        }
        CAPTURE(to_string(tag));
        CAPTURE(t);
        CHECK(err[1] < err[0]);
        CHECK(err[1] < 1e-3 * (1.0 + std::abs(diag)));
        if (tag == KernelTag::S) CHECK(err[2] <= 1e-6);
      }
    }
  }
}

TEST_CASE("TS diagonal carries the curvature term (invisible on a circle)") {
  // On the kite tau . z'' != 0; the offset limit of M2^TS fixes its sign.
  const TrigCurve kite = kite_curve();
  const FrameSample ft = curve_eval(kite, 1.7);
  const cplx diag = kernel_diagonal(KernelTag::TS, 1.0, ft).m2;
  CHECK(std::abs(diag.real() - ft.tangent.dot(ft.d2) / (4 * pi * ft.speed)) < 1e-15);
  const cplx near = kernel_split(KernelTag::TS, 1.0, ft, curve_eval(kite, 1.7 + 1e-4)).m2;
  CHECK(std::abs(near - diag) < 1e-3);
}

TEST_CASE("TD kernel is weakly singular near the diagonal") {
  const TrigCurve kite = kite_curve();
  for (double t : {0.5, 2.5, 5.0}) {
    const FrameSample ft = curve_eval(kite, t);
    const double k = kite_cfg().kappa[1];
    const cplx diag = kernel_diagonal(KernelTag::TD, k, ft).m2;
    const FrameSample fs = curve_eval(kite, t + 1e-3);
    const cplx direct = kernel_direct(KernelTag::TD, k, ft, fs);
    CHECK(std::abs(direct) <= 10.0 * (std::abs(diag) + 1.0));
  }
}

TEST_CASE("M1 is analytic: rapid Fourier decay in s") {
  // S, NS and TS carry |z'(s)|, whose complex branch points limit the decay
  // rate on the kite; 512 samples put the upper half of the band below 1e-10.
  const TrigCurve kite = kite_curve();
  const int m = 512;
  const double t = 0.9;
  const FrameSample ft = curve_eval(kite, t);
  for (KernelTag tag : kTags) {
    std::vector<cplx> samples(m);
    for (int j = 0; j < m; ++j) {
      const double s = t + 2 * pi * j / m;
      samples[j] = j == 0 ? kernel_diagonal(tag, kite_cfg().kappa[1], ft).m1
                          : kernel_split(tag, kite_cfg().kappa[1], ft, curve_eval(kite, s)).m1;
    }
    double scale = 0.0, tail = 0.0;
    for (int k = 0; k < m; ++k) {
      cplx c = 0.0;
      for (int j = 0; j < m; ++j) c += samples[j] * std::exp(-oracle::I * (2 * pi * k * j / m));
      const int freq = k <= m / 2 ? k : m - k;
      double& bucket = freq >= m / 4 ? tail : scale;
      bucket = std::max(bucket, std::abs(c) / m);
    }
    CAPTURE(to_string(tag));
    CHECK(tail <= 1e-10 * std::max(1.0, scale));
  }
}

TEST_CASE("contract errors") {
  const TrigCurve kite = kite_curve();
  const FrameSample f = curve_eval(kite, 0.4);
  CHECK_THROWS_AS(kernel_direct(KernelTag::S, 1.0, f, f), ContractError);
  const FrameSample shallow = curve_eval(kite, 0.4, 2);
  CHECK_NOTHROW(kernel_diagonal(KernelTag::TS, 1.0, shallow));
  CHECK_THROWS_AS(kernel_diagonal(KernelTag::ND, 1.0, shallow), ContractError);
  CHECK_THROWS_AS(kernel_diagonal(KernelTag::TD, 1.0, shallow), ContractError);
  CHECK_THROWS_AS(kernel_diagonal(KernelTag::D, 1.0, curve_eval(kite, 0.4, 1)), ContractError);
}
