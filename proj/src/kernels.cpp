#include "oblique/kernels.hpp"

#include "oblique/errors.hpp"
#include "oblique/specfun.hpp"

#include <cmath>
#include <numbers>

namespace oblique {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double inv_4pi = 1.0 / (4.0 * pi);
constexpr cplx I{0.0, 1.0};

// Geometry and Hankel values shared by every kernel of one (t,s) pair.
struct PairData {
  Vec2 r;
  double rho;
  specfun::HankelPair h;
  double j0;
  double j1;
};

PairData pair_data(double kappa, const FrameSample& ft, const FrameSample& fs) {
  if (ft.order < 1 || fs.order < 1) throw ContractError("kernel: frames need first derivatives");
  const double half = 0.5 * (ft.t - fs.t);
  PairData p;
  p.r = ft.z - fs.z;
  p.rho = p.r.norm();
  if (std::sin(half) == 0.0 || p.rho == 0.0)
    throw ContractError("kernel: coincident parameters requested, use kernel_diagonal");
  p.h = specfun::hankel01(kappa * p.rho);
  p.j0 = p.h.h0.real();
  p.j1 = p.h.h1.real();
  return p;
}

// Direct kernels; index by KernelTag.
std::array<cplx, kKernelCount> direct_all(double kappa, const FrameSample& ft,
                                          const FrameSample& fs, const PairData& p) {
  const double sp = fs.speed;
  const Vec2 rhat = p.r / p.rho;
  const cplx h0 = p.h.h0;
  const cplx h1 = p.h.h1;
  std::array<cplx, kKernelCount> m;
  m[0] = 0.25 * I * h0 * sp;
  m[1] = 0.25 * I * kappa * fs.normal.dot(rhat) * h1 * sp;
  m[2] = -0.25 * I * kappa * ft.normal.dot(rhat) * h1 * sp;
  m[3] = -0.25 * I * kappa * ft.tangent.dot(rhat) * h1 * sp;

  const Vec2 jt = rotate_j(ft.d1);
  const double mt = ft.d1.dot(p.r) * fs.d1.dot(p.r) / (p.rho * p.rho);
  const double mj = jt.dot(p.r) * fs.d1.dot(p.r) / (p.rho * p.rho);
  const cplx bracket = kappa * kappa * h0 - 2.0 * kappa * h1 / p.rho;
  const cplx h1_over_rho = 0.25 * I * kappa * h1 / p.rho;
  const double s = std::sin(0.5 * (ft.t - fs.t));
  // The two 1/rho^2 pieces are summed before the counter-term is added.
  m[4] = (0.25 * I * mt * bracket + h1_over_rho * ft.d1.dot(fs.d1)) + 1.0 / (8.0 * pi * s * s);
  m[5] = 0.25 * I * mj * bracket + h1_over_rho * jt.dot(fs.d1);
  return m;
}

std::array<double, kKernelCount> log_coefficients(double kappa, const FrameSample& ft,
                                                  const FrameSample& fs, const PairData& p) {
  const double sp = fs.speed;
  const Vec2 rhat = p.r / p.rho;
  std::array<double, kKernelCount> m1;
  m1[0] = -inv_4pi * p.j0 * sp;
  m1[1] = -inv_4pi * kappa * fs.normal.dot(rhat) * p.j1 * sp;
  m1[2] = inv_4pi * kappa * ft.normal.dot(rhat) * p.j1 * sp;
  m1[3] = inv_4pi * kappa * ft.tangent.dot(rhat) * p.j1 * sp;

  const Vec2 jt = rotate_j(ft.d1);
  const double mt = ft.d1.dot(p.r) * fs.d1.dot(p.r) / (p.rho * p.rho);
  const double mj = jt.dot(p.r) * fs.d1.dot(p.r) / (p.rho * p.rho);
  const double bracket = kappa * kappa * p.j0 - 2.0 * kappa * p.j1 / p.rho;
  const double j1_over_rho = inv_4pi * kappa * p.j1 / p.rho;
  m1[4] = -inv_4pi * mt * bracket - j1_over_rho * ft.d1.dot(fs.d1);
  m1[5] = -inv_4pi * mj * bracket - j1_over_rho * jt.dot(fs.d1);
  return m1;
}

void require_order(const FrameSample& f, int order, KernelTag tag) {
  if (f.order < order)
    throw ContractError(std::string("kernel_diagonal(") + to_string(tag) +
                        "): frame needs derivatives up to order " + std::to_string(order));
}

int required_order(KernelTag tag) {
  switch (tag) {
    case KernelTag::S: return 1;
    case KernelTag::D:
    case KernelTag::NS:
    case KernelTag::TS: return 2;
    case KernelTag::ND:
    case KernelTag::TD: return 3;
  }
  return 3;
}

KernelValue diagonal_one(KernelTag tag, double kappa, const FrameSample& f) {
  const double sp = f.speed;
  const double sp2 = sp * sp;
  const double log_term = std::log(0.5 * kappa * sp);
  const double c = specfun::euler_gamma;
  KernelValue v;
  switch (tag) {
    case KernelTag::S:
      v.m1 = -inv_4pi * sp;
      v.m2 = (0.25 * I - c / (2.0 * pi) - log_term / (2.0 * pi)) * sp;
      break;
    case KernelTag::D:
    case KernelTag::NS:
      v.m2 = inv_4pi * f.normal.dot(f.d2) / sp;
      break;
    case KernelTag::TS:
      v.m2 = inv_4pi * f.tangent.dot(f.d2) / sp;
      v.cauchy_present = true;
      break;
    case KernelTag::ND: {
      const double k2 = kappa * kappa;
      const double d12 = f.d1.dot(f.d2);
      v.m1 = -k2 * sp2 / (8.0 * pi);
      v.m2 = (pi * I - 1.0 - 2.0 * c - 2.0 * log_term) * k2 * sp2 / (8.0 * pi) + 1.0 / (24.0 * pi) +
             d12 * d12 / (4.0 * pi * sp2 * sp2) - f.d1.dot(f.d3) / (12.0 * pi * sp2) -
             f.d2.squaredNorm() / (8.0 * pi * sp2);
      break;
    }
    case KernelTag::TD: {
      const Vec2 jt = rotate_j(f.d1);
      v.m2 = -f.d1.dot(f.d2) * jt.dot(f.d2) / (4.0 * pi * sp2 * sp2) +
             jt.dot(f.d3) / (12.0 * pi * sp2);
      break;
    }
  }
  return v;
}

}  // namespace

const char* to_string(KernelTag tag) {
  switch (tag) {
    case KernelTag::S: return "S";
    case KernelTag::D: return "D";
    case KernelTag::NS: return "NS";
    case KernelTag::TS: return "TS";
    case KernelTag::ND: return "ND";
    case KernelTag::TD: return "TD";
  }
  return "?";
}

double log_factor(double t, double s) {
  const double h = std::sin(0.5 * (t - s));
  return std::log(4.0 * h * h);
}

double cauchy_factor(double t, double s) {
  return inv_4pi / std::tan(0.5 * (s - t));
}

cplx kernel_direct(KernelTag tag, double kappa, const FrameSample& ft, const FrameSample& fs) {
  const PairData p = pair_data(kappa, ft, fs);
  return direct_all(kappa, ft, fs, p)[static_cast<int>(tag)];
}

cplx kernel_direct(const PhysicsConfig& cfg, KernelKind kind, const FrameSample& ft,
                   const FrameSample& fs) {
  return kernel_direct(kind.tag, cfg.kappa.at(kind.domain), ft, fs);
}

KernelSplitSet kernel_split_all(double kappa, const FrameSample& ft, const FrameSample& fs) {
  const PairData p = pair_data(kappa, ft, fs);
  const auto m = direct_all(kappa, ft, fs, p);
  const auto m1 = log_coefficients(kappa, ft, fs, p);
  const double lg = log_factor(ft.t, fs.t);
  KernelSplitSet out;
  for (int k = 0; k < kKernelCount; ++k) {
    out[k].m1 = m1[k];
    out[k].m2 = m[k] - m1[k] * lg;
  }
  auto& ts = at(out, KernelTag::TS);
  ts.m2 -= cauchy_factor(ft.t, fs.t);
  ts.cauchy_present = true;
  return out;
}

KernelValue kernel_split(KernelTag tag, double kappa, const FrameSample& ft,
                         const FrameSample& fs) {
  return kernel_split_all(kappa, ft, fs)[static_cast<int>(tag)];
}

KernelValue kernel_split(const PhysicsConfig& cfg, KernelKind kind, const FrameSample& ft,
                         const FrameSample& fs) {
  return kernel_split(kind.tag, cfg.kappa.at(kind.domain), ft, fs);
}

KernelValue kernel_diagonal(KernelTag tag, double kappa, const FrameSample& ft) {
  require_order(ft, required_order(tag), tag);
  return diagonal_one(tag, kappa, ft);
}

KernelValue kernel_diagonal(const PhysicsConfig& cfg, KernelKind kind, const FrameSample& ft) {
  return kernel_diagonal(kind.tag, cfg.kappa.at(kind.domain), ft);
}

KernelSplitSet kernel_diagonal_all(double kappa, const FrameSample& ft) {
  require_order(ft, 3, KernelTag::ND);
  KernelSplitSet out;
  for (int k = 0; k < kKernelCount; ++k) out[k] = diagonal_one(static_cast<KernelTag>(k), kappa, ft);
  return out;
}

}  // namespace oblique
