#pragma once

#include "oblique/geometry.hpp"
#include "oblique/physics.hpp"

#include <array>
#include <complex>

namespace oblique {

/// Parametrised boundary kernels: single layer, double layer, normal and
/// tangential derivatives of the single layer, and the regularised
/// normal/tangential derivatives of the double layer.
enum class KernelTag { S = 0, D, NS, TS, ND, TD };
inline constexpr int kKernelCount = 6;
const char* to_string(KernelTag tag);

struct KernelKind {
  KernelTag tag = KernelTag::S;
  int domain = 0;  // 0 exterior, 1 interior
};

/// Split M(t,s) = m1 ln(4 sin^2((t-s)/2)) + m2, plus (1/4pi) cot((s-t)/2)
/// when cauchy_present (TS only).
struct KernelValue {
  cplx m1{};
  cplx m2{};
  bool cauchy_present = false;
};

using KernelSplitSet = std::array<KernelValue, kKernelCount>;

inline KernelValue& at(KernelSplitSet& set, KernelTag tag) { return set[static_cast<int>(tag)]; }
inline const KernelValue& at(const KernelSplitSet& set, KernelTag tag) {
  return set[static_cast<int>(tag)];
}

/// ln(4 sin^2((t-s)/2)).
double log_factor(double t, double s);
/// (1/4pi) cot((s-t)/2).
double cauchy_factor(double t, double s);

/// Direct kernel value M^k(t,s) for t != s. ND carries the added
/// (1/8pi) sin^-2((t-s)/2) counter-term. Coincident parameters throw
/// ContractError; use kernel_diagonal there.
cplx kernel_direct(KernelTag tag, double kappa, const FrameSample& ft, const FrameSample& fs);
cplx kernel_direct(const PhysicsConfig& cfg, KernelKind kind, const FrameSample& ft,
                   const FrameSample& fs);

/// Off-diagonal log split; M2 obtained by subtraction.
KernelValue kernel_split(KernelTag tag, double kappa, const FrameSample& ft,
                         const FrameSample& fs);
KernelValue kernel_split(const PhysicsConfig& cfg, KernelKind kind, const FrameSample& ft,
                         const FrameSample& fs);

/// Closed-form diagonal limits. S needs first derivatives, D/NS/TS second,
/// ND/TD third; a shallower frame throws ContractError.
KernelValue kernel_diagonal(KernelTag tag, double kappa, const FrameSample& ft);
KernelValue kernel_diagonal(const PhysicsConfig& cfg, KernelKind kind, const FrameSample& ft);

/// All six splits of one (t,s) pair sharing a single Hankel evaluation.
KernelSplitSet kernel_split_all(double kappa, const FrameSample& ft, const FrameSample& fs);
KernelSplitSet kernel_diagonal_all(double kappa, const FrameSample& ft);

}  // namespace oblique
