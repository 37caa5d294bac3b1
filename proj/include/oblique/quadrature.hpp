#pragma once

#include "oblique/geometry.hpp"

#include <Eigen/Core>

#include <complex>
#include <span>
#include <vector>

namespace oblique {

using cplx = std::complex<double>;

/// 2n equispaced Nystrom nodes t_i = i pi / n with cached frames (derivatives
/// to third order).
class NodeSet {
 public:
  /// Requires n >= 4 and a counter-clockwise curve.
  NodeSet(const TrigCurve& curve, int n);

  int n() const { return n_; }
  int size() const { return 2 * n_; }
  double t(int i) const { return frames_[i].t; }
  const FrameSample& frame(int i) const { return frames_[i]; }
  const std::vector<FrameSample>& frames() const { return frames_; }
  const TrigCurve& curve() const { return curve_; }

 private:
  TrigCurve curve_;
  int n_;
  std::vector<FrameSample> frames_;
};

// Closed-form weights of the singular rules, for n >= 1 and 0 <= j <= 2n-1.
//   sum_j R_j(t) psi(t_j) ~ \int ln(4 sin^2((t-s)/2)) psi(s) ds
//   sum_j T_j(t) psi(t_j) ~ (1/4pi) \int cot((s-t)/2) psi'(s) ds
//   sum_j S_j(t) psi(t_j) ~ p.v. \int cot((s-t)/2) psi(s) ds
double weights_R(int n, double t, int j);
double weights_T(int n, double t, int j);
/// Throws ContractError when t coincides with t_j.
double weights_S(int n, double t, int j);

/// Weights evaluated at the nodes themselves. All three depend only on
/// (i - j) mod 2n, so one row each is stored.
class QuadratureRules {
 public:
  explicit QuadratureRules(int n);

  int n() const { return n_; }
  int size() const { return 2 * n_; }
  double log_weight(int i, int j) const { return r_[wrap(i - j)]; }
  double hilbert_weight(int i, int j) const { return t_[wrap(i - j)]; }
  /// Cauchy weight S_j(t_i); zero at j == i (the removable limit).
  double cauchy_weight(int i, int j) const { return s_[wrap(j - i)]; }
  double trapezoid_weight() const;

 private:
  int wrap(int k) const {
    const int m = 2 * n_;
    return ((k % m) + m) % m;
  }
  int n_;
  std::vector<double> r_;
  std::vector<double> t_;
  std::vector<double> s_;
};

/// sum_j R_j(t_i) m1_j psi_j + (pi/n) sum_j m2_j psi_j.
cplx apply_log_rule(const QuadratureRules& q, int i, std::span<const cplx> m1_row,
                    std::span<const cplx> m2_row, std::span<const cplx> values);
/// (pi/n) sum_j row_j psi_j.
cplx apply_trapezoid(const QuadratureRules& q, std::span<const cplx> smooth_row,
                     std::span<const cplx> values);
/// (1/4pi) p.v.\int cot((s-t_i)/2) psi'(s) ds at every node.
std::vector<cplx> apply_T_rule(const QuadratureRules& q, std::span<const cplx> values);
/// p.v.\int cot((s-t_i)/2) row(s) psi(s) ds; row[i] is ignored.
cplx apply_S_rule(const QuadratureRules& q, int i, std::span<const cplx> row,
                  std::span<const cplx> values);

/// Dense 2n x 2n matrix of the T rule.
Eigen::MatrixXd hilbert_derivative_matrix(const QuadratureRules& q);

/// d/dt of the trigonometric interpolant of nodal values (2n points).
Eigen::MatrixXd spectral_derivative_matrix(int n);

}  // namespace oblique
