#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace oblique {

using Vec2 = Eigen::Vector2d;

/// Rotation by -pi/2: J = [[0, 1], [-1, 0]], so J z' is the outward normal
/// direction of a counter-clockwise curve.
inline Vec2 rotate_j(const Vec2& v) { return {v.y(), -v.x()}; }

/// One Fourier mode k >= 1 of a curve component: a cos(kt) + b sin(kt).
struct TrigTerm {
  int k = 1;
  double cos_coeff = 0.0;
  double sin_coeff = 0.0;
};

/// Coefficients of one component z_c(t) = offset + sum_k (a_k cos kt + b_k sin kt).
struct TrigSeries {
  double offset = 0.0;
  std::vector<TrigTerm> terms;
};

/// Position, derivatives to third order and the local frame at parameter t.
struct FrameSample {
  double t = 0.0;
  Vec2 z = Vec2::Zero();
  Vec2 d1 = Vec2::Zero();
  Vec2 d2 = Vec2::Zero();
  Vec2 d3 = Vec2::Zero();
  double speed = 0.0;
  Vec2 normal = Vec2::Zero();
  Vec2 tangent = Vec2::Zero();
  int order = 0;
};

/// Closed 2*pi-periodic boundary curve given by finite trigonometric series,
/// so every derivative is exact.
class TrigCurve {
 public:
  static constexpr double kDegenerateSpeed = 1e-12;

  /// Throws GeometryError if |z'| drops below kDegenerateSpeed on a
  /// 512-point sample or a mode index is not positive.
  TrigCurve(std::string name, TrigSeries x, TrigSeries y);

  const std::string& name() const { return name_; }
  const TrigSeries& x_series() const { return x_; }
  const TrigSeries& y_series() const { return y_; }

  /// z^(order)(t) for order 0..3.
  Vec2 derivative(double t, int order) const;

  /// Largest Fourier mode present in either component.
  int max_mode() const;

 private:
  std::string name_;
  TrigSeries x_;
  TrigSeries y_;
};

/// z(t) = (2 cos t + 1.5 cos 2t - 1, 2.5 sin t).
TrigCurve kite_curve();
TrigCurve circle_curve(double radius = 1.0, Vec2 center = Vec2::Zero());
TrigCurve ellipse_curve(double semi_x, double semi_y, Vec2 center = Vec2::Zero());

/// Evaluates the curve and its frame. Normal and tangent are filled when
/// max_order >= 1; throws GeometryError on |z'(t)| < 1e-12.
FrameSample curve_eval(const TrigCurve& curve, double t, int max_order = 3);

/// Trapezoid estimate of 1/2 \oint (z1 z2' - z2 z1') dt; n_samples >= 16.
double signed_area(const TrigCurve& curve, int n_samples = 256);

/// signed_area, but throws GeometryError naming the curve when it is not positive.
double orientation_check(const TrigCurve& curve, int n_samples = 256);

}  // namespace oblique
