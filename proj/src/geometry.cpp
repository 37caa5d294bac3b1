#include "oblique/geometry.hpp"

#include "oblique/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace oblique {

namespace {

// d^order/dt^order of a cos(kt) + b sin(kt).
double term_derivative(const TrigTerm& term, double t, int order) {
  const double k = term.k;
  const double c = std::cos(k * t);
  const double s = std::sin(k * t);
  switch (order) {
    case 0: return term.cos_coeff * c + term.sin_coeff * s;
    case 1: return k * (-term.cos_coeff * s + term.sin_coeff * c);
    case 2: return -k * k * (term.cos_coeff * c + term.sin_coeff * s);
    case 3: return k * k * k * (term.cos_coeff * s - term.sin_coeff * c);
    default: break;
  }
  throw ContractError("curve derivative order must be in 0..3");
}

double series_derivative(const TrigSeries& series, double t, int order) {
  double value = order == 0 ? series.offset : 0.0;
  for (const auto& term : series.terms) value += term_derivative(term, t, order);
  return value;
}

void check_terms(const std::string& name, const TrigSeries& series) {
  for (const auto& term : series.terms) {
    if (term.k < 1) throw GeometryError("curve '" + name + "': mode index must be >= 1");
  }
}

}  // namespace

TrigCurve::TrigCurve(std::string name, TrigSeries x, TrigSeries y)
    : name_(std::move(name)), x_(std::move(x)), y_(std::move(y)) {
  check_terms(name_, x_);
  check_terms(name_, y_);
  constexpr int samples = 512;
  for (int i = 0; i < samples; ++i) {
    const double t = 2.0 * std::numbers::pi * i / samples;
    if (derivative(t, 1).norm() < kDegenerateSpeed) {
      std::ostringstream msg;
      msg << "curve '" << name_ << "' is degenerate: |z'(t)| vanishes at t = " << t;
      throw GeometryError(msg.str());
    }
  }
}

Vec2 TrigCurve::derivative(double t, int order) const {
  return {series_derivative(x_, t, order), series_derivative(y_, t, order)};
}

int TrigCurve::max_mode() const {
  int m = 0;
  for (const auto& term : x_.terms) m = std::max(m, term.k);
  for (const auto& term : y_.terms) m = std::max(m, term.k);
  return m;
}

TrigCurve kite_curve() {
  TrigSeries x{-1.0, {{1, 2.0, 0.0}, {2, 1.5, 0.0}}};
  TrigSeries y{0.0, {{1, 0.0, 2.5}}};
  return TrigCurve("kite", std::move(x), std::move(y));
}

TrigCurve circle_curve(double radius, Vec2 center) {
  return ellipse_curve(radius, radius, center);
}

TrigCurve ellipse_curve(double semi_x, double semi_y, Vec2 center) {
  TrigSeries x{center.x(), {{1, semi_x, 0.0}}};
  TrigSeries y{center.y(), {{1, 0.0, semi_y}}};
  const bool round = semi_x == semi_y;
  return TrigCurve(round ? "circle" : "ellipse", std::move(x), std::move(y));
}

FrameSample curve_eval(const TrigCurve& curve, double t, int max_order) {
  if (max_order < 0 || max_order > 3) throw ContractError("curve_eval: max_order must be in 0..3");
  FrameSample f;
  f.t = t;
  f.order = max_order;
  f.z = curve.derivative(t, 0);
  if (max_order >= 1) {
    f.d1 = curve.derivative(t, 1);
    f.speed = f.d1.norm();
    if (!(f.speed >= TrigCurve::kDegenerateSpeed)) {
      std::ostringstream msg;
      msg << "curve '" << curve.name() << "' is degenerate at t = " << t << " (|z'| = " << f.speed
          << ")";
      throw GeometryError(msg.str());
    }
    f.normal = rotate_j(f.d1) / f.speed;
    f.tangent = Vec2(-f.normal.y(), f.normal.x());
  }
  if (max_order >= 2) f.d2 = curve.derivative(t, 2);
  if (max_order >= 3) f.d3 = curve.derivative(t, 3);
  return f;
}

double signed_area(const TrigCurve& curve, int n_samples) {
  if (n_samples < 16) throw ContractError("signed_area: need at least 16 samples");
  double sum = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double t = 2.0 * std::numbers::pi * i / n_samples;
    const Vec2 z = curve.derivative(t, 0);
    const Vec2 d = curve.derivative(t, 1);
    sum += z.x() * d.y() - z.y() * d.x();
  }
  return 0.5 * sum * 2.0 * std::numbers::pi / n_samples;
}

double orientation_check(const TrigCurve& curve, int n_samples) {
  const double area = signed_area(curve, n_samples);
  if (!(area > 0.0)) {
    std::ostringstream msg;
    msg << "curve '" << curve.name() << "' is not counter-clockwise (signed area " << area << ")";
    throw GeometryError(msg.str());
  }
  return area;
}

}  // namespace oblique
