#include "oblique/quadrature.hpp"

#include "oblique/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace oblique {

namespace {

constexpr double pi = std::numbers::pi;

void require_index(int n, int j) {
  if (n < 1) throw ContractError("quadrature: n must be >= 1");
  if (j < 0 || j >= 2 * n) throw ContractError("quadrature: node index out of range");
}

void require_size(const QuadratureRules& q, std::size_t size, const char* what) {
  if (size != static_cast<std::size_t>(q.size()))
    throw ContractError(std::string(what) + ": expected " + std::to_string(q.size()) +
                        " values, got " + std::to_string(size));
}

}  // namespace

NodeSet::NodeSet(const TrigCurve& curve, int n) : curve_(curve), n_(n) {
  if (n < 4) throw ContractError("NodeSet: n must be >= 4");
  orientation_check(curve_);
  frames_.reserve(2 * n);
  for (int i = 0; i < 2 * n; ++i) frames_.push_back(curve_eval(curve_, i * pi / n, 3));
}

double weights_R(int n, double t, int j) {
  require_index(n, j);
  const double d = t - j * pi / n;
  double sum = 0.0;
  for (int m = 1; m < n; ++m) sum += std::cos(m * d) / m;
  return -2.0 * pi / n * sum - pi / (double(n) * n) * std::cos(n * d);
}

double weights_T(int n, double t, int j) {
  require_index(n, j);
  const double d = t - j * pi / n;
  double sum = 0.0;
  for (int m = 1; m < n; ++m) sum += m * std::cos(m * d);
  return -sum / (2.0 * n) - 0.25 * std::cos(n * d);
}

double weights_S(int n, double t, int j) {
  require_index(n, j);
  const double half = 0.5 * (j * pi / n - t);
  if (std::sin(half) == 0.0)
    throw ContractError("weights_S: t coincides with node t_j (removable point)");
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  return pi / n * (1.0 - sign * std::cos(n * t)) / std::tan(half);
}

QuadratureRules::QuadratureRules(int n) : n_(n) {
  if (n < 1) throw ContractError("QuadratureRules: n must be >= 1");
  const int m = 2 * n;
  r_.resize(m);
  t_.resize(m);
  s_.resize(m);
  for (int k = 0; k < m; ++k) {
    const double tk = k * pi / n;
    r_[k] = weights_R(n, tk, 0);
    t_[k] = weights_T(n, tk, 0);
    // S_j(t_i) with j - i = k: (pi/n)[1 - (-1)^k] cot(k pi / 2n).
    s_[k] = (k % 2 == 1) ? 2.0 * pi / n / std::tan(0.5 * tk) : 0.0;
  }
}

double QuadratureRules::trapezoid_weight() const { return pi / n_; }

cplx apply_log_rule(const QuadratureRules& q, int i, std::span<const cplx> m1_row,
                    std::span<const cplx> m2_row, std::span<const cplx> values) {
  require_size(q, m1_row.size(), "apply_log_rule");
  require_size(q, m2_row.size(), "apply_log_rule");
  require_size(q, values.size(), "apply_log_rule");
  const double w = q.trapezoid_weight();
  cplx sum{};
  for (int j = 0; j < q.size(); ++j)
    sum += (q.log_weight(i, j) * m1_row[j] + w * m2_row[j]) * values[j];
  return sum;
}

cplx apply_trapezoid(const QuadratureRules& q, std::span<const cplx> smooth_row,
                     std::span<const cplx> values) {
  require_size(q, smooth_row.size(), "apply_trapezoid");
  require_size(q, values.size(), "apply_trapezoid");
  cplx sum{};
  for (int j = 0; j < q.size(); ++j) sum += smooth_row[j] * values[j];
  return q.trapezoid_weight() * sum;
}

std::vector<cplx> apply_T_rule(const QuadratureRules& q, std::span<const cplx> values) {
  require_size(q, values.size(), "apply_T_rule");
  std::vector<cplx> out(q.size());
  for (int i = 0; i < q.size(); ++i) {
    cplx sum{};
    for (int j = 0; j < q.size(); ++j) sum += q.hilbert_weight(i, j) * values[j];
    out[i] = sum;
  }
  return out;
}

cplx apply_S_rule(const QuadratureRules& q, int i, std::span<const cplx> row,
                  std::span<const cplx> values) {
  require_size(q, row.size(), "apply_S_rule");
  require_size(q, values.size(), "apply_S_rule");
  cplx sum{};
  for (int j = 0; j < q.size(); ++j) {
    if (j == i) continue;
    sum += q.cauchy_weight(i, j) * row[j] * values[j];
  }
  return sum;
}

Eigen::MatrixXd hilbert_derivative_matrix(const QuadratureRules& q) {
  Eigen::MatrixXd m(q.size(), q.size());
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j) m(i, j) = q.hilbert_weight(i, j);
  return m;
}

Eigen::MatrixXd spectral_derivative_matrix(int n) {
  const int m = 2 * n;
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const double sign = ((i - j) % 2 == 0) ? 1.0 : -1.0;
      d(i, j) = 0.5 * sign / std::tan(0.5 * (i - j) * pi / n);
    }
  }
  return d;
}

}  // namespace oblique
