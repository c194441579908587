#include "fracvar/space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fracvar/errors.hpp"
#include "fracvar/gamma.hpp"

namespace fracvar {

void SpaceConfig::validate() const {
  DerivativeOrder{alpha};
  Grid{T, n};
  if (k_max < 4) throw ValidationError("k_max must be at least 4, got " + std::to_string(k_max));
  if (4 * k_max > n)
    throw ValidationError("k_max = " + std::to_string(k_max) + " exceeds n/4 for n = " + std::to_string(n));
}

double embedding_constant(double alpha, double T) {
  const DerivativeOrder order(alpha);
  return std::pow(T, order.value() - 0.5) / (euler_gamma(order.value()) * std::sqrt(2.0 * order.value() - 1.0));
}

namespace {

SpaceConfig validated(const SpaceConfig& config) {
  config.validate();
  return config;
}

}  // namespace

SpaceModel::SpaceModel(const SpaceConfig& config)
    : config_(validated(config)), grid_(config.T, config.n), order_(config.alpha) {
  const int k_max = config_.k_max;
  const int nodes = grid_.size();
  const double T = config_.T;
  basis_.resize(k_max, nodes);
  basis_derivative_.resize(k_max, nodes);
  caputo_left_.resize(k_max, nodes);
  caputo_right_.resize(k_max, nodes);

  const auto t = grid_.nodes();
  for (int k = 0; k < k_max; ++k) {
    const double omega = (k + 1) * std::numbers::pi / T;
    for (int i = 0; i < nodes; ++i) {
      basis_(k, i) = std::sin(omega * t[i]);
      basis_derivative_(k, i) = omega * std::cos(omega * t[i]);
    }
    basis_(k, 0) = 0.0;
    basis_(k, nodes - 1) = 0.0;

    const GridFunction derivative(grid_, std::vector<double>(basis_derivative_.row(k).begin(),
                                                             basis_derivative_.row(k).end()));
    const auto left = caputo_left(derivative, order_);
    const auto right = caputo_right(derivative, order_);
    for (int i = 0; i < nodes; ++i) {
      caputo_left_(k, i) = left[i];
      caputo_right_(k, i) = right[i];
    }
  }

  weights_ = Eigen::VectorXd::Constant(nodes, grid_.step());
  weights_(0) *= 0.5;
  weights_(nodes - 1) *= 0.5;

  const double alpha = order_.value();
  left_singular_ = Eigen::VectorXd::Zero(k_max);
  right_singular_ = Eigen::VectorXd::Zero(k_max);
  if (alpha < 1.0) {
    const double b = 1.0 - alpha;
    const double h = grid_.step();
    const double g = euler_gamma(2.0 - alpha);
    for (int k = 0; k < k_max; ++k) {
      left_singular_(k) = basis_derivative_(k, 0) / g;
      right_singular_(k) = -basis_derivative_(k, nodes - 1) / g;
    }
    mixed_correction_ = riemann_zeta(-b) * std::pow(h, 1.0 + b);
    gram_correction_ = riemann_zeta(-2.0 * b) * std::pow(h, 1.0 + 2.0 * b);
  }

  embedding_constant_ = fracvar::embedding_constant(alpha, T);
  l2_embedding_constant_ = std::pow(T, alpha) / euler_gamma(alpha + 1.0);
  kappa_alpha_ = embedding_constant_ * embedding_constant_ * T / order_.abs_cos();
}

void SpaceModel::check_length(const Coefficients& coeffs) const {
  if (coeffs.size() != config_.k_max)
    throw ValidationError("expected " + std::to_string(config_.k_max) + " coefficients, got " +
                          std::to_string(coeffs.size()));
  if (!coeffs.allFinite()) throw ValidationError("non-finite coefficient");
}

double SpaceModel::alpha_inner(const Coefficients& u, const Coefficients& v) const {
  check_length(u);
  check_length(v);
  const Eigen::VectorXd du = caputo_left_.transpose() * u;
  const Eigen::VectorXd dv = caputo_left_.transpose() * v;
  return weights_.dot(du.cwiseProduct(dv)) - gram_correction_ * left_singular_.dot(u) * left_singular_.dot(v);
}

double SpaceModel::mixed_pairing(const Coefficients& u, const Coefficients& v) const {
  check_length(u);
  check_length(v);
  const Eigen::VectorXd left = caputo_left_.transpose() * u;
  const Eigen::VectorXd right = caputo_right_.transpose() * v;
  const Eigen::Index last = left.size() - 1;
  const double endpoint = left_singular_.dot(u) * right(0) + right_singular_.dot(v) * left(last);
  return -(weights_.dot(left.cwiseProduct(right)) - mixed_correction_ * endpoint);
}

Eigen::MatrixXd SpaceModel::alpha_gram() const {
  Eigen::MatrixXd gram = caputo_left_ * weights_.asDiagonal() * caputo_left_.transpose();
  gram.noalias() -= gram_correction_ * left_singular_ * left_singular_.transpose();
  return gram;
}

Eigen::MatrixXd SpaceModel::mixed_matrix() const {
  const Eigen::Index last = grid_.size() - 1;
  Eigen::MatrixXd m = -(caputo_left_ * weights_.asDiagonal() * caputo_right_.transpose());
  m.noalias() += mixed_correction_ * (left_singular_ * caputo_right_.col(0).transpose() +
                                      caputo_left_.col(last) * right_singular_.transpose());
  return m;
}

GridFunction SpaceModel::synthesize(const Coefficients& coeffs) const {
  check_length(coeffs);
  const Eigen::VectorXd values = basis_.transpose() * coeffs;
  return GridFunction(grid_, std::vector<double>(values.begin(), values.end()));
}

Eigen::VectorXd SpaceModel::caputo_left_of(const Coefficients& coeffs) const {
  check_length(coeffs);
  return caputo_left_.transpose() * coeffs;
}

Eigen::VectorXd SpaceModel::caputo_right_of(const Coefficients& coeffs) const {
  check_length(coeffs);
  return caputo_right_.transpose() * coeffs;
}

Norms SpaceModel::norms(const Coefficients& coeffs) const {
  check_length(coeffs);
  const Eigen::VectorXd values = basis_.transpose() * coeffs;
  Norms out;
  out.alpha = std::sqrt(std::max(0.0, alpha_inner(coeffs, coeffs)));
  out.l2 = std::sqrt(weights_.dot(values.cwiseAbs2()));
  out.inf = values.cwiseAbs().maxCoeff();
  return out;
}

}  // namespace fracvar
