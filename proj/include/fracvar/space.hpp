#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <limits>
#include <vector>

#include "fracvar/frac_kernel.hpp"

namespace fracvar {

struct SpaceConfig {
  double alpha = 0.75;
  double T = 1.0;
  int n = 1024;
  int k_max = 64;

  /// Throws DomainError / ValidationError when out of range.
  void validate() const;
};

/// Coefficients of u = sum_k coeffs[k] sin((k+1) pi t / T).
using Coefficients = Eigen::VectorXd;

struct Norms {
  double alpha = 0.0;  ///< L2 norm of the left Caputo derivative
  double l2 = 0.0;
  double inf = 0.0;
};

/// Sine-basis discretization of the zero-boundary fractional space.
///
/// Rows of the basis matrices are modes, columns are grid nodes. The Caputo
/// images are produced by caputo_left / caputo_right applied to the analytic
/// derivative of each mode, so they match those operators exactly.
///
/// Integrals involving the Caputo images use the composite trapezoid rule plus
/// a generalized Euler-Maclaurin endpoint term: for alpha < 1 the left image
/// behaves like u'(0) t^(1-alpha) / Gamma(2-alpha) at t = 0 (and the right
/// image mirrors this at t = T), and the trapezoid error of t^b g(t) has the
/// leading term zeta(-b) g(0) h^(1+b), which is subtracted.
class SpaceModel {
 public:
  explicit SpaceModel(const SpaceConfig& config);

  const SpaceConfig& config() const { return config_; }
  const Grid& grid() const { return grid_; }
  DerivativeOrder order() const { return order_; }
  int modes() const { return config_.k_max; }

  const Eigen::MatrixXd& basis() const { return basis_; }
  const Eigen::MatrixXd& basis_derivative() const { return basis_derivative_; }
  const Eigen::MatrixXd& caputo_left_images() const { return caputo_left_; }
  const Eigen::MatrixXd& caputo_right_images() const { return caputo_right_; }
  /// Composite trapezoid weights.
  const Eigen::VectorXd& weights() const { return weights_; }

  /// Sup-norm embedding constant T^(alpha-1/2) / (Gamma(alpha) sqrt(2 alpha - 1)).
  double embedding_constant() const { return embedding_constant_; }
  /// L2 embedding constant T^alpha / Gamma(alpha + 1).
  double l2_embedding_constant() const { return l2_embedding_constant_; }
  /// c^2 T / |cos(pi alpha)|.
  double kappa_alpha() const { return kappa_alpha_; }

  /// Corrected quadrature of DL(u) DL(v); alpha_inner(u, u) = ||u||_alpha^2.
  double alpha_inner(const Coefficients& u, const Coefficients& v) const;
  /// Corrected quadrature of -DL(u) DR(v).
  double mixed_pairing(const Coefficients& u, const Coefficients& v) const;
  /// alpha_inner on every pair of modes.
  Eigen::MatrixXd alpha_gram() const;
  /// mixed_pairing on every pair of modes (not symmetric).
  Eigen::MatrixXd mixed_matrix() const;

  GridFunction synthesize(const Coefficients& coeffs) const;
  /// Left Caputo derivative of the element at the nodes.
  Eigen::VectorXd caputo_left_of(const Coefficients& coeffs) const;
  Eigen::VectorXd caputo_right_of(const Coefficients& coeffs) const;
  Norms norms(const Coefficients& coeffs) const;

  void check_length(const Coefficients& coeffs) const;

 private:
  SpaceConfig config_;
  Grid grid_;
  DerivativeOrder order_;
  Eigen::MatrixXd basis_;
  Eigen::MatrixXd basis_derivative_;
  Eigen::MatrixXd caputo_left_;
  Eigen::MatrixXd caputo_right_;
  Eigen::VectorXd weights_;
  // coefficients of t^(1-alpha) in DL_k at 0 and of (T-t)^(1-alpha) in DR_k at T
  Eigen::VectorXd left_singular_;
  Eigen::VectorXd right_singular_;
  double mixed_correction_ = 0.0;  // zeta(-b) h^(1+b), b = 1 - alpha
  double gram_correction_ = 0.0;   // zeta(-2b) h^(1+2b)
  double embedding_constant_;
  double l2_embedding_constant_;
  double kappa_alpha_;
};

/// Embedding constant c of the sup-norm bound, from (alpha, T).
double embedding_constant(double alpha, double T);

/// Outcome of the randomized check of the embedding and coercivity inequalities.
struct AuditReport {
  int trials = 0;
  int violations_a = 0;  ///< ||u||_2 <= T^alpha/Gamma(alpha+1) ||u||_alpha
  int violations_b = 0;  ///< ||u||_inf <= c ||u||_alpha
  int violations_c = 0;  ///< |cos| ||u||^2 <= Phi(u) <= ||u||^2 / |cos|
  double tightest_ratio_a = 0.0;
  double tightest_ratio_b = 0.0;
  double tightest_ratio_c_lower = std::numeric_limits<double>::infinity();  ///< min of Phi / (|cos| ||u||^2)
  double tightest_ratio_c_upper = 0.0;  ///< max of Phi |cos| / ||u||^2
  std::uint64_t seed = 0;
  std::vector<Coefficients> offenders;
};

/// Draws `trials` random elements (uniform coefficients rescaled to
/// ||u||_alpha in {0.1, 1, 10}) and counts violations with tolerance
/// 1e-8 (1 + ||u||_alpha^2). Phi is evaluated through EnergyAssembly.
AuditReport audit_embeddings(const SpaceModel& model, int trials, std::uint64_t seed = 0);

/// Audit a single element, accumulating into `report`.
void audit_element(const SpaceModel& model, const Coefficients& coeffs, double phi, AuditReport& report);

}  // namespace fracvar
