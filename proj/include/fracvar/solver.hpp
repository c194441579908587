#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "fracvar/conditions.hpp"
#include "fracvar/energy.hpp"

namespace fracvar {

struct SolverConfig {
  double grad_tol = 1e-8;
  int max_iters = 5000;
  int restarts = 8;
  double armijo_c = 1e-4;
  double backtrack_factor = 0.5;
  double sublevel_margin = 0.99;
  std::uint64_t seed = 0;

  void validate() const;
};

/// A discretized instance of the parametric boundary-value problem.
struct Problem {
  std::shared_ptr<const SpaceModel> space;
  std::shared_ptr<const EnergyAssembly> energy;
  Nonlinearity nonlinearity;
  ConditionReport conditions;
  /// Radius defining the sublevel set; argmax of the sup ratio unless overridden.
  double gamma_bar = 1.0;

  static Problem build(const SpaceConfig& config, Nonlinearity nl, std::optional<double> gamma_bar = std::nullopt);

  double alpha() const { return space->config().alpha; }
  double T() const { return space->config().T; }
};

/// |cos(pi alpha)| gamma_bar^2 / c^2: Phi below this keeps ||u||_inf below gamma_bar.
double sublevel_radius(double gamma_bar, double alpha, double T);

struct Candidate {
  double start_amplitude = 0.0;
  double energy = 0.0;
  double norm_alpha = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct SolutionRecord {
  Coefficients coeffs;
  double mu = 0.0;
  double norm_alpha = 0.0;
  double norm_inf = 0.0;
  double phi = 0.0;
  double psi = 0.0;
  double energy = 0.0;
  double residual = 0.0;
  double grad_norm = 0.0;
  bool converged = false;
  bool nontrivial = false;
  int restarts_used = 0;
  int best_start = 0;
  double gamma_bar = 0.0;
  double r_radius = 0.0;
  std::vector<Candidate> candidates;
};

/// One run of projected, preconditioned gradient descent.
struct DescentResult {
  Coefficients coeffs;
  double energy = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> energy_history;  ///< J at every accepted iterate, starting point included
  std::vector<double> phi_history;
};

/// Descends J_mu from `start` inside Phi < margin * r.
///
/// Search directions are gradients in the Phi inner product,
/// d = -M_s^{-1} grad / 2, with Armijo backtracking. A trial point with
/// Phi >= margin * r is pulled back radially onto Phi = margin * r.
DescentResult descend(const Problem& problem, double mu, const Coefficients& start, const SolverConfig& cfg);

/// Multi-start minimization of J_mu over the sublevel set: the zero vector
/// and random directions at ||u||_alpha in {1e-3, 1e-2, 1e-1}. The lowest
/// energy wins (ties within 1e-10 relative go to the smaller norm).
/// Non-convergence is reported through SolutionRecord::converged.
SolutionRecord minimize(const Problem& problem, double mu, const SolverConfig& cfg);

/// Fills every derived field of a record from its coefficients.
SolutionRecord make_record(const Problem& problem, double mu, const Coefficients& coeffs);

/// The map I^{1-a}_left(DL u) - I^{1-a}_right(DR u) + int_0^t mu f(u) on the grid.
Eigen::VectorXd weak_form_map(const Problem& problem, double mu, const Coefficients& coeffs);

/// max |map - mean(map)| over nodes 3..n-3: zero for an exact critical point.
double weak_residual(const Problem& problem, double mu, const Coefficients& coeffs);
/// Same deviation for samples of u and u', with the Caputo derivatives taken by the product-trapezoid kernel.
double weak_residual(const GridFunction& u, const GridFunction& u_prime, double alpha, double mu,
                     const Nonlinearity& nl);

/// Residual tolerance kResidualConstant * h^(1 - alpha).
double residual_tolerance(const Problem& problem);
inline constexpr double kResidualConstant = 2e-3;

struct CertificateSet {
  bool inf_norm_bound = false;
  std::optional<bool> negative_energy;  ///< empty when the hypotheses for negativity are not met
  bool residual_ok = false;
  bool interior = false;
};

CertificateSet certify(const SolutionRecord& sol, const Problem& problem);

}  // namespace fracvar
