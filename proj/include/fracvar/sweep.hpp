#pragma once

#include <vector>

#include "fracvar/problem_config.hpp"

namespace fracvar {

struct SweepReport {
  std::vector<double> mu_values;
  std::vector<SolutionRecord> records;
  bool monotonicity_verdict = false;  ///< energies strictly decreasing in mu
  bool negativity_verdict = false;    ///< every energy negative
  bool norm_decay_verdict = false;    ///< ||u||_alpha shrinks as mu decreases
  bool trivial_datum = false;         ///< every record is u = 0
  ConditionReport conditions;
};

/// Relative strictness margin for consecutive energies.
inline constexpr double kStrictDecrease = 1e-10;
/// The norm at the smallest mu must be below this fraction of the norm at the largest.
inline constexpr double kNormDecayFraction = 0.25;

/// Solves at `count` geometrically spaced mu in [mu_min, mu_max] and computes
/// the verdicts from the records. Requires 0 < mu_min < mu_max < mu_star
/// (HypothesisError otherwise) and count >= 4 (ValidationError).
SweepReport run_sweep(const ProblemSpec& spec, double mu_min, double mu_max, int count);
SweepReport run_sweep(const Problem& problem, const SolverConfig& cfg, double mu_min, double mu_max, int count);

/// Recomputes the three verdicts and the trivial-datum flag from the records.
void compute_verdicts(SweepReport& report, const Problem& problem);

std::vector<double> geometric_grid(double lo, double hi, int count);

struct RayPoint {
  double tau = 0.0;
  double energy = 0.0;
};

struct RayScan {
  std::vector<RayPoint> points;
  double fitted_exponent = 0.0;  ///< slope of log|J| against log(tau) over the last three points
  double leading_sign = 0.0;     ///< sign of J at the largest tau
  double expected_exponent = 0.0;
  bool unbounded_below = false;
};

/// Evaluates J_mu(tau u) along a ray. Unboundedness is claimed when J ends
/// negative with fitted exponent >= p - 0.3, p the growth exponent of F,
/// and p > 2.
RayScan ray_scan(const Problem& problem, double mu, const Coefficients& direction, const std::vector<double>& taus);

inline constexpr double kExponentSlack = 0.3;

}  // namespace fracvar
