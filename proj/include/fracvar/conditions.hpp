#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fracvar/nonlinearity.hpp"

namespace fracvar {

/// Outcome of a numerical probe of a limit or a strict inequality. A probe
/// cannot prove a limit, so "inconclusive" is a first-class answer.
enum class TriState { holds, fails, inconclusive };
std::string_view to_string(TriState state);
TriState tri_state_from_string(std::string_view text);

/// Where the supremum of the ratio was found on the probe grid.
enum class SupLocation { interior, lower_edge, upper_edge };
std::string_view to_string(SupLocation where);
SupLocation sup_location_from_string(std::string_view text);

inline constexpr double kProbeMin = 1e-6;
inline constexpr double kProbeMax = 1e6;
inline constexpr int kProbeCount = 2001;

/// T^(2 alpha) / (Gamma(alpha)^2 |cos(pi alpha)| (2 alpha - 1)).
double kappa_alpha(double alpha, double T);

/// sup over gamma > 0 of gamma^2 / max_{|xi| <= gamma} F(xi).
struct SupRatio {
  double value = 0.0;  ///< +inf when max F vanishes at some probe
  double gamma_bar = 0.0;
  /// The ratio was still growing at an edge of [1e-6, 1e6]; value is the
  /// edge value and the true supremum may be larger.
  SupLocation location = SupLocation::interior;
  std::vector<std::pair<double, double>> probes;  ///< thinned (gamma, ratio) samples
};

/// Log-grid search over [1e-6, 1e6] with 2001 probes, max F from a dense
/// running-maximum scan (1e4 points per decade on both signs), then
/// golden-section refinement of the best bracket to 1e-8 relative.
SupRatio sup_ratio(const Nonlinearity& nl);

/// Same search with F(gamma) in place of max_{|xi|<=gamma} F (nonnegative data).
SupRatio sup_ratio_nonnegative(const Nonlinearity& nl);

/// max_{|xi| <= gamma} F(xi).
double max_potential(const Nonlinearity& nl, double gamma);

/// sup_ratio / kappa_alpha; +inf when the supremum is infinite or sits at an edge.
double mu_star(const Nonlinearity& nl, double alpha, double T);

struct Interval {
  double left = 0.0;
  double right = 0.0;  ///< may be +inf
};

/// Admissible parameter interval (0, endpoint) for nonnegative data.
/// Throws HypothesisError when f is negative somewhere.
Interval lambda_interval(const Nonlinearity& nl, double alpha, double T);

struct LimitProbes {
  TriState s0 = TriState::inconclusive;    ///< f(t)/t -> +inf as t -> 0+
  TriState sinf = TriState::inconclusive;  ///< limsup xi^2 / F(xi) > kappa_alpha as xi -> +inf
  TriState zero = TriState::inconclusive;  ///< F(t)/t^2 -> +inf as t -> 0+
  std::vector<double> s0_sequence;
  std::vector<double> sinf_sequence;
  std::vector<double> zero_sequence;
};

/// Threshold a 0+ ratio must exceed at the last probe to count as divergent.
inline constexpr double kDivergenceThreshold = 1e3;

LimitProbes limit_probes(const Nonlinearity& nl, double alpha, double T);

/// Closed forms for power_sum(r, s) with 1 < r < 2 < s.
double example_gamma_bar(double r, double s);
double example_mu_bound(double r, double s, double alpha, double T);

/// Computable upper bound kappa_alpha max_{|xi|<=gamma_bar} F / gamma_bar^2 on phi(r).
double phi_r_upper_bound(double gamma_bar, const Nonlinearity& nl, double alpha, double T);

struct ConditionReport {
  double kappa_alpha = 0.0;
  double sup_ratio = 0.0;
  std::optional<double> gamma_bar;
  SupLocation sup_location = SupLocation::interior;
  double mu_star = 0.0;
  std::optional<double> lambda_right_endpoint;  ///< only for nonnegative data
  TriState sg_holds = TriState::inconclusive;
  TriState sg_prime_holds = TriState::inconclusive;
  TriState s0_holds = TriState::inconclusive;
  TriState sinf_holds = TriState::inconclusive;
  TriState zero_holds = TriState::inconclusive;
  bool nonnegative = false;
  bool vanishes_at_zero = false;
  std::optional<double> phi_r_bound;
  std::vector<std::pair<double, double>> probes;
};

ConditionReport evaluate_conditions(const Nonlinearity& nl, double alpha, double T);

}  // namespace fracvar
