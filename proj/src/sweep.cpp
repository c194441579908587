#include "fracvar/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fracvar/errors.hpp"

namespace fracvar {

std::vector<double> geometric_grid(double lo, double hi, int count) {
  if (count < 2) throw ValidationError("geometric_grid needs at least two points");
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("geometric_grid needs 0 < lo < hi");
  std::vector<double> out(count);
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < count; ++i) out[i] = lo * std::exp(ratio * i / (count - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

void compute_verdicts(SweepReport& report, const Problem& problem) {
  const auto& recs = report.records;
  report.monotonicity_verdict = false;
  report.negativity_verdict = false;
  report.norm_decay_verdict = false;
  report.trivial_datum = !recs.empty() && std::all_of(recs.begin(), recs.end(), [](const SolutionRecord& r) {
    return r.norm_alpha == 0.0 && r.energy == 0.0;
  });
  if (recs.size() < 2) return;

  report.negativity_verdict =
      std::all_of(recs.begin(), recs.end(), [](const SolutionRecord& r) { return r.energy < 0.0; });

  bool strictly = true;
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const double prev = recs[i - 1].energy;
    const double next = recs[i].energy;
    const double margin = kStrictDecrease * std::max(std::abs(prev), std::abs(next));
    if (!(next < prev - margin)) strictly = false;
  }
  report.monotonicity_verdict = strictly;

  // Norms read toward mu -> 0+, i.e. from the last record back to the first.
  bool shrinking = true;
  for (std::size_t i = 1; i < recs.size(); ++i) {
    if (recs[i - 1].norm_alpha > recs[i].norm_alpha * (1.0 + kStrictDecrease)) shrinking = false;
  }
  const double smallest_mu_norm = recs.front().norm_alpha;
  const double largest_mu_norm = recs.back().norm_alpha;
  const double c = embedding_constant(problem.alpha(), problem.T());
  const double r = sublevel_radius(problem.gamma_bar, problem.alpha(), problem.T());
  const double ceiling = 0.1 * problem.gamma_bar * std::sqrt(r) / c;
  report.norm_decay_verdict = shrinking && smallest_mu_norm < kNormDecayFraction * largest_mu_norm &&
                              smallest_mu_norm < ceiling;
}

SweepReport run_sweep(const Problem& problem, const SolverConfig& cfg, double mu_min, double mu_max, int count) {
  if (count < 4) throw ValidationError("sweep count must be at least 4, got " + std::to_string(count));
  cfg.validate();
  const double limit = problem.conditions.mu_star;
  if (!(mu_min > 0.0) || !(mu_max > mu_min) || !(mu_max < limit)) {
    std::ostringstream msg;
    msg.precision(7);
    msg << "mu range [" << mu_min << ", " << mu_max << "] is outside the admissible interval (0, " << limit << ")";
    throw HypothesisError(msg.str());
  }

  SweepReport report;
  report.conditions = problem.conditions;
  report.mu_values = geometric_grid(mu_min, mu_max, count);
  report.records.reserve(report.mu_values.size());
  for (double mu : report.mu_values) report.records.push_back(minimize(problem, mu, cfg));
  compute_verdicts(report, problem);
  return report;
}

SweepReport run_sweep(const ProblemSpec& spec, double mu_min, double mu_max, int count) {
  if (count < 4) throw ValidationError("sweep count must be at least 4, got " + std::to_string(count));
  const Problem problem = spec.build();
  return run_sweep(problem, spec.solver, mu_min, mu_max, count);
}

RayScan ray_scan(const Problem& problem, double mu, const Coefficients& direction, const std::vector<double>& taus) {
  problem.space->check_length(direction);
  if (direction.norm() == 0.0) throw ValidationError("ray_scan direction must be nonzero");
  if (taus.size() < 3) throw ValidationError("ray_scan needs at least three tau values");
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (!(taus[i] > 0.0) || (i > 0 && !(taus[i] > taus[i - 1])))
      throw ValidationError("ray_scan tau values must be positive and increasing");
  }

  RayScan scan;
  for (double tau : taus) {
    const Coefficients u = tau * direction;
    scan.points.push_back({tau, eval_J(u, mu, problem.nonlinearity, *problem.energy)});
  }

  // Least squares slope of log|J| on log tau over the tail.
  const std::size_t first = scan.points.size() - 3;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  bool usable = true;
  for (std::size_t i = first; i < scan.points.size(); ++i) {
    const double magnitude = std::abs(scan.points[i].energy);
    if (!(magnitude > 0.0) || !std::isfinite(magnitude)) usable = false;
    const double x = std::log(scan.points[i].tau);
    const double y = usable ? std::log(magnitude) : 0.0;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  scan.fitted_exponent = usable ? (3.0 * sxy - sx * sy) / (3.0 * sxx - sx * sx) : 0.0;

  const double last = scan.points.back().energy;
  scan.leading_sign = last > 0.0 ? 1.0 : (last < 0.0 ? -1.0 : 0.0);
  scan.expected_exponent = problem.nonlinearity.growth_exponent();
  scan.unbounded_below = mu > 0.0 && scan.expected_exponent > 2.0 && scan.leading_sign < 0.0 &&
                         scan.fitted_exponent >= scan.expected_exponent - kExponentSlack;
  return scan;
}

}  // namespace fracvar
