#include "fracvar/solver.hpp"

#include <array>
#include <cmath>
#include <random>
#include <string>

#include "fracvar/errors.hpp"

namespace fracvar {

void SolverConfig::validate() const {
  if (!(grad_tol > 0.0)) throw ValidationError("solver.grad_tol must be positive");
  if (max_iters < 1) throw ValidationError("solver.max_iters must be at least 1");
  if (restarts < 1) throw ValidationError("solver.restarts must be at least 1");
  if (!(armijo_c > 0.0 && armijo_c < 1.0)) throw ValidationError("solver.armijo_c must lie in (0, 1)");
  if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0))
    throw ValidationError("solver.backtrack_factor must lie in (0, 1)");
  if (!(sublevel_margin > 0.0 && sublevel_margin < 1.0))
    throw ValidationError("solver.sublevel_margin must lie in (0, 1)");
}

Problem Problem::build(const SpaceConfig& config, Nonlinearity nl, std::optional<double> gamma_bar) {
  auto space = std::make_shared<const SpaceModel>(config);
  auto energy = std::make_shared<const EnergyAssembly>(space);
  ConditionReport conditions = evaluate_conditions(nl, config.alpha, config.T);
  const double radius = gamma_bar.value_or(conditions.gamma_bar.value_or(1.0));
  if (!(radius > 0.0)) throw DomainError("gamma_bar must be positive");
  return Problem{std::move(space), std::move(energy), std::move(nl), std::move(conditions), radius};
}

double sublevel_radius(double gamma_bar, double alpha, double T) {
  if (!(gamma_bar > 0.0)) throw DomainError("sublevel_radius: gamma_bar must be positive");
  const double c = embedding_constant(alpha, T);
  return DerivativeOrder(alpha).abs_cos() / (c * c) * gamma_bar * gamma_bar;
}

namespace {

struct Evaluator {
  const Problem& problem;
  double mu;

  EnergyParts parts(const Coefficients& u) const { return eval_parts(u, mu, problem.nonlinearity, *problem.energy); }
  Coefficients grad(const Coefficients& u) const { return grad_J(u, mu, problem.nonlinearity, *problem.energy); }
};

}  // namespace

DescentResult descend(const Problem& problem, double mu, const Coefficients& start, const SolverConfig& cfg) {
  cfg.validate();
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw ValidationError("mu must be a non-negative real");
  problem.space->check_length(start);

  const Evaluator eval{problem, mu};
  const double ceiling = cfg.sublevel_margin * sublevel_radius(problem.gamma_bar, problem.alpha(), problem.T());
  const Eigen::LLT<Eigen::MatrixXd> metric(problem.energy->symmetric());

  auto pull_inside = [&](Coefficients& u, double phi) {
    if (phi >= ceiling) {
      u *= std::sqrt(ceiling / phi);
      return true;
    }
    return false;
  };

  DescentResult out;
  out.coeffs = start;
  EnergyParts current = eval.parts(out.coeffs);
  if (pull_inside(out.coeffs, current.phi)) current = eval.parts(out.coeffs);
  out.energy_history.push_back(current.energy);
  out.phi_history.push_back(current.phi);

  Coefficients grad = eval.grad(out.coeffs);
  for (out.iterations = 0; out.iterations < cfg.max_iters; ++out.iterations) {
    out.grad_norm = grad.norm();
    if (out.grad_norm <= cfg.grad_tol && current.phi < ceiling) {
      out.converged = true;
      break;
    }
    const Coefficients direction = -0.5 * metric.solve(grad);
    const double slope = grad.dot(direction);
    if (!(slope < 0.0)) break;

    bool accepted = false;
    for (double step = 1.0; step > 1e-20; step *= cfg.backtrack_factor) {
      Coefficients trial = out.coeffs + step * direction;
      EnergyParts trial_parts = eval.parts(trial);
      if (pull_inside(trial, trial_parts.phi)) trial_parts = eval.parts(trial);
      if (trial_parts.energy <= current.energy + cfg.armijo_c * step * slope) {
        out.coeffs = std::move(trial);
        current = trial_parts;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    out.energy_history.push_back(current.energy);
    out.phi_history.push_back(current.phi);
    grad = eval.grad(out.coeffs);
  }
  out.grad_norm = grad.norm();
  out.converged = out.grad_norm <= cfg.grad_tol && current.phi < ceiling;
  out.energy = current.energy;
  return out;
}

namespace {

Eigen::VectorXd assemble_map(const Grid& grid, double alpha, const Eigen::VectorXd& left,
                             const Eigen::VectorXd& right, const Eigen::VectorXd& values, double mu,
                             const Nonlinearity& nl) {
  const GridFunction left_fn(grid, std::vector<double>(left.begin(), left.end()));
  const GridFunction right_fn(grid, std::vector<double>(right.begin(), right.end()));
  Eigen::VectorXd map(grid.size());
  if (alpha == 1.0) {
    map = left - right;
  } else {
    const IntegrationOrder order(1.0 - alpha);
    const GridFunction a = rl_left_integral(left_fn, order);
    const GridFunction b = rl_right_integral(right_fn, order);
    for (int i = 0; i < grid.size(); ++i) map(i) = a[i] - b[i];
  }

  double cumulative = 0.0;
  double previous = mu * nl.f(values(0));
  for (int i = 1; i < grid.size(); ++i) {
    const double next = mu * nl.f(values(i));
    cumulative += 0.5 * grid.step() * (previous + next);
    previous = next;
    map(i) += cumulative;
  }
  return map;
}

double constancy_deviation(const Eigen::VectorXd& map) {
  constexpr int kSkip = 3;
  const Eigen::Index count = map.size() - 2 * kSkip;
  const auto interior = map.segment(kSkip, count);
  const double mean = interior.mean();
  return (interior.array() - mean).abs().maxCoeff();
}

}  // namespace

Eigen::VectorXd weak_form_map(const Problem& problem, double mu, const Coefficients& coeffs) {
  const SpaceModel& space = *problem.space;
  const Eigen::VectorXd values = space.basis().transpose() * coeffs;
  return assemble_map(space.grid(), problem.alpha(), space.caputo_left_of(coeffs), space.caputo_right_of(coeffs),
                      values, mu, problem.nonlinearity);
}

double weak_residual(const Problem& problem, double mu, const Coefficients& coeffs) {
  return constancy_deviation(weak_form_map(problem, mu, coeffs));
}

double weak_residual(const GridFunction& u, const GridFunction& u_prime, double alpha, double mu,
                     const Nonlinearity& nl) {
  if (u.grid().size() != u_prime.grid().size()) throw ValidationError("weak_residual: u and u' grids differ");
  const DerivativeOrder order(alpha);
  const GridFunction left = caputo_left(u_prime, order);
  const GridFunction right = caputo_right(u_prime, order);
  auto to_vec = [](const GridFunction& g) {
    const auto v = g.values();
    return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())));
  };
  return constancy_deviation(assemble_map(u.grid(), alpha, to_vec(left), to_vec(right), to_vec(u), mu, nl));
}

double residual_tolerance(const Problem& problem) {
  return kResidualConstant * std::pow(problem.space->grid().step(), 1.0 - problem.alpha());
}

SolutionRecord make_record(const Problem& problem, double mu, const Coefficients& coeffs) {
  SolutionRecord rec;
  rec.coeffs = coeffs;
  rec.mu = mu;
  const Norms norms = problem.space->norms(coeffs);
  rec.norm_alpha = norms.alpha;
  rec.norm_inf = norms.inf;
  const EnergyParts parts = eval_parts(coeffs, mu, problem.nonlinearity, *problem.energy);
  rec.phi = parts.phi;
  rec.psi = parts.psi;
  rec.energy = parts.energy;
  rec.residual = weak_residual(problem, mu, coeffs);
  rec.grad_norm = grad_J(coeffs, mu, problem.nonlinearity, *problem.energy).norm();
  rec.nontrivial = rec.norm_alpha > 1e-6 && rec.energy < 0.0;
  rec.gamma_bar = problem.gamma_bar;
  rec.r_radius = sublevel_radius(problem.gamma_bar, problem.alpha(), problem.T());
  return rec;
}

SolutionRecord minimize(const Problem& problem, double mu, const SolverConfig& cfg) {
  cfg.validate();
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw ValidationError("mu must be a non-negative real");

  const SpaceModel& space = *problem.space;
  constexpr std::array<double, 3> kAmplitudes = {1e-3, 1e-2, 1e-1};
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);

  std::vector<Candidate> candidates;
  std::optional<DescentResult> best;
  int best_start = 0;
  double best_norm = 0.0;

  auto better = [](const Candidate& a, double best_energy, double norm_best) {
    const double scale = std::max(std::abs(a.energy), std::abs(best_energy));
    if (std::abs(a.energy - best_energy) <= 1e-10 * scale) return a.norm_alpha < norm_best;
    return a.energy < best_energy;
  };

  for (int start_index = 0; start_index < cfg.restarts; ++start_index) {
    Coefficients start = Coefficients::Zero(space.modes());
    double amplitude = 0.0;
    if (start_index > 0) {
      amplitude = kAmplitudes[(start_index - 1) % kAmplitudes.size()];
      for (Eigen::Index k = 0; k < start.size(); ++k) start(k) = uniform(rng);
      start *= amplitude / space.norms(start).alpha;
    }
    DescentResult run = descend(problem, mu, start, cfg);

    Candidate cand;
    cand.start_amplitude = amplitude;
    cand.energy = run.energy;
    cand.norm_alpha = space.norms(run.coeffs).alpha;
    cand.grad_norm = run.grad_norm;
    cand.iterations = run.iterations;
    cand.converged = run.converged;
    candidates.push_back(cand);

    if (!best || better(cand, best->energy, best_norm)) {
      best = std::move(run);
      best_start = start_index;
      best_norm = cand.norm_alpha;
    }
  }

  SolutionRecord rec = make_record(problem, mu, best->coeffs);
  rec.converged = best->converged;
  rec.restarts_used = cfg.restarts;
  rec.best_start = best_start;
  rec.candidates = std::move(candidates);
  return rec;
}

CertificateSet certify(const SolutionRecord& sol, const Problem& problem) {
  CertificateSet out;
  out.inf_norm_bound = sol.norm_inf <= problem.gamma_bar + 1e-6;
  const auto& cond = problem.conditions;
  const bool below_threshold = sol.mu > 0.0 && sol.mu < cond.mu_star;
  const bool nontrivial_hypothesis = cond.zero_holds == TriState::holds || !cond.vanishes_at_zero;
  if (below_threshold && nontrivial_hypothesis) out.negative_energy = sol.energy < 0.0;
  out.residual_ok = sol.residual <= residual_tolerance(problem);
  out.interior = sol.phi < sublevel_radius(problem.gamma_bar, problem.alpha(), problem.T());
  return out;
}

}  // namespace fracvar
