#include <algorithm>
#include <array>
#include <memory>
#include <random>

#include "fracvar/energy.hpp"
#include "fracvar/errors.hpp"
#include "fracvar/space.hpp"

namespace fracvar {

void audit_element(const SpaceModel& model, const Coefficients& coeffs, double phi, AuditReport& report) {
  const Norms n = model.norms(coeffs);
  const double abs_cos = model.order().abs_cos();
  const double sq = n.alpha * n.alpha;
  const double tol = 1e-8 * (1.0 + sq);
  const double bound_a = model.l2_embedding_constant() * n.alpha;
  const double bound_b = model.embedding_constant() * n.alpha;

  bool offending = false;
  if (n.l2 > bound_a + tol) {
    ++report.violations_a;
    offending = true;
  }
  if (n.inf > bound_b + tol) {
    ++report.violations_b;
    offending = true;
  }
  if (phi < abs_cos * sq - tol || phi > sq / abs_cos + tol) {
    ++report.violations_c;
    offending = true;
  }
  if (offending) report.offenders.push_back(coeffs);

  if (n.alpha > 0.0) {
    report.tightest_ratio_a = std::max(report.tightest_ratio_a, n.l2 / bound_a);
    report.tightest_ratio_b = std::max(report.tightest_ratio_b, n.inf / bound_b);
    const double lower = phi / (abs_cos * sq);
    const double upper = phi * abs_cos / sq;
    report.tightest_ratio_c_lower = std::min(report.tightest_ratio_c_lower, lower);
    report.tightest_ratio_c_upper = std::max(report.tightest_ratio_c_upper, upper);
  }
  ++report.trials;
}

AuditReport audit_embeddings(const SpaceModel& model, int trials, std::uint64_t seed) {
  if (trials < 1) throw ValidationError("audit_embeddings: trials must be at least 1");
  const EnergyAssembly energy(std::make_shared<const SpaceModel>(model));
  AuditReport report;
  report.seed = seed;

  constexpr std::array<double, 3> kScales = {0.1, 1.0, 10.0};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  Coefficients coeffs(model.modes());
  for (int trial = 0; trial < trials; ++trial) {
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) coeffs(k) = uniform(rng);
    const double norm = model.norms(coeffs).alpha;
    if (norm > 0.0) coeffs *= kScales[trial % kScales.size()] / norm;
    audit_element(model, coeffs, eval_phi(coeffs, energy), report);
  }
  return report;
}

}  // namespace fracvar
