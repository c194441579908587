#include "fracvar/energy.hpp"

#include <random>
#include <stdexcept>

#include "fracvar/errors.hpp"

namespace fracvar {

EnergyAssembly::EnergyAssembly(std::shared_ptr<const SpaceModel> space) : space_(std::move(space)) {
  if (!space_) throw ValidationError("EnergyAssembly: null space");
  bilinear_ = space_->mixed_matrix();
  symmetric_ = 0.5 * (bilinear_ + bilinear_.transpose());
  gram_ = space_->alpha_gram();

  const double abs_cos = space_->order().abs_cos();
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  Eigen::VectorXd x(space_->modes());
  for (int trial = 0; trial < 100; ++trial) {
    for (Eigen::Index k = 0; k < x.size(); ++k) x(k) = uniform(rng);
    const double quad = x.dot(symmetric_ * x);
    const double floor = abs_cos * x.dot(gram_ * x);
    if (quad < floor - 1e-10 * (1.0 + floor))
      throw ResolutionError("coercivity check failed: increase n relative to k_max");
  }
}

double eval_phi(const Coefficients& u, const EnergyAssembly& asm_) {
  asm_.space().check_length(u);
  return u.dot(asm_.symmetric() * u);
}

double eval_phi_direct(const Coefficients& u, const EnergyAssembly& asm_) {
  return asm_.space().mixed_pairing(u, u);
}

namespace {

double psi_of_values(const Eigen::VectorXd& values, const Nonlinearity& nl, const Eigen::VectorXd& w) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) acc += w(i) * nl.F(values(i));
  return acc;
}

}  // namespace

double eval_psi(const Coefficients& u, const Nonlinearity& nl, const EnergyAssembly& asm_) {
  const auto& space = asm_.space();
  space.check_length(u);
  return psi_of_values(space.basis().transpose() * u, nl, space.weights());
}

EnergyParts eval_parts(const Coefficients& u, double mu, const Nonlinearity& nl, const EnergyAssembly& asm_) {
  if (!(mu >= 0.0)) throw ValidationError("mu must be non-negative");
  EnergyParts parts;
  parts.phi = eval_phi(u, asm_);
  parts.psi = eval_psi(u, nl, asm_);
  parts.energy = parts.phi - mu * parts.psi;
  return parts;
}

double eval_J(const Coefficients& u, double mu, const Nonlinearity& nl, const EnergyAssembly& asm_) {
  return eval_parts(u, mu, nl, asm_).energy;
}

Coefficients grad_J(const Coefficients& u, double mu, const Nonlinearity& nl, const EnergyAssembly& asm_) {
  if (!(mu >= 0.0)) throw ValidationError("mu must be non-negative");
  const auto& space = asm_.space();
  space.check_length(u);
  Coefficients grad = 2.0 * (asm_.symmetric() * u);
  if (mu == 0.0) return grad;
  const Eigen::VectorXd values = space.basis().transpose() * u;
  Eigen::VectorXd weighted(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) weighted(i) = space.weights()(i) * nl.f(values(i));
  grad.noalias() -= mu * (space.basis() * weighted);
  return grad;
}

}  // namespace fracvar
