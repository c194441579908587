#pragma once

#include <Eigen/Dense>
#include <memory>

#include "fracvar/nonlinearity.hpp"
#include "fracvar/space.hpp"

namespace fracvar {

/// Quadratic part of the energy in coefficient space.
///
/// M(j, k) = -int DL_j DR_k dt by the model's corrected quadrature, and
/// Phi(u) = c^T M_s c with M_s = (M + M^T)/2. Construction verifies
/// c^T M_s c >= |cos(pi alpha)| c^T G c on 100 random vectors, G being the
/// Gram matrix of the left Caputo images, and throws ResolutionError if the
/// grid is too coarse for that to hold.
class EnergyAssembly {
 public:
  explicit EnergyAssembly(std::shared_ptr<const SpaceModel> space);

  const SpaceModel& space() const { return *space_; }
  std::shared_ptr<const SpaceModel> space_ptr() const { return space_; }
  const Eigen::MatrixXd& bilinear() const { return bilinear_; }
  const Eigen::MatrixXd& symmetric() const { return symmetric_; }
  const Eigen::MatrixXd& gram() const { return gram_; }

 private:
  std::shared_ptr<const SpaceModel> space_;
  Eigen::MatrixXd bilinear_;
  Eigen::MatrixXd symmetric_;
  Eigen::MatrixXd gram_;
};

double eval_phi(const Coefficients& u, const EnergyAssembly& asm_);
/// -int DL(u) DR(u) dt evaluated from the synthesized images, without the matrix.
double eval_phi_direct(const Coefficients& u, const EnergyAssembly& asm_);
double eval_psi(const Coefficients& u, const Nonlinearity& nl, const EnergyAssembly& asm_);
double eval_J(const Coefficients& u, double mu, const Nonlinearity& nl, const EnergyAssembly& asm_);

/// Gateaux derivative of J_mu in the direction of every basis mode.
Coefficients grad_J(const Coefficients& u, double mu, const Nonlinearity& nl, const EnergyAssembly& asm_);

/// Phi, Psi and J at one point, sharing the synthesis.
struct EnergyParts {
  double phi = 0.0;
  double psi = 0.0;
  double energy = 0.0;
};
EnergyParts eval_parts(const Coefficients& u, double mu, const Nonlinearity& nl, const EnergyAssembly& asm_);

}  // namespace fracvar
