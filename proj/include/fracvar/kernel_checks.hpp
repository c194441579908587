#pragma once

#include <string>
#include <vector>

namespace fracvar {

struct KernelCheck {
  std::string name;
  double value = 0.0;      ///< measured error or order
  double threshold = 0.0;  ///< pass when value <= threshold (or >= for orders)
  bool higher_is_better = false;
  bool passed = false;
};

/// Closed-form and identity checks of the fractional operators at (alpha, T, n):
/// power rules at t = T (relative error), integration by parts, the two
/// composition identities, linearity, and the observed order for u = t^2.
std::vector<KernelCheck> kernel_verify(double alpha, double T, int n);

}  // namespace fracvar
