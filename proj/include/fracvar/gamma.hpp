#pragma once

namespace fracvar {

/// Euler Gamma function on (0, 171].
///
/// Lanczos approximation (g = 7, nine coefficients) with the reflection
/// formula below 1/2. Relative error is below 1e-13 on (0, 20].
/// Throws DomainError outside (0, 171].
double euler_gamma(double x);

}  // namespace fracvar

namespace fracvar {

/// Riemann zeta function for s < 0, s = 0 and s > 1.
///
/// Euler-Maclaurin summation on s > 1; the functional equation maps
/// s <= 0 onto that range. Throws DomainError on (0, 1].
double riemann_zeta(double s);

}  // namespace fracvar
