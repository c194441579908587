#pragma once

// Classical second-order finite-difference Newton solver for
//   u'' + lambda f(u) = 0 on (0, T),  u(0) = u(T) = 0,
// used as an independent reference for the alpha = 1 case.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace fracvar::testing {

struct FdSolution {
  std::vector<double> u;   // n + 1 node values
  std::vector<double> du;  // second-order derivative samples
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

inline FdSolution fd_newton(const std::function<double(double)>& f, double lambda, double T, int n,
                            double initial_amplitude) {
  const double h = T / n;
  const int m = n - 1;  // interior unknowns
  std::vector<double> u(m);
  for (int i = 0; i < m; ++i) u[i] = initial_amplitude * std::sin(std::numbers::pi * (i + 1) * h / T);

  auto fprime = [&](double x) {
    const double d = 1e-7 * std::max(std::abs(x), 1e-12);
    return (f(x + d) - f(x - d)) / (2 * d);
  };
  auto residual = [&](const std::vector<double>& v, std::vector<double>& r) {
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
      const double left = i > 0 ? v[i - 1] : 0.0;
      const double right = i + 1 < m ? v[i + 1] : 0.0;
      r[i] = (left - 2 * v[i] + right) / (h * h) + lambda * f(v[i]);
      worst = std::max(worst, std::abs(r[i]));
    }
    return worst;
  };

  FdSolution out;
  std::vector<double> r(m), diag(m), delta(m), c(m), trial(m), rt(m);
  double norm = residual(u, r);
  const double scale = std::max(1e-300, initial_amplitude / (h * h));
  for (out.iterations = 0; out.iterations < 100; ++out.iterations) {
    if (norm <= 1e-12 * scale) break;
    // Thomas algorithm on J delta = -r, J = tridiag(1, -2 + h^2 lambda f', 1) / h^2
    for (int i = 0; i < m; ++i) diag[i] = (-2.0 + h * h * lambda * fprime(u[i])) / (h * h);
    const double off = 1.0 / (h * h);
    c[0] = off / diag[0];
    delta[0] = -r[0] / diag[0];
    for (int i = 1; i < m; ++i) {
      const double denom = diag[i] - off * c[i - 1];
      c[i] = off / denom;
      delta[i] = (-r[i] - off * delta[i - 1]) / denom;
    }
    for (int i = m - 2; i >= 0; --i) delta[i] -= c[i] * delta[i + 1];

    double step = 1.0;
    for (; step > 1e-8; step *= 0.5) {
      bool positive = true;
      for (int i = 0; i < m; ++i) {
        trial[i] = u[i] + step * delta[i];
        positive = positive && trial[i] > 0.0;
      }
      if (!positive) continue;
      const double tn = residual(trial, rt);
      if (tn < norm || step < 1e-3) {
        u.swap(trial);
        r.swap(rt);
        norm = tn;
        break;
      }
    }
  }
  out.residual = norm;
  out.converged = norm <= 1e-10 * scale;
  out.u.assign(n + 1, 0.0);
  for (int i = 0; i < m; ++i) out.u[i + 1] = u[i];
  out.du.assign(n + 1, 0.0);
  for (int i = 1; i < n; ++i) out.du[i] = (out.u[i + 1] - out.u[i - 1]) / (2 * h);
  out.du[0] = (-3 * out.u[0] + 4 * out.u[1] - out.u[2]) / (2 * h);
  out.du[n] = (3 * out.u[n] - 4 * out.u[n - 1] + out.u[n - 2]) / (2 * h);
  return out;
}

}  // namespace fracvar::testing
