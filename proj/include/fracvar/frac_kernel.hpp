#pragma once

#include <span>
#include <vector>

namespace fracvar {

/// Uniform partition t_i = i*T/n of [0, T].
class Grid {
 public:
  Grid(double T, int n);

  double length() const { return T_; }
  int intervals() const { return n_; }
  int size() const { return n_ + 1; }
  double step() const { return T_ / n_; }
  double node(int i) const;
  std::vector<double> nodes() const;

  bool operator==(const Grid&) const = default;

 private:
  double T_;
  int n_;
};

/// Samples of a function at the nodes of a grid.
class GridFunction {
 public:
  GridFunction(Grid grid, std::vector<double> values);
  static GridFunction zeros(const Grid& grid);

  template <typename Fn>
  static GridFunction sample(const Grid& grid, Fn&& fn) {
    std::vector<double> v(grid.size());
    for (int i = 0; i < grid.size(); ++i) v[i] = fn(grid.node(i));
    return GridFunction(grid, std::move(v));
  }

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double operator[](int i) const { return values_[i]; }
  double front() const { return values_.front(); }
  double back() const { return values_.back(); }

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// Order of a Riemann-Liouville integral, gamma > 0.
class IntegrationOrder {
 public:
  explicit IntegrationOrder(double gamma);
  double value() const { return gamma_; }

 private:
  double gamma_;
};

/// Order of a Caputo derivative: 1/2 < alpha <= 1 and |cos(pi alpha)| >= 1e-6.
class DerivativeOrder {
 public:
  explicit DerivativeOrder(double alpha);
  double value() const { return alpha_; }
  /// |cos(pi alpha)|, bounded away from zero by construction.
  double abs_cos() const;

 private:
  double alpha_;
};

inline constexpr double kMinAbsCos = 1e-6;

/// (1/Gamma(g)) int_0^t (t-s)^(g-1) u(s) ds at every node.
///
/// Product trapezoidal rule: the kernel is integrated exactly against the
/// piecewise-linear interpolant of u. Exact for linear u. O(n^2).
GridFunction rl_left_integral(const GridFunction& u, IntegrationOrder gamma);

/// (1/Gamma(g)) int_t^T (s-t)^(g-1) u(s) ds at every node.
GridFunction rl_right_integral(const GridFunction& u, IntegrationOrder gamma);

/// Left Caputo derivative of u, given samples of u'. For alpha = 1 returns u'.
GridFunction caputo_left(const GridFunction& u_prime, DerivativeOrder alpha);

/// Right Caputo derivative of u, given samples of u'. For alpha = 1 returns -u'.
GridFunction caputo_right(const GridFunction& u_prime, DerivativeOrder alpha);

/// Composite trapezoid of the samples over the grid.
double trapezoid(const GridFunction& u);

}  // namespace fracvar
