#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fracvar {

enum class NonlinearityKind { power_sum, affine_power, sqrt_plus, zero, table };

std::string_view to_string(NonlinearityKind kind);
NonlinearityKind nonlinearity_kind_from_string(std::string_view tag);

/// Autonomous datum f of the boundary-value problem together with its
/// potential F(xi) = int_0^xi f.
///
///  power_sum(r, s):  f = u^(r-1) + u^(s-1) for u >= 0, 0 otherwise
///  affine_power(q):  f = 1 + |u|^(q-2) u
///  sqrt_plus:        f = sqrt(u) for u >= 0, 0 otherwise
///  zero:             f = 0
///  table:            piecewise-linear through the knots, extended linearly
///                    from the end segments
class Nonlinearity {
 public:
  static Nonlinearity power_sum(double r, double s);
  static Nonlinearity affine_power(double q);
  static Nonlinearity sqrt_plus();
  static Nonlinearity zero();
  static Nonlinearity table(std::vector<double> xs, std::vector<double> ys);

  NonlinearityKind kind() const { return kind_; }
  /// Parameters: {r, s} for power_sum, {q} for affine_power, empty otherwise.
  const std::vector<double>& params() const { return params_; }
  const std::vector<double>& knots_x() const { return xs_; }
  const std::vector<double>& knots_y() const { return ys_; }

  double f(double xi) const;
  double F(double xi) const;

  /// Adaptive-Simpson antiderivative of f on [0, xi], independent of F.
  double numeric_potential(double xi) const;
  /// max over probes of |F - numeric| / (1 + |F|).
  double potential_discrepancy(const std::vector<double>& probes) const;

  bool nonnegative() const { return nonnegative_; }
  bool vanishes_at_zero() const { return vanishes_at_zero_; }
  /// Growth exponent of F at +infinity when it is known in closed form (s, q, 1.5, ...).
  double growth_exponent() const;

 private:
  Nonlinearity(NonlinearityKind kind, std::vector<double> params);
  void finalize_flags();
  // table: index j of the segment [x_{j-1}, x_j] used for xi, end segments extended
  std::size_t segment_index(double xi) const;
  std::size_t segment_of_zero() const;

  NonlinearityKind kind_;
  std::vector<double> params_;
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<double> knot_potential_;  // F at each knot, cached at construction
  bool nonnegative_ = false;
  bool vanishes_at_zero_ = false;
};

/// Adaptive Simpson quadrature of fn on [a, b] to absolute tolerance tol.
template <typename Fn>
double adaptive_simpson(Fn&& fn, double a, double b, double tol, int max_depth = 50);

}  // namespace fracvar

#include "fracvar/detail/adaptive_simpson.ipp"
