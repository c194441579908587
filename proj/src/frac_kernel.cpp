#include "fracvar/frac_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fracvar/errors.hpp"
#include "fracvar/gamma.hpp"

namespace fracvar {

Grid::Grid(double T, int n) : T_(T), n_(n) {
  if (!(T > 0.0) || !std::isfinite(T)) throw ValidationError("Grid: T must be positive and finite");
  if (n < 16) throw ValidationError("Grid: need at least 16 intervals, got " + std::to_string(n));
}

double Grid::node(int i) const {
  if (i == n_) return T_;
  return T_ * static_cast<double>(i) / static_cast<double>(n_);
}

std::vector<double> Grid::nodes() const {
  std::vector<double> t(size());
  for (int i = 0; i <= n_; ++i) t[i] = node(i);
  return t;
}

GridFunction::GridFunction(Grid grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_.size())
    throw ValidationError("GridFunction: " + std::to_string(values_.size()) + " values for " +
                          std::to_string(grid_.size()) + " nodes");
  for (double v : values_)
    if (!std::isfinite(v)) throw ValidationError("GridFunction: non-finite sample");
}

GridFunction GridFunction::zeros(const Grid& grid) { return GridFunction(grid, std::vector<double>(grid.size(), 0.0)); }

IntegrationOrder::IntegrationOrder(double gamma) : gamma_(gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw DomainError("integration order must be positive, got " + std::to_string(gamma));
}

DerivativeOrder::DerivativeOrder(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.5 && alpha <= 1.0))
    throw DomainError("derivative order must lie in (1/2, 1], got " + std::to_string(alpha));
  if (abs_cos() < kMinAbsCos)
    throw DomainError("derivative order too close to 1/2: |cos(pi alpha)| < 1e-6");
}

double DerivativeOrder::abs_cos() const { return std::abs(std::cos(std::numbers::pi * alpha_)); }

namespace {

// Product-trapezoid weights on a uniform grid, scaled by Gamma(g+2)/h^g:
//   I(t_i) = h^g/Gamma(g+2) * (first(i) u_0 + sum_{j=1}^{i-1} inner(i-j) u_j + u_i).
// With p = g+1:
//   first(i) = (i-1)^p - (i-1-g) i^g
//   inner(m) = (m+1)^p - 2 m^p + (m-1)^p
// Both are evaluated through expm1/log1p to avoid cancellation at large i.
struct ProductWeights {
  std::vector<double> first;  // indexed by i = 1..n
  std::vector<double> inner;  // indexed by m = 1..n-1
  double scale;
};

ProductWeights product_weights(int n, double h, double g) {
  const double p = g + 1.0;
  ProductWeights w;
  w.first.assign(n + 1, 0.0);
  w.inner.assign(n + 1, 0.0);
  for (int i = 1; i <= n; ++i) {
    const double x = static_cast<double>(i);
    if (i == 1) {
      w.first[i] = g;
    } else {
      // x^p [ (1-1/x)^p - 1 + p/x ]
      w.first[i] = std::pow(x, p) * (std::expm1(p * std::log1p(-1.0 / x)) + p / x);
    }
  }
  for (int m = 1; m < n; ++m) {
    const double x = static_cast<double>(m);
    if (m == 1) {
      w.inner[m] = std::pow(2.0, p) - 2.0;
    } else {
      // x^p [ ((1+1/x)^p - 1) + ((1-1/x)^p - 1) ]
      w.inner[m] = std::pow(x, p) * (std::expm1(p * std::log1p(1.0 / x)) + std::expm1(p * std::log1p(-1.0 / x)));
    }
  }
  w.scale = std::pow(h, g) / euler_gamma(g + 2.0);
  return w;
}

std::vector<double> left_product_rule(std::span<const double> u, double h, double g) {
  const int n = static_cast<int>(u.size()) - 1;
  const ProductWeights w = product_weights(n, h, g);
  std::vector<double> out(u.size(), 0.0);
  for (int i = 1; i <= n; ++i) {
    double acc = w.first[i] * u[0] + u[i];
    for (int j = 1; j < i; ++j) acc += w.inner[i - j] * u[j];
    out[i] = w.scale * acc;
  }
  return out;
}

std::vector<double> reversed(std::span<const double> v) { return {v.rbegin(), v.rend()}; }

}  // namespace

GridFunction rl_left_integral(const GridFunction& u, IntegrationOrder gamma) {
  return GridFunction(u.grid(), left_product_rule(u.values(), u.grid().step(), gamma.value()));
}

GridFunction rl_right_integral(const GridFunction& u, IntegrationOrder gamma) {
  // t -> T - t maps the right operator onto the left one
  auto out = left_product_rule(reversed(u.values()), u.grid().step(), gamma.value());
  std::reverse(out.begin(), out.end());
  return GridFunction(u.grid(), std::move(out));
}

GridFunction caputo_left(const GridFunction& u_prime, DerivativeOrder alpha) {
  if (alpha.value() == 1.0) return u_prime;
  return rl_left_integral(u_prime, IntegrationOrder(1.0 - alpha.value()));
}

GridFunction caputo_right(const GridFunction& u_prime, DerivativeOrder alpha) {
  std::vector<double> out;
  if (alpha.value() == 1.0) {
    out.assign(u_prime.values().begin(), u_prime.values().end());
  } else {
    auto integral = rl_right_integral(u_prime, IntegrationOrder(1.0 - alpha.value()));
    out.assign(integral.values().begin(), integral.values().end());
  }
  for (double& v : out) v = -v;
  return GridFunction(u_prime.grid(), std::move(out));
}

double trapezoid(const GridFunction& u) {
  const auto v = u.values();
  double acc = 0.5 * (v.front() + v.back());
  for (std::size_t i = 1; i + 1 < v.size(); ++i) acc += v[i];
  return acc * u.grid().step();
}

}  // namespace fracvar
