#include "fracvar/kernel_checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "fracvar/frac_kernel.hpp"
#include "fracvar/gamma.hpp"

namespace fracvar {

namespace {

KernelCheck upper(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, false, value <= threshold};
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

double max_abs_diff(const GridFunction& a, const GridFunction& b) {
  double out = 0.0;
  for (int i = 0; i < a.grid().size(); ++i) out = std::max(out, std::abs(a[i] - b[i]));
  return out;
}

}  // namespace

std::vector<KernelCheck> kernel_verify(double alpha, double T, int n) {
  const DerivativeOrder order(alpha);
  const Grid grid(T, n);
  const double g = alpha < 1.0 ? 1.0 - alpha : 0.5;
  const IntegrationOrder gamma(g);
  const double pi = std::numbers::pi;
  std::vector<KernelCheck> out;

  const auto one = GridFunction::sample(grid, [](double) { return 1.0; });
  const auto t = GridFunction::sample(grid, [](double x) { return x; });
  const auto mirrored = GridFunction::sample(grid, [T](double x) { return T - x; });

  out.push_back(upper("rl_left(1) at T", rel(rl_left_integral(one, gamma).back(), std::pow(T, g) / euler_gamma(g + 1)),
                      1e-3));
  out.push_back(upper("rl_left(t) at T",
                      rel(rl_left_integral(t, gamma).back(), std::pow(T, g + 1) / euler_gamma(g + 2)), 1e-3));
  out.push_back(upper("rl_right(T-t) at 0",
                      rel(rl_right_integral(mirrored, gamma).front(), std::pow(T, g + 1) / euler_gamma(g + 2)), 1e-3));

  const double caputo_ref = std::pow(T, 1 - alpha) / euler_gamma(2 - alpha);
  out.push_back(upper("caputo_left(t) at T", rel(caputo_left(one, order).back(), caputo_ref), 1e-3));
  const auto minus_one = GridFunction::sample(grid, [](double) { return -1.0; });
  out.push_back(upper("caputo_right(T-t) at 0", rel(caputo_right(minus_one, order).front(), caputo_ref), 1e-3));

  // Integration by parts with a smooth pair.
  const auto u = GridFunction::sample(grid, [&](double x) { return std::sin(pi * x / T) + x / T; });
  const auto v = GridFunction::sample(grid, [&](double x) { return std::cos(2 * pi * x / T) * std::exp(-x / T); });
  auto product = [&](const GridFunction& a, const GridFunction& b) {
    std::vector<double> p(grid.size());
    for (int i = 0; i < grid.size(); ++i) p[i] = a[i] * b[i];
    return trapezoid(GridFunction(grid, std::move(p)));
  };
  const double ibp = std::abs(product(rl_left_integral(u, gamma), v) - product(rl_right_integral(v, gamma), u));
  out.push_back(upper("integration by parts", ibp, 5e-3));

  // Composition with the Caputo derivative: I^a(D^a u) = u - u(0), mirrored for the right side.
  const auto w = GridFunction::sample(grid, [&](double x) { return std::sin(1.3 * pi * x / T) + 0.5 * x * x; });
  const auto w_prime = GridFunction::sample(
      grid, [&](double x) { return 1.3 * pi / T * std::cos(1.3 * pi * x / T) + x; });
  const double w0 = w.front();
  const double wT = w.back();
  const auto shifted_left = GridFunction::sample(grid, [&](double x) { return std::sin(1.3 * pi * x / T) + 0.5 * x * x - w0; });
  const auto shifted_right =
      GridFunction::sample(grid, [&](double x) { return std::sin(1.3 * pi * x / T) + 0.5 * x * x - wT; });
  if (alpha < 1.0) {
    const IntegrationOrder a(alpha);
    out.push_back(upper("composition left", max_abs_diff(rl_left_integral(caputo_left(w_prime, order), a), shifted_left),
                        1e-2));
    out.push_back(upper("composition right",
                        max_abs_diff(rl_right_integral(caputo_right(w_prime, order), a), shifted_right), 1e-2));
  }

  // Linearity.
  std::vector<double> combo(grid.size());
  for (int i = 0; i < grid.size(); ++i) combo[i] = 2.0 * u[i] - 3.0 * v[i];
  const auto lhs = rl_left_integral(GridFunction(grid, combo), gamma);
  const auto iu = rl_left_integral(u, gamma);
  const auto iv = rl_left_integral(v, gamma);
  double lin = 0.0;
  for (int i = 0; i < grid.size(); ++i) lin = std::max(lin, std::abs(lhs[i] - (2.0 * iu[i] - 3.0 * iv[i])));
  out.push_back(upper("linearity", lin, 1e-12));

  // Observed order for t^2 over n in {64, 128, 256, 512}.
  constexpr std::array<int, 4> kSizes = {64, 128, 256, 512};
  std::array<double, 4> errs{};
  for (std::size_t j = 0; j < kSizes.size(); ++j) {
    const Grid coarse(T, kSizes[j]);
    const auto sq = GridFunction::sample(coarse, [](double x) { return x * x; });
    errs[j] = std::abs(rl_left_integral(sq, gamma).back() - 2.0 * std::pow(T, g + 2) / euler_gamma(g + 3));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t j = 0; j < kSizes.size(); ++j) {
    const double x = std::log(T / kSizes[j]);
    const double y = std::log(errs[j]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
  out.push_back({"order for t^2", slope, 1.5, true, slope >= 1.5});
  return out;
}

}  // namespace fracvar
