#include "fracvar/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracvar/errors.hpp"

namespace fracvar {

std::string_view to_string(NonlinearityKind kind) {
  switch (kind) {
    case NonlinearityKind::power_sum: return "power_sum";
    case NonlinearityKind::affine_power: return "affine_power";
    case NonlinearityKind::sqrt_plus: return "sqrt_plus";
    case NonlinearityKind::zero: return "zero";
    case NonlinearityKind::table: return "table";
  }
  return "unknown";
}

NonlinearityKind nonlinearity_kind_from_string(std::string_view tag) {
  for (auto kind : {NonlinearityKind::power_sum, NonlinearityKind::affine_power, NonlinearityKind::sqrt_plus,
                    NonlinearityKind::zero, NonlinearityKind::table}) {
    if (to_string(kind) == tag) return kind;
  }
  throw ValidationError("unknown nonlinearity kind '" + std::string(tag) + "'");
}

Nonlinearity::Nonlinearity(NonlinearityKind kind, std::vector<double> params)
    : kind_(kind), params_(std::move(params)) {}

Nonlinearity Nonlinearity::power_sum(double r, double s) {
  if (!(r > 1.0) || !(s > 1.0) || !std::isfinite(r) || !std::isfinite(s))
    throw DomainError("power_sum: exponents must exceed 1");
  Nonlinearity nl(NonlinearityKind::power_sum, {r, s});
  nl.finalize_flags();
  return nl;
}

Nonlinearity Nonlinearity::affine_power(double q) {
  if (!(q > 2.0) || !std::isfinite(q)) throw DomainError("affine_power: q must exceed 2");
  Nonlinearity nl(NonlinearityKind::affine_power, {q});
  nl.finalize_flags();
  return nl;
}

Nonlinearity Nonlinearity::sqrt_plus() {
  Nonlinearity nl(NonlinearityKind::sqrt_plus, {});
  nl.finalize_flags();
  return nl;
}

Nonlinearity Nonlinearity::zero() {
  Nonlinearity nl(NonlinearityKind::zero, {});
  nl.finalize_flags();
  return nl;
}

namespace {

// Composite Simpson with panel doubling until two refinements agree to 1e-10.
template <typename Fn>
double refined_simpson(Fn&& fn, double a, double b) {
  double previous = std::numeric_limits<double>::quiet_NaN();
  for (int panels = 2; panels <= (1 << 20); panels *= 2) {
    const double h = (b - a) / panels;
    double acc = fn(a) + fn(b);
    for (int i = 1; i < panels; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * fn(a + i * h);
    const double value = acc * h / 3.0;
    if (std::abs(value - previous) < 1e-10) return value;
    previous = value;
  }
  return previous;
}

}  // namespace

Nonlinearity Nonlinearity::table(std::vector<double> xs, std::vector<double> ys) {
  if (xs.size() < 2 || xs.size() != ys.size()) throw ValidationError("table: need at least two (x, y) knots");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) throw ValidationError("table: non-finite knot");
    if (i > 0 && !(xs[i] > xs[i - 1])) throw ValidationError("table: knots must be strictly increasing");
  }
  Nonlinearity nl(NonlinearityKind::table, {});
  nl.xs_ = std::move(xs);
  nl.ys_ = std::move(ys);
  // cumulative potential from the first knot; F(0) is subtracted on evaluation
  nl.knot_potential_.assign(nl.xs_.size(), 0.0);
  for (std::size_t i = 1; i < nl.xs_.size(); ++i) {
    nl.knot_potential_[i] =
        nl.knot_potential_[i - 1] + refined_simpson([&nl](double x) { return nl.f(x); }, nl.xs_[i - 1], nl.xs_[i]);
  }
  nl.finalize_flags();
  return nl;
}

double Nonlinearity::f(double xi) const {
  switch (kind_) {
    case NonlinearityKind::power_sum:
      return xi >= 0.0 ? std::pow(xi, params_[0] - 1.0) + std::pow(xi, params_[1] - 1.0) : 0.0;
    case NonlinearityKind::affine_power:
      return 1.0 + std::pow(std::abs(xi), params_[0] - 2.0) * xi;
    case NonlinearityKind::sqrt_plus:
      return xi >= 0.0 ? std::sqrt(xi) : 0.0;
    case NonlinearityKind::zero:
      return 0.0;
    case NonlinearityKind::table: {
      const std::size_t j = segment_index(xi);
      const double slope = (ys_[j] - ys_[j - 1]) / (xs_[j] - xs_[j - 1]);
      if (j == segment_of_zero()) {
        // intercept form keeps f(xi)/xi accurate for small xi
        const double at_zero = ys_[j - 1] - slope * xs_[j - 1];
        return at_zero + slope * xi;
      }
      return ys_[j - 1] + slope * (xi - xs_[j - 1]);
    }
  }
  return 0.0;
}

double Nonlinearity::F(double xi) const {
  switch (kind_) {
    case NonlinearityKind::power_sum: {
      if (xi <= 0.0) return 0.0;
      const double r = params_[0];
      const double s = params_[1];
      return std::pow(xi, r) / r + std::pow(xi, s) / s;
    }
    case NonlinearityKind::affine_power: {
      const double q = params_[0];
      return xi + std::pow(std::abs(xi), q) / q;
    }
    case NonlinearityKind::sqrt_plus:
      return xi > 0.0 ? 2.0 / 3.0 * xi * std::sqrt(xi) : 0.0;
    case NonlinearityKind::zero:
      return 0.0;
    case NonlinearityKind::table: {
      // f is linear between knots and on the extensions, so the partial
      // segment integrates exactly by the trapezoid rule
      if (segment_index(xi) == segment_of_zero()) return 0.5 * xi * (f(0.0) + f(xi));
      auto cumulative = [this](double x) {
        const auto upper = std::upper_bound(xs_.begin(), xs_.end(), x);
        std::size_t j = static_cast<std::size_t>(std::distance(xs_.begin(), upper));
        if (j == 0) j = 1;
        const std::size_t base = j - 1;
        return knot_potential_[base] + 0.5 * (x - xs_[base]) * (ys_[base] + f(x));
      };
      return cumulative(xi) - cumulative(0.0);
    }
  }
  return 0.0;
}

std::size_t Nonlinearity::segment_index(double xi) const {
  const auto upper = std::upper_bound(xs_.begin(), xs_.end(), xi);
  const auto j = static_cast<std::size_t>(std::distance(xs_.begin(), upper));
  return std::clamp<std::size_t>(j, 1, xs_.size() - 1);
}

std::size_t Nonlinearity::segment_of_zero() const { return segment_index(0.0); }

double Nonlinearity::numeric_potential(double xi) const {
  auto integrand = [this](double s) { return f(s); };
  return adaptive_simpson(integrand, 0.0, xi, 1e-12 * (1.0 + std::abs(xi)));
}

double Nonlinearity::potential_discrepancy(const std::vector<double>& probes) const {
  double worst = 0.0;
  for (double xi : probes) {
    const double closed = F(xi);
    worst = std::max(worst, std::abs(closed - numeric_potential(xi)) / (1.0 + std::abs(closed)));
  }
  return worst;
}

double Nonlinearity::growth_exponent() const {
  switch (kind_) {
    case NonlinearityKind::power_sum: return std::max(params_[0], params_[1]);
    case NonlinearityKind::affine_power: return params_[0];
    case NonlinearityKind::sqrt_plus: return 1.5;
    case NonlinearityKind::zero: return 0.0;
    case NonlinearityKind::table: return 2.0;
  }
  return 0.0;
}

void Nonlinearity::finalize_flags() {
  switch (kind_) {
    case NonlinearityKind::power_sum:
    case NonlinearityKind::sqrt_plus:
    case NonlinearityKind::zero:
      nonnegative_ = true;
      break;
    case NonlinearityKind::affine_power:
      nonnegative_ = false;  // 1 + |u|^(q-2) u < 0 for u < -1
      break;
    case NonlinearityKind::table: {
      const bool knots_ok = std::all_of(ys_.begin(), ys_.end(), [](double y) { return y >= 0.0; });
      const std::size_t last = xs_.size() - 1;
      const double left_slope = (ys_[1] - ys_[0]) / (xs_[1] - xs_[0]);
      const double right_slope = (ys_[last] - ys_[last - 1]) / (xs_[last] - xs_[last - 1]);
      nonnegative_ = knots_ok && left_slope <= 0.0 && right_slope >= 0.0;
      break;
    }
  }
  vanishes_at_zero_ = f(0.0) == 0.0;
}

}  // namespace fracvar
