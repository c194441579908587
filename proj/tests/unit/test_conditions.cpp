#include <doctest.h>

#include <cmath>
#include <random>

#include "fracvar/conditions.hpp"
#include "fracvar/errors.hpp"

using namespace fracvar;

namespace {

const auto kLinear = Nonlinearity::table({-1.0, 1.0}, {-1.0, 1.0});  // f = xi, F = xi^2 / 2

// Closed forms of the power-sum example, written out from scratch.
double oracle_gamma_bar(double r, double s) { return std::pow(s * (2 - r) / (r * (s - 2)), 1 / (s - r)); }
double oracle_ratio(double r, double s, double g) { return g * g / (std::pow(g, r) / r + std::pow(g, s) / s); }

}  // namespace

TEST_CASE("kappa") {
  CHECK(kappa_alpha(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(kappa_alpha(0.75, 1.0) - 1.88355108088749789) < 1e-12);
  CHECK(kappa_alpha(0.75, 2.0) == doctest::Approx(std::pow(2.0, 1.5) * kappa_alpha(0.75, 1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(kappa_alpha(0.5, 1.0), DomainError);
}

TEST_CASE("sup ratio on closed-form data") {
  const SupRatio z = sup_ratio(Nonlinearity::zero());
  CHECK(std::isinf(z.value));
  CHECK(z.gamma_bar == doctest::Approx(kProbeMin));

  const SupRatio lin = sup_ratio(kLinear);
  CHECK(lin.value == doctest::Approx(2.0).epsilon(1e-9));

  const SupRatio ps = sup_ratio(Nonlinearity::power_sum(1.5, 3.0));
  CHECK(std::abs(ps.value - 1.0) <= 1e-6);
  CHECK(std::abs(ps.gamma_bar - 1.0) <= 1e-6);
  CHECK(ps.location == SupLocation::interior);
  for (const auto& [g, ratio] : ps.probes) CHECK(ratio <= ps.value * (1 + 1e-12));
}

TEST_CASE("generic optimizer agrees with the power-sum closed form") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dr(1.05, 1.95), ds(2.05, 6.0), da(0.55, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double r = dr(rng), s = ds(rng), a = da(rng);
    const auto nl = Nonlinearity::power_sum(r, s);
    const double g = oracle_gamma_bar(r, s);
    const SupRatio sup = sup_ratio(nl);
    CHECK(std::abs(sup.value / oracle_ratio(r, s, g) - 1.0) <= 1e-6);
    CHECK(std::abs(sup.gamma_bar / g - 1.0) <= 1e-6);
    CHECK(std::abs(example_gamma_bar(r, s) / g - 1.0) <= 1e-14);
    CHECK(std::abs(mu_star(nl, a, 1.0) / example_mu_bound(r, s, a, 1.0) - 1.0) <= 1e-6);
    CHECK(std::abs(2 * nl.F(g) - g * nl.f(g)) <= 1e-10);
  }
  CHECK_THROWS_AS(example_gamma_bar(2.5, 3.0), DomainError);
}

TEST_CASE("mu star and the admissible interval") {
  CHECK(std::isinf(mu_star(Nonlinearity::zero(), 0.75, 1.0)));
  CHECK(std::abs(mu_star(Nonlinearity::power_sum(1.5, 3.0), 0.75, 1.0) - 0.530912068245) <= 1e-9);
  CHECK(mu_star(kLinear, 1.0, 1.0) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(example_mu_bound(1.5, 3.0, 0.75, 1.0) == doctest::Approx(1.0 / kappa_alpha(0.75, 1.0)).epsilon(1e-14));

  const Interval ps = lambda_interval(Nonlinearity::power_sum(1.5, 3.0), 0.75, 1.0);
  CHECK(ps.left == 0.0);
  CHECK(ps.right == doctest::Approx(mu_star(Nonlinearity::power_sum(1.5, 3.0), 0.75, 1.0)).epsilon(1e-9));
  CHECK(std::isinf(lambda_interval(Nonlinearity::zero(), 0.75, 1.0).right));
  CHECK(std::isinf(lambda_interval(Nonlinearity::sqrt_plus(), 0.75, 1.0).right));
  CHECK_THROWS_AS(lambda_interval(Nonlinearity::affine_power(4.0), 0.75, 1.0), HypothesisError);
  CHECK_THROWS_AS(lambda_interval(kLinear, 0.75, 1.0), HypothesisError);
}

TEST_CASE("sqrt_plus supremum sits at the upper edge") {
  const SupRatio s = sup_ratio(Nonlinearity::sqrt_plus());
  CHECK(s.location == SupLocation::upper_edge);
  CHECK(s.value == doctest::Approx(1.5 * std::sqrt(kProbeMax)).epsilon(1e-6));
}

TEST_CASE("mu star is nonincreasing in T") {
  const auto nl = Nonlinearity::power_sum(1.4, 3.5);
  double previous = INFINITY;
  for (double T : {0.5, 1.0, 1.5, 2.0, 4.0}) {
    const double m = mu_star(nl, 0.8, T);
    CHECK(m <= previous);
    previous = m;
  }
}

TEST_CASE("limit probes") {
  const LimitProbes sp = limit_probes(Nonlinearity::sqrt_plus(), 0.75, 1.0);
  CHECK(sp.s0 == TriState::holds);
  const LimitProbes lin = limit_probes(kLinear, 0.75, 1.0);
  CHECK(lin.s0 == TriState::fails);
  CHECK(lin.zero == TriState::fails);
  const LimitProbes ps = limit_probes(Nonlinearity::power_sum(1.5, 3.0), 0.75, 1.0);
  CHECK(ps.zero == TriState::holds);
  CHECK(ps.s0 == TriState::holds);
  CHECK(ps.sinf == TriState::fails);
  CHECK(ps.zero_sequence.size() == 8);
  // xi^2 / F = 3 xi^(1/2) / 2 grows without bound
  CHECK(sp.sinf == TriState::holds);
}

TEST_CASE("S_inf holding implies S_G' on the probe grid") {
  for (const auto& nl : {Nonlinearity::sqrt_plus(), Nonlinearity::power_sum(1.5, 3.0), Nonlinearity::zero()}) {
    const ConditionReport r = evaluate_conditions(nl, 0.75, 1.0);
    if (r.sinf_holds == TriState::holds) CHECK(r.sg_prime_holds == TriState::holds);
  }
}

TEST_CASE("phi(r) bound") {
  CHECK(phi_r_upper_bound(1.0, Nonlinearity::zero(), 0.75, 1.0) == 0.0);
  CHECK(phi_r_upper_bound(1.0, Nonlinearity::power_sum(1.5, 3.0), 0.75, 1.0) ==
        doctest::Approx(kappa_alpha(0.75, 1.0)).epsilon(1e-12));
  const auto nl = Nonlinearity::power_sum(1.5, 3.0);
  const double ms = mu_star(nl, 0.75, 1.0);
  for (double mu : {0.1, 0.5, 0.53, 0.54, 1.0}) {
    CHECK((phi_r_upper_bound(1.0, nl, 0.75, 1.0) < 1.0 / mu) == (mu < ms));
  }
}

TEST_CASE("condition report for the power-sum example") {
  const ConditionReport r = evaluate_conditions(Nonlinearity::power_sum(1.5, 3.0), 0.75, 1.0);
  CHECK(r.mu_star == doctest::Approx(r.sup_ratio / r.kappa_alpha).epsilon(1e-15));
  CHECK(r.sg_holds == TriState::fails);
  CHECK(r.zero_holds == TriState::holds);
  CHECK(r.nonnegative);
  CHECK(r.vanishes_at_zero);
  REQUIRE(r.lambda_right_endpoint.has_value());
  CHECK(*r.lambda_right_endpoint == doctest::Approx(r.mu_star).epsilon(1e-9));

  const ConditionReport z = evaluate_conditions(Nonlinearity::zero(), 0.75, 1.0);
  CHECK(std::isinf(z.mu_star));
  CHECK(z.sg_holds == TriState::holds);
}
