#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fracvar/errors.hpp"
#include "fracvar/gamma.hpp"

using namespace fracvar;

TEST_CASE("gamma at closed-form points") {
  CHECK(euler_gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(euler_gamma(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
  CHECK(euler_gamma(2.5) == doctest::Approx(0.75 * std::sqrt(std::numbers::pi)).epsilon(1e-13));
  CHECK(euler_gamma(5.0) == doctest::Approx(24.0).epsilon(1e-13));
}

TEST_CASE("gamma agrees with libm on (0, 20]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(1e-3, 20.0);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double x = dist(rng);
    worst = std::max(worst, std::abs(euler_gamma(x) / std::tgamma(x) - 1.0));
  }
  for (double x : {1e-6, 0.1, 0.25, 0.75, 1.25, 19.999, 20.0}) {
    worst = std::max(worst, std::abs(euler_gamma(x) / std::tgamma(x) - 1.0));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("gamma domain") {
  CHECK_THROWS_AS(euler_gamma(0.0), DomainError);
  CHECK_THROWS_AS(euler_gamma(-1.5), DomainError);
  CHECK_THROWS_AS(euler_gamma(171.5), DomainError);
  CHECK(std::isfinite(euler_gamma(171.0)));
}

TEST_CASE("zeta values") {
  const double pi = std::numbers::pi;
  CHECK(riemann_zeta(2.0) == doctest::Approx(pi * pi / 6).epsilon(1e-13));
  CHECK(riemann_zeta(4.0) == doctest::Approx(std::pow(pi, 4) / 90).epsilon(1e-13));
  CHECK(riemann_zeta(0.0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(riemann_zeta(-1.0) == doctest::Approx(-1.0 / 12).epsilon(1e-12));
  CHECK(riemann_zeta(-3.0) == doctest::Approx(1.0 / 120).epsilon(1e-12));
  // mpmath: zeta(-0.5), zeta(1.5)
  CHECK(riemann_zeta(-0.5) == doctest::Approx(-0.207886224977354566).epsilon(1e-12));
  CHECK(riemann_zeta(1.5) == doctest::Approx(2.61237534868548835).epsilon(1e-12));
  CHECK_THROWS_AS(riemann_zeta(0.5), DomainError);
  CHECK_THROWS_AS(riemann_zeta(1.0), DomainError);
}
