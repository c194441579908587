#include "fracvar/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fracvar/errors.hpp"

namespace fracvar {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos(double x) {
  // Gamma(x) for x >= 0.5
  const double z = x - 1.0;
  double sum = kLanczosCoeffs[0];
  for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) sum += kLanczosCoeffs[k] / (z + static_cast<double>(k));
  const double t = z + kLanczosG + 0.5;
  // split the power so t^(z+1/2) does not overflow near x = 171
  const double half_power = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_power * (half_power * std::exp(-t)) * sum;
}

}  // namespace

double euler_gamma(double x) {
  if (!(x > 0.0) || x > 171.0) throw DomainError("euler_gamma: argument " + std::to_string(x) + " outside (0, 171]");
  if (x < 0.5) {
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos(1.0 - x));
  }
  return lanczos(x);
}

namespace {

double zeta_above_one(double s) {
  // Euler-Maclaurin with N = 12 and seven Bernoulli corrections
  constexpr int kN = 12;
  constexpr std::array<double, 7> kBernoulli = {1.0 / 6.0,  -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
                                                5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0};
  const double n = kN;
  double acc = 0.0;
  for (int k = 1; k < kN; ++k) acc += std::pow(static_cast<double>(k), -s);
  acc += std::pow(n, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(n, -s);
  double factorial = 1.0;
  double rising = 1.0;
  for (int j = 1; j <= static_cast<int>(kBernoulli.size()); ++j) {
    rising *= j == 1 ? s : (s + 2 * j - 3) * (s + 2 * j - 2);
    factorial *= (2.0 * j - 1.0) * (2.0 * j);
    acc += kBernoulli[j - 1] / factorial * rising * std::pow(n, -s - 2 * j + 1);
  }
  return acc;
}

}  // namespace

double riemann_zeta(double s) {
  if (s == 0.0) return -0.5;
  if (s > 1.0) return zeta_above_one(s);
  if (s < 0.0) {
    if (1.0 - s > 171.0) throw DomainError("riemann_zeta: argument too negative");
    return std::pow(2.0, s) * std::pow(std::numbers::pi, s - 1.0) * std::sin(0.5 * std::numbers::pi * s) *
           euler_gamma(1.0 - s) * zeta_above_one(1.0 - s);
  }
  throw DomainError("riemann_zeta: argument " + std::to_string(s) + " in (0, 1] not supported");
}

}  // namespace fracvar
