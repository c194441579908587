#include "fracvar/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "fracvar/errors.hpp"
#include "fracvar/frac_kernel.hpp"
#include "fracvar/gamma.hpp"

namespace fracvar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kScanPerDecade = 10000;
constexpr int kDecades = 12;
constexpr int kScanPoints = kScanPerDecade * kDecades + 1;
constexpr int kScanPerProbe = kScanPerDecade * kDecades / (kProbeCount - 1);
constexpr int kLinearPrefix = 100;
constexpr int kProbeThinning = 50;

double probe_gamma(int i) { return std::pow(10.0, -6.0 + 12.0 * i / (kProbeCount - 1)); }
double scan_xi(int j) { return std::pow(10.0, -6.0 + static_cast<double>(j) / kScanPerDecade); }

// Running maximum of F over [-xi_j, xi_j] on the dense log scan.
class PotentialEnvelope {
 public:
  explicit PotentialEnvelope(const Nonlinearity& nl) : nl_(nl), envelope_(kScanPoints) {
    double running = 0.0;  // F(0) = 0
    for (int j = 1; j <= kLinearPrefix; ++j) {
      const double xi = kProbeMin * j / kLinearPrefix;
      running = std::max({running, nl.F(xi), nl.F(-xi)});
    }
    for (int j = 0; j < kScanPoints; ++j) {
      const double xi = scan_xi(j);
      running = std::max({running, nl.F(xi), nl.F(-xi)});
      envelope_[j] = running;
    }
  }

  double at_probe(int i) const { return envelope_[i * kScanPerProbe]; }

  double at(double gamma) const {
    const double position = (std::log10(gamma) + 6.0) * kScanPerDecade;
    const int j = std::clamp(static_cast<int>(std::floor(position)), 0, kScanPoints - 1);
    return std::max({envelope_[j], nl_.F(gamma), nl_.F(-gamma)});
  }

 private:
  const Nonlinearity& nl_;
  std::vector<double> envelope_;
};

double ratio(double gamma, double denominator) { return denominator > 0.0 ? gamma * gamma / denominator : kInf; }

// Golden-section maximization of fn over log(gamma) in [lo, hi].
double golden_argmax(const std::function<double(double)>& fn, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = std::log(lo);
  double b = std::log(hi);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fn(std::exp(c));
  double fd = fn(std::exp(d));
  while (b - a > 1e-8) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fn(std::exp(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fn(std::exp(d));
    }
  }
  return std::exp(0.5 * (a + b));
}

SupRatio search(const std::function<double(int)>& denominator_at_probe,
                const std::function<double(double)>& denominator) {
  SupRatio out;
  std::vector<double> ratios(kProbeCount);
  for (int i = 0; i < kProbeCount; ++i) {
    const double gamma = probe_gamma(i);
    ratios[i] = ratio(gamma, denominator_at_probe(i));
    if (i % kProbeThinning == 0) out.probes.emplace_back(gamma, ratios[i]);
  }

  for (int i = 0; i < kProbeCount; ++i) {
    if (std::isinf(ratios[i])) {
      out.value = kInf;
      out.gamma_bar = probe_gamma(i);
      return out;
    }
  }

  const int best = static_cast<int>(std::distance(ratios.begin(), std::max_element(ratios.begin(), ratios.end())));
  out.value = ratios[best];
  out.gamma_bar = probe_gamma(best);
  constexpr double kEdgeSlack = 1e-9;
  if (best == 0 && ratios[0] > ratios[1] * (1.0 + kEdgeSlack)) {
    out.location = SupLocation::lower_edge;
    return out;
  }
  if (best == kProbeCount - 1 && ratios[best] > ratios[best - 1] * (1.0 + kEdgeSlack)) {
    out.location = SupLocation::upper_edge;
    return out;
  }

  const double lo = probe_gamma(std::max(best - 1, 0));
  const double hi = probe_gamma(std::min(best + 1, kProbeCount - 1));
  auto objective = [&](double gamma) { return ratio(gamma, denominator(gamma)); };
  const double refined = golden_argmax(objective, lo, hi);
  const double refined_value = objective(refined);
  if (refined_value > out.value) {
    out.value = refined_value;
    out.gamma_bar = refined;
  }
  out.probes.emplace_back(out.gamma_bar, out.value);
  std::sort(out.probes.begin(), out.probes.end());
  return out;
}

TriState classify_divergent(const std::vector<double>& seq, double threshold) {
  bool increasing = true;
  bool non_increasing = true;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    if (!(seq[k] > seq[k - 1])) increasing = false;
    if (seq[k] > seq[k - 1] * (1.0 + 1e-12) + 1e-300) non_increasing = false;
  }
  if (increasing && seq.back() > threshold) return TriState::holds;
  if (non_increasing) return TriState::fails;
  return TriState::inconclusive;
}

}  // namespace

std::string_view to_string(TriState state) {
  switch (state) {
    case TriState::holds: return "holds";
    case TriState::fails: return "fails";
    case TriState::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

TriState tri_state_from_string(std::string_view text) {
  if (text == "holds") return TriState::holds;
  if (text == "fails") return TriState::fails;
  if (text == "inconclusive") return TriState::inconclusive;
  throw ValidationError("unknown tri-state '" + std::string(text) + "'");
}

std::string_view to_string(SupLocation where) {
  switch (where) {
    case SupLocation::interior: return "interior";
    case SupLocation::lower_edge: return "lower_edge";
    case SupLocation::upper_edge: return "upper_edge";
  }
  return "interior";
}

SupLocation sup_location_from_string(std::string_view text) {
  if (text == "interior") return SupLocation::interior;
  if (text == "lower_edge") return SupLocation::lower_edge;
  if (text == "upper_edge") return SupLocation::upper_edge;
  throw ValidationError("unknown sup location '" + std::string(text) + "'");
}

double kappa_alpha(double alpha, double T) {
  const DerivativeOrder order(alpha);
  if (!(T > 0.0)) throw DomainError("kappa_alpha: T must be positive");
  const double g = euler_gamma(alpha);
  return std::pow(T, 2.0 * alpha) / (g * g * order.abs_cos() * (2.0 * alpha - 1.0));
}

SupRatio sup_ratio(const Nonlinearity& nl) {
  const PotentialEnvelope envelope(nl);
  return search([&](int i) { return envelope.at_probe(i); }, [&](double gamma) { return envelope.at(gamma); });
}

SupRatio sup_ratio_nonnegative(const Nonlinearity& nl) {
  auto potential = [&](double gamma) { return nl.F(gamma); };
  return search([&](int i) { return potential(probe_gamma(i)); }, potential);
}

double max_potential(const Nonlinearity& nl, double gamma) {
  if (!(gamma > 0.0)) throw DomainError("max_potential: gamma must be positive");
  constexpr int kSamples = 20000;
  double running = 0.0;
  for (int j = 1; j <= kSamples; ++j) {
    const double xi = gamma * j / kSamples;
    running = std::max({running, nl.F(xi), nl.F(-xi)});
  }
  return running;
}

double mu_star(const Nonlinearity& nl, double alpha, double T) {
  const SupRatio sup = sup_ratio(nl);
  if (std::isinf(sup.value) || sup.location != SupLocation::interior) return kInf;
  return sup.value / kappa_alpha(alpha, T);
}

Interval lambda_interval(const Nonlinearity& nl, double alpha, double T) {
  if (!nl.nonnegative())
    throw HypothesisError("admissible interval requires a nonnegative nonlinearity; " +
                          std::string(to_string(nl.kind())) + " takes negative values");
  for (int i = 0; i < kProbeCount; ++i) {
    const double gamma = probe_gamma(i);
    if (nl.f(gamma) < 0.0 || nl.f(-gamma) < 0.0)
      throw HypothesisError("admissible interval requires f >= 0; f is negative near " + std::to_string(gamma));
  }
  const SupRatio sup = sup_ratio_nonnegative(nl);
  Interval out;
  out.right = std::isinf(sup.value) || sup.location != SupLocation::interior ? kInf
                                                                              : sup.value / kappa_alpha(alpha, T);
  return out;
}

LimitProbes limit_probes(const Nonlinearity& nl, double alpha, double T) {
  const double kappa = kappa_alpha(alpha, T);
  LimitProbes out;
  for (int k = 1; k <= 8; ++k) {
    const double small = std::pow(10.0, -k);
    out.s0_sequence.push_back(nl.f(small) / small);
    out.zero_sequence.push_back(nl.F(small) / (small * small));
    const double large = std::pow(10.0, k);
    const double potential = nl.F(large);
    out.sinf_sequence.push_back(potential > 0.0 ? large * large / potential : kInf);
  }
  out.s0 = classify_divergent(out.s0_sequence, kDivergenceThreshold);
  out.zero = classify_divergent(out.zero_sequence, kDivergenceThreshold);

  const auto& seq = out.sinf_sequence;
  bool non_decreasing = true;
  bool non_increasing = true;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    if (seq[k] < seq[k - 1] * (1.0 - 1e-12)) non_decreasing = false;
    if (seq[k] > seq[k - 1] * (1.0 + 1e-12)) non_increasing = false;
  }
  if (non_decreasing && seq.back() > kappa)
    out.sinf = TriState::holds;
  else if (non_increasing && seq.back() < kappa)
    out.sinf = TriState::fails;
  else
    out.sinf = TriState::inconclusive;
  return out;
}

double example_gamma_bar(double r, double s) {
  if (!(1.0 < r && r < 2.0 && 2.0 < s)) throw DomainError("example closed forms need 1 < r < 2 < s");
  return std::pow(s * (2.0 - r) / (r * (s - 2.0)), 1.0 / (s - r));
}

double example_mu_bound(double r, double s, double alpha, double T) {
  const double g = example_gamma_bar(r, s);
  return r * s * std::pow(g, 2.0 - r) / (kappa_alpha(alpha, T) * (s + r * std::pow(g, s - r)));
}

double phi_r_upper_bound(double gamma_bar, const Nonlinearity& nl, double alpha, double T) {
  return kappa_alpha(alpha, T) * max_potential(nl, gamma_bar) / (gamma_bar * gamma_bar);
}

ConditionReport evaluate_conditions(const Nonlinearity& nl, double alpha, double T) {
  ConditionReport report;
  report.kappa_alpha = kappa_alpha(alpha, T);
  report.nonnegative = nl.nonnegative();
  report.vanishes_at_zero = nl.vanishes_at_zero();

  const SupRatio sup = sup_ratio(nl);
  report.sup_ratio = sup.value;
  report.gamma_bar = sup.gamma_bar;
  report.sup_location = sup.location;
  report.probes = sup.probes;
  report.mu_star = std::isinf(sup.value) || sup.location != SupLocation::interior ? kInf
                                                                                   : sup.value / report.kappa_alpha;

  auto compare = [&](const SupRatio& s) {
    if (std::isinf(s.value)) return TriState::holds;
    if (std::abs(s.value - report.kappa_alpha) <= 1e-8 * report.kappa_alpha) return TriState::inconclusive;
    if (s.value > report.kappa_alpha) return TriState::holds;
    // a ratio still growing at a grid edge may exceed kappa beyond the grid
    return s.location == SupLocation::interior ? TriState::fails : TriState::inconclusive;
  };
  report.sg_holds = compare(sup);
  if (nl.nonnegative()) {
    report.sg_prime_holds = compare(sup_ratio_nonnegative(nl));
    report.lambda_right_endpoint = lambda_interval(nl, alpha, T).right;
  }

  const LimitProbes limits = limit_probes(nl, alpha, T);
  report.s0_holds = limits.s0;
  report.sinf_holds = limits.sinf;
  report.zero_holds = limits.zero;
  report.phi_r_bound = phi_r_upper_bound(sup.gamma_bar, nl, alpha, T);
  return report;
}

}  // namespace fracvar
