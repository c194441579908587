#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "fracvar/errors.hpp"
#include "fracvar/report.hpp"
#include "fracvar/sweep.hpp"

using namespace fracvar;

namespace {

ProblemSpec example_spec(int n = 1024, int k = 64) {
  ProblemSpec spec;
  spec.alpha = 0.75;
  spec.T = 1.0;
  spec.n = n;
  spec.k_max = k;
  spec.nonlinearity.kind = "power_sum";
  spec.nonlinearity.r = 1.5;
  spec.nonlinearity.s = 3.0;
  return spec;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text) lines += c == '\n';
  return lines;
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("fracvar_test_" + name);
}

}  // namespace

TEST_CASE("config parsing") {
  const auto spec = ProblemSpec::from_json_text(
      R"({"alpha": 0.8, "T": 2, "n": 512, "k_max": 32,
          "nonlinearity": {"kind": "table", "xs": [0, 1], "ys": [1, 2]},
          "solver": {"restarts": 3, "seed": 9}})");
  CHECK(spec.alpha == 0.8);
  CHECK(spec.T == 2.0);
  CHECK(spec.nonlinearity.xs.size() == 2);
  CHECK(spec.solver.restarts == 3);
  CHECK(spec.solver.seed == 9);
  CHECK(spec.solver.grad_tol == SolverConfig{}.grad_tol);

  const auto again = ProblemSpec::from_json_text(spec.to_json_text());
  CHECK(again.to_json_text() == spec.to_json_text());

  CHECK_THROWS_AS(ProblemSpec::from_json_text("{"), ValidationError);
  CHECK_THROWS_AS(ProblemSpec::from_json_text(R"({"alpha": 0.8})"), ValidationError);
  CHECK_THROWS_AS(ProblemSpec::from_json_text(
                      R"({"alpha": 0.8, "T": 1, "n": 512, "k_max": 32, "nonlinearity": {"kind": "zero"}, "beta": 1})"),
                  ValidationError);
  CHECK_THROWS_AS(ProblemSpec::from_json_text(
                      R"({"alpha": 0.8, "T": 1, "n": 512, "k_max": 32, "nonlinearity": {"kind": "cubic"}})"),
                  ValidationError);
  CHECK_THROWS_AS(ProblemSpec::from_json_text(
                      R"({"alpha": 0.3, "T": 1, "n": 512, "k_max": 32, "nonlinearity": {"kind": "zero"}})"),
                  DomainError);
  CHECK_THROWS_AS(ProblemSpec::load("/nonexistent/dir/problem.json"), IoError);
}

TEST_CASE("geometric grid") {
  const auto g = geometric_grid(0.05, 0.5, 8);
  CHECK(g.size() == 8);
  CHECK(g.front() == 0.05);
  CHECK(g.back() == 0.5);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] / g[i - 1] == doctest::Approx(std::pow(10.0, 1.0 / 7)));
}

TEST_CASE("sweep preconditions") {
  const ProblemSpec spec = example_spec(256, 32);
  CHECK_THROWS_AS(run_sweep(spec, 0.05, 0.5, 1), ValidationError);
  CHECK_THROWS_AS(run_sweep(spec, 0.05, 0.5, 3), ValidationError);
  try {
    run_sweep(spec, 0.6, 0.9, 8);
    FAIL("expected a hypothesis error");
  } catch (const HypothesisError& e) {
    CHECK(std::string(e.what()).find("admissible interval (0, 0.5309121)") != std::string::npos);
  }
  CHECK_THROWS_AS(run_sweep(spec, 0.0, 0.5, 8), HypothesisError);
  CHECK_THROWS_AS(run_sweep(spec, 0.3, 0.2, 8), HypothesisError);
}

TEST_CASE("sweep over the power-sum example") {
  const SweepReport r = run_sweep(example_spec(), 0.05, 0.5, 8);
  REQUIRE(r.records.size() == 8);
  CHECK(r.negativity_verdict);
  CHECK(r.monotonicity_verdict);
  CHECK(r.norm_decay_verdict);
  CHECK_FALSE(r.trivial_datum);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(r.records[i].mu == r.mu_values[i]);
    CHECK(r.records[i].converged);
  }
  // distinct energies certify distinct solutions
  for (std::size_t i = 1; i < 8; ++i) CHECK(r.records[i].energy != r.records[i - 1].energy);
}

TEST_CASE("zero datum yields a trivial report") {
  ProblemSpec spec = example_spec(256, 32);
  spec.nonlinearity.kind = "zero";
  const SweepReport r = run_sweep(spec, 0.1, 10.0, 4);
  CHECK(r.trivial_datum);
  CHECK_FALSE(r.negativity_verdict);
  CHECK_FALSE(r.monotonicity_verdict);
  CHECK(std::isinf(r.conditions.mu_star));
}

TEST_CASE("verdicts are computed from the records") {
  const Problem p = example_spec(256, 32).build();
  SweepReport r;
  for (double e : {-1.0, -2.0, -2.0, -8.0}) {
    SolutionRecord rec;
    rec.energy = e;
    rec.norm_alpha = -e * 1e-3;
    r.records.push_back(rec);
  }
  compute_verdicts(r, p);
  CHECK(r.negativity_verdict);
  CHECK_FALSE(r.monotonicity_verdict);
  r.records[2].energy = -3.0;
  compute_verdicts(r, p);
  CHECK(r.monotonicity_verdict);
  CHECK(r.norm_decay_verdict);
  r.records[0].norm_alpha = 5e-3;
  compute_verdicts(r, p);
  CHECK_FALSE(r.norm_decay_verdict);
}

TEST_CASE("report round trip and CSV") {
  const SweepReport r = run_sweep(example_spec(256, 32), 0.05, 0.5, 8);
  const std::string csv = sweep_csv(r);
  CHECK(csv.rfind("mu,norm_alpha,norm_inf,phi,psi,energy,residual,converged,restarts_used\n", 0) == 0);
  CHECK(count_lines(csv) == 9);

  const SweepReport back = sweep_report_from_json(json::parse(to_json(r).dump()));
  CHECK(to_json(back).dump() == to_json(r).dump());
  CHECK(back.mu_values == r.mu_values);
  REQUIRE(back.records.size() == r.records.size());
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    CHECK(back.records[i].coeffs == r.records[i].coeffs);
    CHECK(back.records[i].energy == r.records[i].energy);
    CHECK(back.records[i].candidates.size() == r.records[i].candidates.size());
  }
  CHECK(back.conditions.mu_star == r.conditions.mu_star);

  const SweepReport empty;
  CHECK(count_lines(sweep_csv(empty)) == 1);
  const json j = json::parse(to_json(empty).dump());
  CHECK(j.at("records").is_array());
  CHECK(j.at("records").empty());
}

TEST_CASE("non-finite values survive JSON") {
  ConditionReport c = evaluate_conditions(Nonlinearity::zero(), 0.75, 1.0);
  const json j = json::parse(to_json(c).dump());
  CHECK(j.at("mu_star") == "inf");
  CHECK(std::isinf(condition_report_from_json(j).mu_star));
}

TEST_CASE("emit_report writes the report and plot data") {
  const SweepReport r = run_sweep(example_spec(256, 32), 0.05, 0.5, 4);
  const auto path = scratch("emit.csv");
  emit_report(r, path, ReportFormat::csv);
  CHECK(read_text(path) == sweep_csv(r));
  const std::string plot = read_text(path.string() + ".plot.dat");
  CHECK(plot.find("# mu energy") != std::string::npos);
  CHECK(plot.find("# mu norm_alpha") != std::string::npos);
  const auto jpath = scratch("emit.json");
  emit_report(r, jpath, ReportFormat::json);
  CHECK(json::parse(read_text(jpath)).at("records").size() == 4);
  std::filesystem::remove(path);
  std::filesystem::remove(path.string() + ".plot.dat");
  std::filesystem::remove(jpath);
  std::filesystem::remove(jpath.string() + ".plot.dat");

  try {
    emit_report(r, "/nonexistent/dir/out.csv", ReportFormat::csv);
    FAIL("expected an I/O error");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("/nonexistent/dir/out.csv") != std::string::npos);
  }
  CHECK_THROWS_AS(report_format_from_string("xml"), ValidationError);
}

TEST_CASE("ray scans") {
  auto build = [](Nonlinearity nl) { return Problem::build({0.75, 1.0, 512, 32}, std::move(nl), 1.0); };
  const std::vector<double> taus = geometric_grid(1.0, 100.0, 9);
  Coefficients e1 = Coefficients::Zero(32);
  e1(0) = 1.0;

  const Problem z = build(Nonlinearity::zero());
  const RayScan zs = ray_scan(z, 0.1, e1, taus);
  for (std::size_t i = 1; i < zs.points.size(); ++i) CHECK(zs.points[i].energy > zs.points[i - 1].energy);
  CHECK(zs.fitted_exponent == doctest::Approx(2.0).epsilon(1e-9));
  CHECK_FALSE(zs.unbounded_below);

  const Problem ap = build(Nonlinearity::affine_power(4.0));
  const RayScan as = ray_scan(ap, 0.1, e1, taus);
  CHECK(as.leading_sign < 0.0);
  CHECK(std::abs(as.fitted_exponent - 4.0) <= kExponentSlack);
  CHECK(as.unbounded_below);

  const Problem ps = build(Nonlinearity::power_sum(1.5, 3.0));
  // J(tau u) = tau^2 Phi(u) - mu Psi(tau u) only turns down once the cubic term wins
  const RayScan pss = ray_scan(ps, 0.25, 20.0 * e1, {1.0, 10.0, 100.0, 1000.0});
  CHECK(pss.points[1].energy < pss.points[0].energy);
  CHECK(pss.unbounded_below);

  CHECK_THROWS_AS(ray_scan(z, 0.1, Coefficients::Zero(32), taus), ValidationError);
  CHECK_THROWS_AS(ray_scan(z, 0.1, e1, {1.0, 3.0, 2.0}), ValidationError);
}
