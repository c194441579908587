#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>

#include <CLI11.hpp>

#include "fracvar/errors.hpp"
#include "fracvar/kernel_checks.hpp"
#include "fracvar/problem_config.hpp"
#include "fracvar/report.hpp"
#include "fracvar/sweep.hpp"

namespace {

using namespace fracvar;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitIo = 2;

void print_or_write(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text(out, text);
  }
}

int cmd_kernel_verify(double alpha, double T, int n) {
  const auto checks = kernel_verify(alpha, T, n);
  bool all = true;
  std::printf("%-26s %14s %12s  %s\n", "check", "value", "threshold", "result");
  for (const auto& c : checks) {
    std::printf("%-26s %14.6e %s%11.3e  %s\n", c.name.c_str(), c.value, c.higher_is_better ? ">" : "<", c.threshold,
                c.passed ? "PASS" : "FAIL");
    all = all && c.passed;
  }
  return all ? kExitOk : kExitInput;
}

void print_verdicts(const ConditionReport& r) {
  auto row = [](const char* name, std::string_view verdict) {
    std::fprintf(stderr, "  %-34s %s\n", name, std::string(verdict).c_str());
  };
  std::fprintf(stderr, "kappa_alpha %.10g  sup ratio %.10g (%s)  mu* %.10g\n", r.kappa_alpha, r.sup_ratio,
               std::string(to_string(r.sup_location)).c_str(), r.mu_star);
  row("sup ratio > kappa (mu = 1)", to_string(r.sg_holds));
  row("same, F in place of max F", to_string(r.sg_prime_holds));
  row("superlinear at 0 (f(t)/t)", to_string(r.s0_holds));
  row("subcritical at infinity", to_string(r.sinf_holds));
  row("potential dominates t^2 at 0", to_string(r.zero_holds));
}

ProblemSpec load_spec(const std::string& path, std::optional<std::uint64_t> seed) {
  ProblemSpec spec = ProblemSpec::load(path);
  if (seed) spec.solver.seed = *seed;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational solver for fractional boundary-value problems"};
  app.require_subcommand(1);

  double alpha = 0.75, T = 1.0;
  int n = 1024;
  std::string config, out, format = "csv";
  double mu = 0.0, mu_min = 0.0, mu_max = 0.0, tau_max = 100.0;
  int count = 8, points = 9, mode = 1;
  std::uint64_t seed = 0;

  auto* kv = app.add_subcommand("kernel-verify", "Check the fractional operators against closed forms");
  kv->add_option("--alpha", alpha, "Derivative order in (1/2, 1]");
  kv->add_option("--T", T, "Interval length");
  kv->add_option("--n", n, "Number of grid intervals");

  auto* cond = app.add_subcommand("conditions", "Evaluate the hypotheses on the nonlinearity");
  cond->add_option("--config", config, "Problem JSON")->required();
  cond->add_option("--out", out, "Output path (stdout if omitted)");

  auto* solve = app.add_subcommand("solve", "Minimize the energy at one parameter value");
  solve->add_option("--config", config, "Problem JSON")->required();
  solve->add_option("--mu", mu, "Parameter value")->required();
  solve->add_option("--out", out, "Output path (stdout if omitted)");
  auto* solve_seed = solve->add_option("--seed", seed, "Restart seed");

  auto* sweep = app.add_subcommand("sweep", "Solve over a geometric parameter grid");
  sweep->add_option("--config", config, "Problem JSON")->required();
  sweep->add_option("--mu-min", mu_min, "Smallest parameter")->required();
  sweep->add_option("--mu-max", mu_max, "Largest parameter")->required();
  sweep->add_option("--count", count, "Number of grid points");
  sweep->add_option("--out", out, "Output path (stdout if omitted)");
  sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  auto* sweep_seed = sweep->add_option("--seed", seed, "Restart seed");

  auto* ray = app.add_subcommand("ray-scan", "Evaluate the energy along the ray tau * sin(mode pi t / T)");
  ray->add_option("--config", config, "Problem JSON")->required();
  ray->add_option("--mu", mu, "Parameter value")->required();
  ray->add_option("--mode", mode, "Sine mode of the direction (1-based)");
  ray->add_option("--tau-max", tau_max, "Largest tau");
  ray->add_option("--points", points, "Number of tau values, geometric from 1");
  ray->add_option("--out", out, "Output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitInput;
  }

  try {
    if (*kv) return cmd_kernel_verify(alpha, T, n);

    if (*cond) {
      const ProblemSpec spec = ProblemSpec::load(config);
      spec.validate();
      const ConditionReport report = evaluate_conditions(spec.nonlinearity.build(), spec.alpha, spec.T);
      print_verdicts(report);
      print_or_write(to_json(report).dump(2) + "\n", out);
      return kExitOk;
    }

    if (*solve) {
      const ProblemSpec spec = load_spec(config, *solve_seed ? std::optional(seed) : std::nullopt);
      const Problem problem = spec.build();
      const SolutionRecord rec = minimize(problem, mu, spec.solver);
      print_or_write(to_json(rec, &problem).dump(2) + "\n", out);
      return kExitOk;
    }

    if (*sweep) {
      const ProblemSpec spec = load_spec(config, *sweep_seed ? std::optional(seed) : std::nullopt);
      const SweepReport report = run_sweep(spec, mu_min, mu_max, count);
      const ReportFormat fmt = report_format_from_string(format);
      if (out.empty()) {
        std::cout << (fmt == ReportFormat::csv ? sweep_csv(report) : to_json(report).dump(2) + "\n");
      } else {
        emit_report(report, out, fmt);
      }
      return kExitOk;
    }

    if (*ray) {
      const ProblemSpec spec = ProblemSpec::load(config);
      const Problem problem = spec.build();
      if (mode < 1 || mode > problem.space->modes()) throw ValidationError("--mode out of range");
      if (points < 3) throw ValidationError("--points must be at least 3");
      if (!(tau_max > 1.0)) throw ValidationError("--tau-max must exceed 1");
      Coefficients direction = Coefficients::Zero(problem.space->modes());
      direction(mode - 1) = 1.0;
      const RayScan scan = ray_scan(problem, mu, direction, geometric_grid(1.0, tau_max, points));
      print_or_write(to_json(scan).dump(2) + "\n", out);
      return kExitOk;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
