// Python bindings. Reports cross the boundary as JSON text; the package
// wrapper turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracvar/errors.hpp"
#include "fracvar/gamma.hpp"
#include "fracvar/kernel_checks.hpp"
#include "fracvar/report.hpp"
#include "fracvar/sweep.hpp"

namespace py = pybind11;
using namespace fracvar;

namespace {

ProblemSpec spec_from(const std::string& config_json, std::optional<std::uint64_t> seed) {
  ProblemSpec spec = ProblemSpec::from_json_text(config_json);
  if (seed) spec.solver.seed = *seed;
  return spec;
}

}  // namespace

PYBIND11_MODULE(_fracvar, m) {
  m.doc() = "Variational solver for fractional boundary-value problems";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  m.def("gamma", &euler_gamma, py::arg("x"));
  m.def("zeta", &riemann_zeta, py::arg("s"));
  m.def("embedding_constant", &embedding_constant, py::arg("alpha"), py::arg("T"));
  m.def("kappa_alpha", &kappa_alpha, py::arg("alpha"), py::arg("T"));

  m.def(
      "kernel_verify",
      [](double alpha, double T, int n) {
        py::list rows;
        for (const auto& c : kernel_verify(alpha, T, n)) {
          py::dict row;
          row["name"] = c.name;
          row["value"] = c.value;
          row["threshold"] = c.threshold;
          row["higher_is_better"] = c.higher_is_better;
          row["passed"] = c.passed;
          rows.append(row);
        }
        return rows;
      },
      py::arg("alpha") = 0.75, py::arg("T") = 1.0, py::arg("n") = 1024);

  m.def(
      "conditions_json",
      [](const std::string& config) {
        const ProblemSpec spec = ProblemSpec::from_json_text(config);
        spec.validate();
        ConditionReport report;
        {
          py::gil_scoped_release release;
          report = evaluate_conditions(spec.nonlinearity.build(), spec.alpha, spec.T);
        }
        return to_json(report).dump();
      },
      py::arg("config"));

  m.def(
      "solve_json",
      [](const std::string& config, double mu, std::optional<std::uint64_t> seed) {
        const ProblemSpec spec = spec_from(config, seed);
        py::gil_scoped_release release;
        const Problem problem = spec.build();
        const SolutionRecord rec = minimize(problem, mu, spec.solver);
        return to_json(rec, &problem).dump();
      },
      py::arg("config"), py::arg("mu"), py::arg("seed") = py::none());

  m.def(
      "sweep_json",
      [](const std::string& config, double mu_min, double mu_max, int count, std::optional<std::uint64_t> seed) {
        const ProblemSpec spec = spec_from(config, seed);
        py::gil_scoped_release release;
        return to_json(run_sweep(spec, mu_min, mu_max, count)).dump();
      },
      py::arg("config"), py::arg("mu_min"), py::arg("mu_max"), py::arg("count") = 8, py::arg("seed") = py::none());

  m.def(
      "ray_scan_json",
      [](const std::string& config, double mu, int mode, double tau_max, int points) {
        const ProblemSpec spec = ProblemSpec::from_json_text(config);
        py::gil_scoped_release release;
        const Problem problem = spec.build();
        if (mode < 1 || mode > problem.space->modes()) throw ValidationError("mode out of range");
        if (!(tau_max > 1.0)) throw ValidationError("tau_max must exceed 1");
        Coefficients direction = Coefficients::Zero(problem.space->modes());
        direction(mode - 1) = 1.0;
        return to_json(ray_scan(problem, mu, direction, geometric_grid(1.0, tau_max, points))).dump();
      },
      py::arg("config"), py::arg("mu"), py::arg("mode") = 1, py::arg("tau_max") = 100.0, py::arg("points") = 9);
}
