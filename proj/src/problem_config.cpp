#include "fracvar/problem_config.hpp"

#include <set>

#include "fracvar/errors.hpp"
#include "fracvar/report.hpp"

namespace fracvar {

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) throw ValidationError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
T required(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ValidationError("missing key '" + std::string(key) + "' in " + where);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError("bad value for '" + std::string(key) + "' in " + where + ": " + e.what());
  }
}

template <typename T>
void optional_field(const json& j, const char* key, T& out, const std::string& where) {
  if (j.contains(key)) out = required<T>(j, key, where);
}

}  // namespace

Nonlinearity NonlinearitySpec::build() const {
  switch (nonlinearity_kind_from_string(kind)) {
    case NonlinearityKind::power_sum: return Nonlinearity::power_sum(r, s);
    case NonlinearityKind::affine_power: return Nonlinearity::affine_power(q);
    case NonlinearityKind::sqrt_plus: return Nonlinearity::sqrt_plus();
    case NonlinearityKind::zero: return Nonlinearity::zero();
    case NonlinearityKind::table: return Nonlinearity::table(xs, ys);
  }
  throw ValidationError("unknown nonlinearity kind");
}

void ProblemSpec::validate() const {
  space_config().validate();
  solver.validate();
  nonlinearity.build();
}

Problem ProblemSpec::build() const {
  validate();
  return Problem::build(space_config(), nonlinearity.build());
}

ProblemSpec ProblemSpec::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("config must be a JSON object");
  reject_unknown(j, {"alpha", "T", "n", "k_max", "nonlinearity", "solver"}, "config");

  ProblemSpec spec;
  spec.alpha = required<double>(j, "alpha", "config");
  spec.T = required<double>(j, "T", "config");
  spec.n = required<int>(j, "n", "config");
  spec.k_max = required<int>(j, "k_max", "config");

  const json nl = required<json>(j, "nonlinearity", "config");
  if (!nl.is_object()) throw ValidationError("nonlinearity must be an object");
  spec.nonlinearity.kind = required<std::string>(nl, "kind", "nonlinearity");
  switch (nonlinearity_kind_from_string(spec.nonlinearity.kind)) {
    case NonlinearityKind::power_sum:
      reject_unknown(nl, {"kind", "r", "s"}, "nonlinearity");
      spec.nonlinearity.r = required<double>(nl, "r", "nonlinearity");
      spec.nonlinearity.s = required<double>(nl, "s", "nonlinearity");
      break;
    case NonlinearityKind::affine_power:
      reject_unknown(nl, {"kind", "q"}, "nonlinearity");
      spec.nonlinearity.q = required<double>(nl, "q", "nonlinearity");
      break;
    case NonlinearityKind::sqrt_plus:
    case NonlinearityKind::zero:
      reject_unknown(nl, {"kind"}, "nonlinearity");
      break;
    case NonlinearityKind::table:
      reject_unknown(nl, {"kind", "xs", "ys"}, "nonlinearity");
      spec.nonlinearity.xs = required<std::vector<double>>(nl, "xs", "nonlinearity");
      spec.nonlinearity.ys = required<std::vector<double>>(nl, "ys", "nonlinearity");
      break;
  }

  if (j.contains("solver")) {
    const json& s = j.at("solver");
    if (!s.is_object()) throw ValidationError("solver must be an object");
    reject_unknown(s, {"grad_tol", "max_iters", "restarts", "armijo_c", "backtrack_factor", "sublevel_margin", "seed"},
                   "solver");
    optional_field(s, "grad_tol", spec.solver.grad_tol, "solver");
    optional_field(s, "max_iters", spec.solver.max_iters, "solver");
    optional_field(s, "restarts", spec.solver.restarts, "solver");
    optional_field(s, "armijo_c", spec.solver.armijo_c, "solver");
    optional_field(s, "backtrack_factor", spec.solver.backtrack_factor, "solver");
    optional_field(s, "sublevel_margin", spec.solver.sublevel_margin, "solver");
    optional_field(s, "seed", spec.solver.seed, "solver");
  }
  spec.validate();
  return spec;
}

ProblemSpec ProblemSpec::load(const std::filesystem::path& path) { return from_json_text(read_text(path)); }

std::string ProblemSpec::to_json_text() const {
  json nl = {{"kind", nonlinearity.kind}};
  switch (nonlinearity_kind_from_string(nonlinearity.kind)) {
    case NonlinearityKind::power_sum:
      nl["r"] = nonlinearity.r;
      nl["s"] = nonlinearity.s;
      break;
    case NonlinearityKind::affine_power: nl["q"] = nonlinearity.q; break;
    case NonlinearityKind::table:
      nl["xs"] = nonlinearity.xs;
      nl["ys"] = nonlinearity.ys;
      break;
    default: break;
  }
  json j = {{"alpha", alpha},
            {"T", T},
            {"n", n},
            {"k_max", k_max},
            {"nonlinearity", nl},
            {"solver",
             {{"grad_tol", solver.grad_tol},
              {"max_iters", solver.max_iters},
              {"restarts", solver.restarts},
              {"armijo_c", solver.armijo_c},
              {"backtrack_factor", solver.backtrack_factor},
              {"sublevel_margin", solver.sublevel_margin},
              {"seed", solver.seed}}}};
  return j.dump(2);
}

}  // namespace fracvar
