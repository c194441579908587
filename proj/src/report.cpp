#include "fracvar/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "fracvar/errors.hpp"

namespace fracvar {

ReportFormat report_format_from_string(const std::string& text) {
  if (text == "csv") return ReportFormat::csv;
  if (text == "json") return ReportFormat::json;
  throw ValidationError("unknown report format '" + text + "' (expected csv or json)");
}

json real_to_json(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

double real_from_json(const json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const auto text = value.get<std::string>();
    if (text == "inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw ValidationError("expected a real number, got " + value.dump());
}

namespace {

json optional_real(const std::optional<double>& value) { return value ? real_to_json(*value) : json(nullptr); }

std::optional<double> optional_real_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return real_from_json(j);
}

json vector_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(real_to_json(v(i)));
  return out;
}

json pairs_json(const std::vector<std::pair<double, double>>& pairs) {
  json out = json::array();
  for (const auto& [x, y] : pairs) out.push_back(json::array({real_to_json(x), real_to_json(y)}));
  return out;
}

std::vector<std::pair<double, double>> pairs_from(const json& j) {
  std::vector<std::pair<double, double>> out;
  for (const auto& item : j) out.emplace_back(real_from_json(item.at(0)), real_from_json(item.at(1)));
  return out;
}

TriState tri(const json& j) { return tri_state_from_string(j.get<std::string>()); }

std::string fmt(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace

json to_json(const AuditReport& report) {
  return json{{"trials", report.trials},
              {"violations_a", report.violations_a},
              {"violations_b", report.violations_b},
              {"violations_c", report.violations_c},
              {"tightest_ratio_a", real_to_json(report.tightest_ratio_a)},
              {"tightest_ratio_b", real_to_json(report.tightest_ratio_b)},
              {"tightest_ratio_c_lower", real_to_json(report.tightest_ratio_c_lower)},
              {"tightest_ratio_c_upper", real_to_json(report.tightest_ratio_c_upper)},
              {"seed", report.seed},
              {"offenders", report.offenders.size()}};
}

json to_json(const ConditionReport& report) {
  return json{{"kappa_alpha", real_to_json(report.kappa_alpha)},
              {"sup_ratio", real_to_json(report.sup_ratio)},
              {"gamma_bar", optional_real(report.gamma_bar)},
              {"sup_location", std::string(to_string(report.sup_location))},
              {"mu_star", real_to_json(report.mu_star)},
              {"lambda_right_endpoint", optional_real(report.lambda_right_endpoint)},
              {"sg_holds", std::string(to_string(report.sg_holds))},
              {"sg_prime_holds", std::string(to_string(report.sg_prime_holds))},
              {"s0_holds", std::string(to_string(report.s0_holds))},
              {"sinf_holds", std::string(to_string(report.sinf_holds))},
              {"zero_holds", std::string(to_string(report.zero_holds))},
              {"nonnegative", report.nonnegative},
              {"vanishes_at_zero", report.vanishes_at_zero},
              {"phi_r_bound", optional_real(report.phi_r_bound)},
              {"probes", pairs_json(report.probes)}};
}

ConditionReport condition_report_from_json(const json& j) {
  ConditionReport out;
  out.kappa_alpha = real_from_json(j.at("kappa_alpha"));
  out.sup_ratio = real_from_json(j.at("sup_ratio"));
  out.gamma_bar = optional_real_from(j.at("gamma_bar"));
  out.sup_location = sup_location_from_string(j.at("sup_location").get<std::string>());
  out.mu_star = real_from_json(j.at("mu_star"));
  out.lambda_right_endpoint = optional_real_from(j.at("lambda_right_endpoint"));
  out.sg_holds = tri(j.at("sg_holds"));
  out.sg_prime_holds = tri(j.at("sg_prime_holds"));
  out.s0_holds = tri(j.at("s0_holds"));
  out.sinf_holds = tri(j.at("sinf_holds"));
  out.zero_holds = tri(j.at("zero_holds"));
  out.nonnegative = j.at("nonnegative").get<bool>();
  out.vanishes_at_zero = j.at("vanishes_at_zero").get<bool>();
  out.phi_r_bound = optional_real_from(j.at("phi_r_bound"));
  out.probes = pairs_from(j.at("probes"));
  return out;
}

json to_json(const SolutionRecord& record, const Problem* problem) {
  json candidates = json::array();
  for (const auto& c : record.candidates) {
    candidates.push_back(json{{"start_amplitude", real_to_json(c.start_amplitude)},
                              {"energy", real_to_json(c.energy)},
                              {"norm_alpha", real_to_json(c.norm_alpha)},
                              {"grad_norm", real_to_json(c.grad_norm)},
                              {"iterations", c.iterations},
                              {"converged", c.converged}});
  }
  json out{{"mu", real_to_json(record.mu)},
           {"norm_alpha", real_to_json(record.norm_alpha)},
           {"norm_inf", real_to_json(record.norm_inf)},
           {"phi", real_to_json(record.phi)},
           {"psi", real_to_json(record.psi)},
           {"energy", real_to_json(record.energy)},
           {"residual", real_to_json(record.residual)},
           {"grad_norm", real_to_json(record.grad_norm)},
           {"converged", record.converged},
           {"nontrivial", record.nontrivial},
           {"restarts_used", record.restarts_used},
           {"best_start", record.best_start},
           {"gamma_bar", real_to_json(record.gamma_bar)},
           {"r_radius", real_to_json(record.r_radius)},
           {"coeffs", vector_json(record.coeffs)},
           {"candidates", std::move(candidates)}};
  if (problem != nullptr) {
    const CertificateSet cert = certify(record, *problem);
    out["certificates"] = json{{"inf_norm_bound", cert.inf_norm_bound},
                               {"negative_energy", cert.negative_energy ? json(*cert.negative_energy) : json(nullptr)},
                               {"residual_ok", cert.residual_ok},
                               {"residual_tolerance", real_to_json(residual_tolerance(*problem))},
                               {"interior", cert.interior}};
    json t = json::array();
    for (double node : problem->space->grid().nodes()) t.push_back(node);
    json u = json::array();
    for (double value : problem->space->synthesize(record.coeffs).values()) u.push_back(real_to_json(value));
    out["t"] = std::move(t);
    out["u"] = std::move(u);
  }
  return out;
}

SolutionRecord solution_record_from_json(const json& j) {
  SolutionRecord out;
  out.mu = real_from_json(j.at("mu"));
  out.norm_alpha = real_from_json(j.at("norm_alpha"));
  out.norm_inf = real_from_json(j.at("norm_inf"));
  out.phi = real_from_json(j.at("phi"));
  out.psi = real_from_json(j.at("psi"));
  out.energy = real_from_json(j.at("energy"));
  out.residual = real_from_json(j.at("residual"));
  out.grad_norm = real_from_json(j.at("grad_norm"));
  out.converged = j.at("converged").get<bool>();
  out.nontrivial = j.at("nontrivial").get<bool>();
  out.restarts_used = j.at("restarts_used").get<int>();
  out.best_start = j.at("best_start").get<int>();
  out.gamma_bar = real_from_json(j.at("gamma_bar"));
  out.r_radius = real_from_json(j.at("r_radius"));
  const auto& coeffs = j.at("coeffs");
  out.coeffs.resize(static_cast<Eigen::Index>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs(static_cast<Eigen::Index>(i)) = real_from_json(coeffs[i]);
  for (const auto& c : j.at("candidates")) {
    Candidate cand;
    cand.start_amplitude = real_from_json(c.at("start_amplitude"));
    cand.energy = real_from_json(c.at("energy"));
    cand.norm_alpha = real_from_json(c.at("norm_alpha"));
    cand.grad_norm = real_from_json(c.at("grad_norm"));
    cand.iterations = c.at("iterations").get<int>();
    cand.converged = c.at("converged").get<bool>();
    out.candidates.push_back(cand);
  }
  return out;
}

json to_json(const SweepReport& report) {
  json mus = json::array();
  for (double mu : report.mu_values) mus.push_back(real_to_json(mu));
  json records = json::array();
  for (const auto& rec : report.records) records.push_back(to_json(rec));
  return json{{"mu_values", std::move(mus)},
              {"monotonicity_verdict", report.monotonicity_verdict},
              {"negativity_verdict", report.negativity_verdict},
              {"norm_decay_verdict", report.norm_decay_verdict},
              {"trivial_datum", report.trivial_datum},
              {"conditions", to_json(report.conditions)},
              {"records", std::move(records)}};
}

SweepReport sweep_report_from_json(const json& j) {
  SweepReport out;
  for (const auto& mu : j.at("mu_values")) out.mu_values.push_back(real_from_json(mu));
  out.monotonicity_verdict = j.at("monotonicity_verdict").get<bool>();
  out.negativity_verdict = j.at("negativity_verdict").get<bool>();
  out.norm_decay_verdict = j.at("norm_decay_verdict").get<bool>();
  out.trivial_datum = j.at("trivial_datum").get<bool>();
  out.conditions = condition_report_from_json(j.at("conditions"));
  for (const auto& rec : j.at("records")) out.records.push_back(solution_record_from_json(rec));
  return out;
}

json to_json(const RayScan& scan) {
  json points = json::array();
  for (const auto& p : scan.points) points.push_back(json{{"tau", real_to_json(p.tau)}, {"energy", real_to_json(p.energy)}});
  return json{{"fitted_exponent", real_to_json(scan.fitted_exponent)},
              {"leading_sign", real_to_json(scan.leading_sign)},
              {"expected_exponent", real_to_json(scan.expected_exponent)},
              {"unbounded_below", scan.unbounded_below},
              {"points", std::move(points)}};
}

std::string sweep_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "mu,norm_alpha,norm_inf,phi,psi,energy,residual,converged,restarts_used\n";
  for (const auto& r : report.records) {
    out << fmt(r.mu) << ',' << fmt(r.norm_alpha) << ',' << fmt(r.norm_inf) << ',' << fmt(r.phi) << ','
        << fmt(r.psi) << ',' << fmt(r.energy) << ',' << fmt(r.residual) << ',' << (r.converged ? 1 : 0) << ','
        << r.restarts_used << '\n';
  }
  return out.str();
}

std::string sweep_plot_data(const SweepReport& report) {
  std::ostringstream out;
  out << "# mu energy\n";
  for (const auto& r : report.records) out << fmt(r.mu) << ' ' << fmt(r.energy) << '\n';
  out << "\n\n# mu norm_alpha\n";
  for (const auto& r : report.records) out << fmt(r.mu) << ' ' << fmt(r.norm_alpha) << '\n';
  return out.str();
}

void emit_report(const SweepReport& report, const std::filesystem::path& out_path, ReportFormat format) {
  if (format == ReportFormat::csv) {
    write_text(out_path, sweep_csv(report));
  } else {
    write_text(out_path, to_json(report).dump(2) + "\n");
  }
  std::filesystem::path plot = out_path;
  plot += ".plot.dat";
  write_text(plot, sweep_plot_data(report));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return buf.str();
}

}  // namespace fracvar
