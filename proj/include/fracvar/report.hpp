#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fracvar/space.hpp"
#include "fracvar/sweep.hpp"

namespace fracvar {

using json = nlohmann::ordered_json;

enum class ReportFormat { csv, json };
ReportFormat report_format_from_string(const std::string& text);

/// Non-finite reals are written as the strings "inf", "-inf" and "nan".
json real_to_json(double value);
double real_from_json(const json& value);

json to_json(const AuditReport& report);
json to_json(const ConditionReport& report);
ConditionReport condition_report_from_json(const json& j);
json to_json(const SolutionRecord& record, const Problem* problem = nullptr);
SolutionRecord solution_record_from_json(const json& j);
json to_json(const SweepReport& report);
SweepReport sweep_report_from_json(const json& j);
json to_json(const RayScan& scan);

/// CSV with columns mu, norm_alpha, norm_inf, phi, psi, energy, residual, converged, restarts_used.
std::string sweep_csv(const SweepReport& report);
/// Two gnuplot-style blocks: (mu, energy) then (mu, norm_alpha).
std::string sweep_plot_data(const SweepReport& report);

/// Writes the report in the chosen format plus `<out>.plot.dat`. Throws IoError.
void emit_report(const SweepReport& report, const std::filesystem::path& out_path, ReportFormat format);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace fracvar
