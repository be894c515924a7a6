#pragma once

#include <iosfwd>
#include <string>

#include "config.hpp"
#include "json.hpp"
#include "pipeline.hpp"

namespace tcat::cli {

/// The report.json document. Contains no timestamps, so identical inputs and
/// configs give byte-identical output.
nlohmann::ordered_json build_report(const UniformSeries& series, const AnalysisConfig& config,
                                    const AnalysisResult& result);

/// Checks the fields cmd_report relies on. Throws InvalidArgument whose
/// message starts with the offending field path (e.g. `r_clusters[1].end_date`).
void validate_report(const nlohmann::json& report);

enum class ReportFormat { text, markdown };

/// Chronology: clusters in date order with source, size and regime,
/// followed by the extremes and the confirmation efficiency.
void render_report(std::ostream& out, const nlohmann::json& report, ReportFormat format);

}  // namespace tcat::cli
