#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <vector>

#include "tcat/error.hpp"

namespace tcat::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json cluster_json(const DateCluster& c) {
  ordered_json j;
  j["start_index"] = c.start_index;
  j["end_index"] = c.end_index;
  j["start_date"] = c.start_label;
  j["end_date"] = c.end_label;
  j["source"] = std::string(to_string(c.source));
  j["point_count"] = c.point_count;
  return j;
}

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json index_json(const std::optional<std::size_t>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json date_json(const UniformSeries& series, const std::optional<std::size_t>& v) {
  return v ? ordered_json(std::string(series.label(*v))) : ordered_json(nullptr);
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw InvalidArgument(path + ": " + what);
}

const json& require(const json& parent, const std::string& path, const char* key) {
  const std::string here = path.empty() ? key : path + "." + key;
  if (!parent.is_object()) schema_error(path.empty() ? "<root>" : path, "expected an object");
  const auto it = parent.find(key);
  if (it == parent.end()) schema_error(here, "missing field");
  return *it;
}

void require_type(const json& value, const std::string& path, bool ok, const char* expected) {
  if (!ok) schema_error(path, std::string("expected ") + expected + ", got " + value.type_name());
}

void check_cluster_list(const json& report, const char* key, const char* source) {
  const json& list = require(report, "", key);
  require_type(list, key, list.is_array(), "an array");
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string path = std::string(key) + "[" + std::to_string(k) + "]";
    const json& c = list[k];
    for (const char* field : {"start_index", "end_index", "point_count"}) {
      const json& v = require(c, path, field);
      require_type(v, path + "." + field, v.is_number_unsigned(), "an unsigned integer");
    }
    for (const char* field : {"start_date", "end_date"}) {
      const json& v = require(c, path, field);
      require_type(v, path + "." + field, v.is_string(), "a string");
    }
    const json& s = require(c, path, "source");
    if (!s.is_string() || s.get<std::string>() != source)
      schema_error(path + ".source", std::string("expected \"") + source + "\"");
    if (c["start_index"].get<std::size_t>() > c["end_index"].get<std::size_t>())
      schema_error(path, "start_index exceeds end_index");
  }
}

struct Row {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string source, start_date, end_date, regime;
  std::size_t points = 0;
};

std::string percent(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.0f%%", 100.0 * x);
  return buf;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

ordered_json build_report(const UniformSeries& series, const AnalysisConfig& config,
                          const AnalysisResult& result) {
  ordered_json report;

  ordered_json& c = report["config"];
  c["input"] = config.input_path;
  c["out"] = config.output_dir;
  c["window_n"] = config.window_n;
  c["msd_window"] = config.msd_window;
  c["lag_min"] = config.lag_min;
  c["lag_max"] = config.lag_max;
  c["cluster_gap"] = config.cluster_gap;
  c["msd_normalization"] = std::string(to_string(config.msd_normalization));
  c["bif_normalization"] = std::string(to_string(config.bif_normalization));
  c["bif_rolling_window"] = config.bif_rolling_window;
  c["min_cluster_points"] = config.min_cluster_points;
  c["seed"] = config.seed ? ordered_json(*config.seed) : ordered_json(nullptr);

  ordered_json& in = report["input"];
  in["path"] = config.input_path;
  in["samples"] = series.size();
  in["first_date"] = std::string(series.label(0));
  in["last_date"] = std::string(series.label(series.size() - 1));

  ordered_json& est = report["estimator"];
  est["msd_expectation"] =
      "single-path surrogate: mean of squared displacements over the msd_window most recent "
      "start points ending at the origin";
  est["transport_normalization"] = std::string(to_string(config.msd_normalization));
  est["bif_alignment"] = "energy increment and acceleration at the same index";

  report["counts"] = {{"r_points", result.r_points.size()},
                      {"d_points", result.d_points.size()}};

  const RegimeReport& rr = result.regimes;
  report["r_clusters"] = ordered_json::array();
  for (const auto& cl : rr.r_clusters) report["r_clusters"].push_back(cluster_json(cl));
  report["d_clusters"] = ordered_json::array();
  for (const auto& cl : rr.d_clusters) report["d_clusters"].push_back(cluster_json(cl));

  report["confirmed"] = ordered_json::array();
  for (const auto& hit : rr.confirmed) {
    ordered_json j;
    j["r_cluster"] = hit.r_cluster;
    j["d_clusters"] = hit.d_clusters;
    report["confirmed"].push_back(std::move(j));
  }
  report["efficiency"] = optional_number(rr.efficiency);

  report["regimes"] = ordered_json::array();
  for (std::size_t k = 0; k < rr.regimes.size(); ++k) {
    ordered_json j;
    j["r_cluster"] = k;
    j["start_date"] = rr.r_clusters[k].start_label;
    j["end_date"] = rr.r_clusters[k].end_label;
    j["regime"] = std::string(to_string(rr.regimes[k]));
    report["regimes"].push_back(std::move(j));
  }

  ordered_json& ex = report["extremes"];
  ex["bif_min_date"] = date_json(series, result.extremes.bif_min_index);
  ex["bif_min_index"] = index_json(result.extremes.bif_min_index);
  ex["dmax_date"] = date_json(series, result.extremes.dmax_index);
  ex["dmax_index"] = index_json(result.extremes.dmax_index);

  ordered_json& h = report["hurst"];
  h["fits"] = result.hurst.fits;
  h["failed"] = result.hurst.failed;
  h["mean_hurst"] = optional_number(result.hurst.mean_hurst);
  h["mean_kappa"] = optional_number(result.hurst.mean_kappa);

  ordered_json& s = report["sensitivity"];
  s["aligned_points"] = result.sensitivity.aligned_points;
  s["lagged_points"] = result.sensitivity.lagged_points;
  s["common_points"] = result.sensitivity.common_points;
  return report;
}

void validate_report(const json& report) {
  if (!report.is_object()) schema_error("<root>", "expected an object");
  require_type(require(report, "", "config"), "config", report["config"].is_object(),
               "an object");
  check_cluster_list(report, "r_clusters", "R");
  check_cluster_list(report, "d_clusters", "D");

  const std::size_t n_r = report["r_clusters"].size();
  const std::size_t n_d = report["d_clusters"].size();

  const json& confirmed = require(report, "", "confirmed");
  require_type(confirmed, "confirmed", confirmed.is_array(), "an array");
  for (std::size_t k = 0; k < confirmed.size(); ++k) {
    const std::string path = "confirmed[" + std::to_string(k) + "]";
    const json& r = require(confirmed[k], path, "r_cluster");
    if (!r.is_number_unsigned() || r.get<std::size_t>() >= n_r)
      schema_error(path + ".r_cluster", "expected an index into r_clusters");
    const json& ds = require(confirmed[k], path, "d_clusters");
    require_type(ds, path + ".d_clusters", ds.is_array(), "an array");
    for (std::size_t m = 0; m < ds.size(); ++m) {
      if (!ds[m].is_number_unsigned() || ds[m].get<std::size_t>() >= n_d)
        schema_error(path + ".d_clusters[" + std::to_string(m) + "]",
                     "expected an index into d_clusters");
    }
  }

  const json& eff = require(report, "", "efficiency");
  require_type(eff, "efficiency", eff.is_null() || eff.is_number(), "a number or null");

  const json& regimes = require(report, "", "regimes");
  require_type(regimes, "regimes", regimes.is_array(), "an array");
  if (regimes.size() != n_r)
    schema_error("regimes", "expected one entry per R-cluster");
  for (std::size_t k = 0; k < regimes.size(); ++k) {
    const std::string path = "regimes[" + std::to_string(k) + "]";
    const json& r = require(regimes[k], path, "r_cluster");
    if (!r.is_number_unsigned() || r.get<std::size_t>() >= n_r)
      schema_error(path + ".r_cluster", "expected an index into r_clusters");
    const json& label = require(regimes[k], path, "regime");
    if (!label.is_string() ||
        (label.get<std::string>() != "short-memory" && label.get<std::string>() != "long-memory"))
      schema_error(path + ".regime", "expected \"short-memory\" or \"long-memory\"");
  }

  const json& ex = require(report, "", "extremes");
  require_type(ex, "extremes", ex.is_object(), "an object");
  for (const char* field : {"bif_min_date", "dmax_date"}) {
    const json& v = require(ex, "extremes", field);
    require_type(v, std::string("extremes.") + field, v.is_null() || v.is_string(),
                 "a string or null");
  }
}

void render_report(std::ostream& out, const json& report, ReportFormat format) {
  validate_report(report);

  std::vector<std::string> regime_of(report["r_clusters"].size());
  for (const json& r : report["regimes"])
    regime_of[r["r_cluster"].get<std::size_t>()] = r["regime"].get<std::string>();

  std::vector<Row> rows;
  for (const char* key : {"r_clusters", "d_clusters"}) {
    const bool is_r = std::string(key) == "r_clusters";
    const json& list = report[key];
    for (std::size_t k = 0; k < list.size(); ++k) {
      const json& c = list[k];
      rows.push_back({c["start_index"].get<std::size_t>(), c["end_index"].get<std::size_t>(),
                      c["source"].get<std::string>(), c["start_date"].get<std::string>(),
                      c["end_date"].get<std::string>(), is_r ? regime_of[k] : std::string(),
                      c["point_count"].get<std::size_t>()});
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.start != b.start ? a.start < b.start : a.source > b.source;
  });

  auto date_or = [](const json& v) {
    return v.is_string() ? v.get<std::string>() : std::string("n/a");
  };
  const json& ex = report["extremes"];
  const std::string bif_min = date_or(ex["bif_min_date"]);
  const std::string dmax = date_or(ex["dmax_date"]);

  std::string efficiency = "undefined (no R-clusters)";
  if (report["efficiency"].is_number()) {
    efficiency = std::to_string(report["confirmed"].size()) + " of " +
                 std::to_string(report["r_clusters"].size()) + " R-clusters confirmed (" +
                 percent(report["efficiency"].get<double>()) + ")";
  }

  std::string input;
  if (report.contains("input") && report["input"].is_object()) {
    const json& in = report["input"];
    std::ostringstream s;
    s << in.value("path", std::string()) << " (" << in.value("samples", std::size_t{0})
      << " samples, " << in.value("first_date", std::string()) << " .. "
      << in.value("last_date", std::string()) << ")";
    input = s.str();
  }

  if (format == ReportFormat::markdown) {
    out << "# R/D analysis\n\n";
    if (!input.empty()) out << "Input: " << input << "\n\n";
    out << "| source | start | end | points | regime |\n"
        << "|---|---|---|---|---|\n";
    for (const Row& r : rows) {
      out << "| " << r.source << " | " << r.start_date << " | " << r.end_date << " | "
          << r.points << " | " << r.regime << " |\n";
    }
    out << "\n- Minimum normalized Bif: " << bif_min << "\n- Maximum |dD|: " << dmax
        << "\n- D-confirmation efficiency: " << efficiency << "\n";
    return;
  }

  out << "R/D analysis\n";
  if (!input.empty()) out << "input: " << input << "\n";
  out << "\n"
      << pad("source", 8) << pad("start", 12) << pad("end", 12) << pad("points", 8)
      << "regime\n";
  for (const Row& r : rows) {
    out << pad(r.source, 8) << pad(r.start_date, 12) << pad(r.end_date, 12)
        << pad(std::to_string(r.points), 8) << r.regime << "\n";
  }
  out << "\nminimum normalized Bif: " << bif_min << "\nmaximum |dD|: " << dmax
      << "\nD-confirmation efficiency: " << efficiency << "\n";
}

}  // namespace tcat::cli
