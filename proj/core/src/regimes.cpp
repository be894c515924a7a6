#include "tcat/regimes.hpp"

#include <algorithm>

#include "tcat/error.hpp"

namespace tcat {

std::string_view to_string(ClusterSource source) {
  return source == ClusterSource::R ? "R" : "D";
}

std::string_view to_string(MemoryRegime regime) {
  return regime == MemoryRegime::short_memory ? "short-memory" : "long-memory";
}

std::vector<DateCluster> cluster_points(std::span<const std::size_t> points, std::size_t gap,
                                        std::span<const std::string> labels,
                                        ClusterSource source) {
  if (gap < 1) throw InvalidArgument("cluster gap must be at least 1");
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (points[k] <= points[k - 1])
      throw InvalidArgument("critical points must be ascending and unique");
  }
  if (!labels.empty() && !points.empty() && points.back() >= labels.size())
    throw InvalidArgument("critical point index beyond the label range");

  auto label = [&](std::size_t i) { return labels.empty() ? std::string{} : labels[i]; };

  std::vector<DateCluster> clusters;
  for (const std::size_t p : points) {
    if (!clusters.empty() && p - clusters.back().end_index <= gap) {
      DateCluster& c = clusters.back();
      c.end_index = p;
      c.end_label = label(p);
      ++c.point_count;
    } else {
      clusters.push_back({p, p, label(p), label(p), source, 1});
    }
  }
  return clusters;
}

std::vector<DateCluster> drop_sparse_clusters(std::vector<DateCluster> clusters,
                                              std::size_t min_points) {
  std::erase_if(clusters, [&](const DateCluster& c) { return c.point_count < min_points; });
  return clusters;
}

RegimeReport overlap_analysis(std::vector<DateCluster> r_clusters,
                              std::vector<DateCluster> d_clusters) {
  RegimeReport report;
  report.r_clusters = std::move(r_clusters);
  report.d_clusters = std::move(d_clusters);
  for (std::size_t r = 0; r < report.r_clusters.size(); ++r) {
    ConfirmedCluster hit{r, {}};
    for (std::size_t d = 0; d < report.d_clusters.size(); ++d) {
      if (report.r_clusters[r].intersects(report.d_clusters[d])) hit.d_clusters.push_back(d);
    }
    if (!hit.d_clusters.empty()) report.confirmed.push_back(std::move(hit));
  }
  if (!report.r_clusters.empty()) {
    report.efficiency = static_cast<double>(report.confirmed.size()) /
                        static_cast<double>(report.r_clusters.size());
  }
  return report;
}

RegimeReport classify_regimes(RegimeReport report) {
  report.regimes.assign(report.r_clusters.size(), MemoryRegime::long_memory);
  for (const ConfirmedCluster& c : report.confirmed)
    report.regimes.at(c.r_cluster) = MemoryRegime::short_memory;
  return report;
}

}  // namespace tcat
