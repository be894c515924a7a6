#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tcat {

enum class ClusterSource { R, D };

enum class MemoryRegime {
  short_memory,  ///< R-disruption confirmed by the markovian D-detector
  long_memory,   ///< R-disruption the D-detector does not see
};

std::string_view to_string(ClusterSource source);
std::string_view to_string(MemoryRegime regime);

/// A run of critical points whose neighbours are at most `gap` samples apart.
struct DateCluster {
  std::size_t start_index = 0;
  std::size_t end_index = 0;
  std::string start_label;
  std::string end_label;
  ClusterSource source = ClusterSource::R;
  std::size_t point_count = 1;

  bool intersects(const DateCluster& other) const noexcept {
    return start_index <= other.end_index && other.start_index <= end_index;
  }
};

struct ConfirmedCluster {
  std::size_t r_cluster = 0;             ///< position in RegimeReport::r_clusters
  std::vector<std::size_t> d_clusters;   ///< positions in RegimeReport::d_clusters
};

struct RegimeReport {
  std::vector<DateCluster> r_clusters;
  std::vector<DateCluster> d_clusters;
  std::vector<ConfirmedCluster> confirmed;
  /// Confirmed fraction of R-clusters; empty when there are no R-clusters.
  std::optional<double> efficiency;
  /// One label per R-cluster once classify_regimes has run.
  std::vector<MemoryRegime> regimes;
};

/// Greedy 1-D merge of ascending, unique indices: consecutive points with
/// index difference <= gap share a cluster. Every point lands in exactly one
/// cluster. `labels` (may be empty) supplies the start/end dates.
std::vector<DateCluster> cluster_points(std::span<const std::size_t> points, std::size_t gap,
                                        std::span<const std::string> labels,
                                        ClusterSource source);

/// Keeps clusters with at least `min_points` members. Not part of the
/// default pipeline (min_points = 1 keeps everything).
std::vector<DateCluster> drop_sparse_clusters(std::vector<DateCluster> clusters,
                                              std::size_t min_points);

/// An R-cluster is confirmed iff its index interval meets any D-cluster.
RegimeReport overlap_analysis(std::vector<DateCluster> r_clusters,
                              std::vector<DateCluster> d_clusters);

/// Confirmed R-clusters are short-memory, the rest long-memory.
RegimeReport classify_regimes(RegimeReport report);

}  // namespace tcat
