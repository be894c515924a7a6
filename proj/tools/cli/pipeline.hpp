#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "config.hpp"
#include "tcat/diffusion.hpp"
#include "tcat/regimes.hpp"
#include "tcat/reynolds.hpp"
#include "tcat/series.hpp"

namespace tcat::cli {

struct Extremes {
  std::optional<std::size_t> bif_min_index;  ///< argmin of normalized Bif
  std::optional<std::size_t> dmax_index;     ///< argmax of |delta D|
};

struct HurstSummary {
  std::size_t fits = 0;
  std::size_t failed = 0;
  std::optional<double> mean_hurst;
  std::optional<double> mean_kappa;
};

/// Critical-set agreement between the same-index and one-step-lagged
/// alignment of the energy increment against the acceleration.
struct AlignmentSensitivity {
  std::size_t aligned_points = 0;
  std::size_t lagged_points = 0;
  std::size_t common_points = 0;
};

struct AnalysisResult {
  ReynoldsSeries reynolds;
  std::vector<std::size_t> r_points;
  TransportSeries transport;
  std::vector<std::size_t> d_points;
  std::vector<RollingFit> fits;
  RegimeReport regimes;
  Extremes extremes;
  HurstSummary hurst;
  AlignmentSensitivity sensitivity;
};

/// Fewest samples the analysis can run on with this config.
std::size_t minimum_length(const AnalysisConfig& config);

/// Runs R-analysis, D-analysis, rolling power-law fits, clustering, overlap
/// and regime classification. Throws DataError (with the minimum length) if
/// the series is too short for the configured windows.
AnalysisResult run_analysis(const UniformSeries& series, const AnalysisConfig& config,
                            unsigned threads = 0);

void write_reynolds_csv(std::ostream& out, const UniformSeries& series,
                        const AnalysisResult& result);
void write_transport_csv(std::ostream& out, const UniformSeries& series,
                         const AnalysisResult& result);
void write_hurst_csv(std::ostream& out, const UniformSeries& series,
                     const AnalysisResult& result);

}  // namespace tcat::cli
