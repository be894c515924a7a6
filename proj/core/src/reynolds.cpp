#include "tcat/reynolds.hpp"

#include <algorithm>
#include <cmath>

#include "tcat/error.hpp"

namespace tcat {

Scenario ReynoldsSeries::scenario(std::size_t k) const {
  if (!(bif.at(k) < 0.0)) return Scenario::none;
  return acc[k] > 0.0 ? Scenario::accelerator : Scenario::decelerator;
}

std::vector<double> normalize_bif(std::span<const double> bif, BifNormalization mode,
                                  std::size_t window) {
  std::vector<double> out(bif.size(), 0.0);
  if (mode == BifNormalization::global) {
    double peak = 0.0;
    for (const double b : bif) peak = std::max(peak, std::abs(b));
    if (peak == 0.0) return out;
    for (std::size_t k = 0; k < bif.size(); ++k) out[k] = bif[k] / peak;
    return out;
  }
  if (window < 1) throw InvalidArgument("rolling normalization window must be at least 1");
  for (std::size_t k = 0; k < bif.size(); ++k) {
    const std::size_t begin = k + 1 >= window ? k + 1 - window : 0;
    double peak = 0.0;
    for (std::size_t j = begin; j <= k; ++j) peak = std::max(peak, std::abs(bif[j]));
    out[k] = peak == 0.0 ? 0.0 : bif[k] / peak;
  }
  return out;
}

ReynoldsSeries reynolds_series(const UniformSeries& series, const ReynoldsOptions& options) {
  if (series.size() < 4)
    throw DataError("R-analysis needs at least 4 samples, got " + std::to_string(series.size()));

  const DerivedSeries v = velocity(series);      // offset 1
  const DerivedSeries a = acceleration(series);  // offset 2
  const std::size_t n = a.values.size();

  ReynoldsSeries r;
  r.start_offset = a.start_offset;
  r.vel.assign(v.values.begin() + 1, v.values.end());
  r.acc = a.values;
  r.eps.resize(n);
  r.delta_eps.resize(n);
  r.bif.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double previous_eps = 0.5 * v.values[k] * v.values[k];
    r.eps[k] = 0.5 * r.vel[k] * r.vel[k];
    r.delta_eps[k] = r.eps[k] - previous_eps;
    r.bif[k] = r.delta_eps[k] * r.acc[k];
  }
  r.bif_norm = normalize_bif(r.bif, options.normalization, options.rolling_window);
  return r;
}

std::vector<std::size_t> r_critical_points(const ReynoldsSeries& reynolds) {
  std::vector<std::size_t> points;
  for (std::size_t k = 0; k < reynolds.bif.size(); ++k) {
    if (reynolds.bif[k] < 0.0) points.push_back(reynolds.series_index(k));
  }
  return points;
}

std::vector<std::size_t> lagged_critical_points(const UniformSeries& series) {
  const ReynoldsSeries r = reynolds_series(series);
  std::vector<std::size_t> points;
  for (std::size_t k = 1; k < r.size(); ++k) {
    if (r.delta_eps[k - 1] * r.acc[k] < 0.0) points.push_back(r.series_index(k));
  }
  return points;
}

}  // namespace tcat
