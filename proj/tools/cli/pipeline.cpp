#include "pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "tcat/error.hpp"

namespace tcat::cli {

namespace {

const char* scenario_code(Scenario s) {
  switch (s) {
    case Scenario::accelerator:
      return "a";
    case Scenario::decelerator:
      return "b";
    case Scenario::none:
      break;
  }
  return "";
}

}  // namespace

std::size_t minimum_length(const AnalysisConfig& config) {
  return std::max({std::size_t{4}, config.window_n + 2, config.msd_window + config.lag_max + 1});
}

AnalysisResult run_analysis(const UniformSeries& series, const AnalysisConfig& config,
                            unsigned threads) {
  config.validate();
  const std::size_t needed = minimum_length(config);
  if (series.size() < needed)
    throw DataError("series too short for the chosen windows: need at least " +
                    std::to_string(needed) + " samples, got " + std::to_string(series.size()));

  AnalysisResult result;

  result.reynolds =
      reynolds_series(series, {config.bif_normalization, config.bif_rolling_window});
  result.r_points = r_critical_points(result.reynolds);

  result.transport = transport_increments(series, config.window_n, config.msd_normalization);
  result.d_points = d_bifurcation_points(result.transport);

  const auto lags = lag_range(config.lag_min, config.lag_max);
  result.fits = rolling_fits(series, lags, config.msd_window, 1, threads);

  auto r_clusters =
      cluster_points(result.r_points, config.cluster_gap, series.labels(), ClusterSource::R);
  auto d_clusters =
      cluster_points(result.d_points, config.cluster_gap, series.labels(), ClusterSource::D);
  if (config.min_cluster_points > 1) {
    r_clusters = drop_sparse_clusters(std::move(r_clusters), config.min_cluster_points);
    d_clusters = drop_sparse_clusters(std::move(d_clusters), config.min_cluster_points);
  }
  result.regimes =
      classify_regimes(overlap_analysis(std::move(r_clusters), std::move(d_clusters)));

  // Extremes; an identically zero indicator has none.
  const auto& bif_norm = result.reynolds.bif_norm;
  if (std::any_of(bif_norm.begin(), bif_norm.end(), [](double b) { return b != 0.0; })) {
    const auto k = static_cast<std::size_t>(
        std::min_element(bif_norm.begin(), bif_norm.end()) - bif_norm.begin());
    result.extremes.bif_min_index = result.reynolds.series_index(k);
  }
  const auto& delta_d = result.transport.delta_d;
  if (std::any_of(delta_d.begin(), delta_d.end(), [](double d) { return d != 0.0; })) {
    const auto k = static_cast<std::size_t>(
        std::max_element(delta_d.begin(), delta_d.end(),
                         [](double a, double b) { return std::abs(a) < std::abs(b); }) -
        delta_d.begin());
    result.extremes.dmax_index = result.transport.delta_index(k);
  }

  double hurst_sum = 0.0, kappa_sum = 0.0;
  for (const RollingFit& f : result.fits) {
    if (!f.fit) {
      ++result.hurst.failed;
      continue;
    }
    ++result.hurst.fits;
    hurst_sum += f.fit->hurst;
    kappa_sum += f.fit->kappa;
  }
  if (result.hurst.fits > 0) {
    result.hurst.mean_hurst = hurst_sum / static_cast<double>(result.hurst.fits);
    result.hurst.mean_kappa = kappa_sum / static_cast<double>(result.hurst.fits);
  }

  const auto lagged = lagged_critical_points(series);
  std::vector<std::size_t> common;
  std::set_intersection(result.r_points.begin(), result.r_points.end(), lagged.begin(),
                        lagged.end(), std::back_inserter(common));
  result.sensitivity = {result.r_points.size(), lagged.size(), common.size()};
  return result;
}

void write_reynolds_csv(std::ostream& out, const UniformSeries& series,
                        const AnalysisResult& result) {
  const ReynoldsSeries& r = result.reynolds;
  out << "index,date,v,a,eps,deltaEps,bif,bifNorm,critical,scenario\n";
  for (std::size_t k = 0; k < r.size(); ++k) {
    const std::size_t i = r.series_index(k);
    out << i << ',' << series.label(i) << ',' << format_double(r.vel[k]) << ','
        << format_double(r.acc[k]) << ',' << format_double(r.eps[k]) << ','
        << format_double(r.delta_eps[k]) << ',' << format_double(r.bif[k]) << ','
        << format_double(r.bif_norm[k]) << ',' << (r.bif[k] < 0.0 ? 1 : 0) << ','
        << scenario_code(r.scenario(k)) << '\n';
  }
}

void write_transport_csv(std::ostream& out, const UniformSeries& series,
                         const AnalysisResult& result) {
  const TransportSeries& t = result.transport;
  out << "index,date,D,deltaD\n";
  for (std::size_t k = 0; k < t.d_values.size(); ++k) {
    const std::size_t i = t.start_offset + k;
    out << i << ',' << series.label(i) << ',' << format_double(t.d_values[k]) << ',';
    if (k > 0) out << format_double(t.delta_d[k - 1]);
    out << '\n';
  }
}

void write_hurst_csv(std::ostream& out, const UniformSeries& series,
                     const AnalysisResult& result) {
  out << "index,date,d0,kappa,hurst,r2,n_points,dropped_zeros,stabilization\n";
  for (const RollingFit& f : result.fits) {
    out << f.origin << ',' << series.label(f.origin) << ',';
    if (f.fit) {
      out << format_double(f.fit->d0) << ',' << format_double(f.fit->kappa) << ','
          << format_double(f.fit->hurst) << ',' << format_double(f.fit->r2) << ','
          << f.fit->n_points << ',' << f.fit->dropped_zeros << ',';
    } else {
      out << ",,,,,,";
    }
    if (f.stabilization) out << format_double(*f.stabilization);
    out << '\n';
  }
}

}  // namespace tcat::cli
