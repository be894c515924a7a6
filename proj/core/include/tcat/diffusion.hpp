#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tcat/series.hpp"

namespace tcat {

/// Empirical mean squared displacement b(T) for a set of lags, anchored at
/// an origin sample t0.
///
/// The expectation E[(x(t0+T) - x(t0))^2] is estimated from one path by
/// averaging over the `window` most recent start points that end at or
/// before the origin, so the curve only uses data available at t0.
struct DiffusionCurve {
  std::size_t origin_index = 0;
  std::vector<std::size_t> lags;  ///< strictly ascending, >= 1, in samples
  std::vector<double> msd;        ///< one entry per lag, >= 0
  std::size_t window = 0;
};

/// Fitted dynamic diffusion law D(t0, T) = d0 * T^kappa, from
/// msd(T) = d0 * T^(kappa + 1). hurst is always (kappa + 1) / 2 and is not
/// clamped to (0, 1).
struct PowerLawFit {
  double d0 = 0.0;
  double kappa = 0.0;
  double hurst = 0.5;
  double r2 = 0.0;
  std::size_t n_points = 0;
  std::size_t dropped_zeros = 0;

  static PowerLawFit from_law(double d0, double kappa, double r2 = 1.0,
                              std::size_t n_points = 3, std::size_t dropped_zeros = 0);
};

enum class MsdNormalization {
  literal,  ///< sum of the N+1 squared deviations divided by T
  mean,     ///< the same sum additionally divided by N+1
};

/// Rolling momentary transport D(x_i, T) over the trailing N-sample window
/// and its first differences.
///
/// d_values[k] belongs to series index start_offset + k (start_offset = N).
/// delta_d[k] = d_values[k + 1] - d_values[k] belongs to series index
/// start_offset + 1 + k.
struct TransportSeries {
  std::vector<double> d_values;
  std::vector<double> delta_d;
  std::size_t window_n = 0;
  std::size_t start_offset = 0;
  MsdNormalization normalization = MsdNormalization::literal;

  std::size_t delta_index(std::size_t k) const noexcept { return start_offset + 1 + k; }
};

/// Consecutive integer lags [first, last].
std::vector<std::size_t> lag_range(std::size_t first, std::size_t last);

/// msd(T) = mean over j in [origin - window - T + 1, origin - T] of
/// (x_{j+T} - x_j)^2. Requires origin >= window + max(lags), window >= 8.
DiffusionCurve msd_curve(const UniformSeries& series, std::size_t origin,
                         std::span<const std::size_t> lags, std::size_t window);

/// Ordinary least squares on (ln T, ln msd). Zero msd values are dropped and
/// counted; fewer than three surviving points is a DataError.
PowerLawFit fit_power_law(const DiffusionCurve& curve);
PowerLawFit fit_power_law(std::span<const double> lags, std::span<const double> msd);

/// Diffusive scale sqrt(d0) * T^H.
double diffusive_scale(const PowerLawFit& fit, double t_lag);
/// Second lag-derivative of the diffusive scale, sqrt(d0) H (H - 1) T^(H - 2).
double diffusive_acceleration(const PowerLawFit& fit, double t_lag);
/// Diffusion spectrum d0 * f^(-kappa).
double diffusion_spectrum(const PowerLawFit& fit, double freq);

/// Ratio of the long-lag to the short-lag integral of D(T):
///
///   I = int_{Tmax/2}^{Tmax} D dT / int_{Tmin}^{Tmax/2} D dT
///
/// using the trapezoid rule on the sampled lags, with D interpolated linearly
/// at Tmax/2. `transport` holds D(T) at each entry of `lags`.
double stabilization_factor(std::span<const double> lags, std::span<const double> transport);
/// Same, with D(t0, T) = msd(T) / T taken from the curve.
double stabilization_factor(const DiffusionCurve& curve);

/// D(x_i, T) = sum_{j=i-n}^{i} (x_i - x_j)^2 / T with T = n * dt.
double momentary_transport(const UniformSeries& series, std::size_t index, std::size_t n,
                           MsdNormalization normalization = MsdNormalization::literal);

TransportSeries transport_increments(const UniformSeries& series, std::size_t n,
                                     MsdNormalization normalization = MsdNormalization::literal);

/// Positions k >= 1 with increments[k-1] * increments[k] < 0. Exact zeros
/// never produce a point.
std::vector<std::size_t> sign_change_points(std::span<const double> increments);

/// Series indices where the transport increment changes sign.
std::vector<std::size_t> d_bifurcation_points(const TransportSeries& transport);

struct RollingFit {
  std::size_t origin = 0;
  std::optional<PowerLawFit> fit;           ///< empty when the curve is degenerate
  std::optional<double> stabilization;      ///< empty when I is undefined
};

/// Power-law fit at every admissible origin (from window + max(lags) to the
/// last sample, every `stride` samples). Origins are processed on up to
/// `threads` worker threads (0 = hardware concurrency); the result is in
/// origin order and does not depend on the thread count.
std::vector<RollingFit> rolling_fits(const UniformSeries& series,
                                     std::span<const std::size_t> lags, std::size_t window,
                                     std::size_t stride = 1, unsigned threads = 0);

}  // namespace tcat
