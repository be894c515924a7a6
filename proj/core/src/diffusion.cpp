#include "tcat/diffusion.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "tcat/error.hpp"

namespace tcat {

namespace {

void check_lags(std::span<const std::size_t> lags) {
  if (lags.empty()) throw InvalidArgument("lag list is empty");
  if (lags.front() < 1) throw InvalidArgument("lags must be at least 1");
  for (std::size_t k = 1; k < lags.size(); ++k) {
    if (lags[k] <= lags[k - 1]) throw InvalidArgument("lags must be strictly ascending");
  }
}

// Trapezoid integral of the piecewise-linear interpolant of (t, y) over
// [from, to], where from and to lie inside [t.front(), t.back()].
double trapezoid(std::span<const double> t, std::span<const double> y, double from, double to) {
  auto value_at = [&](std::size_t k, double at) {
    const double w = (at - t[k]) / (t[k + 1] - t[k]);
    return y[k] + w * (y[k + 1] - y[k]);
  };
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    const double lo = std::max(from, t[k]);
    const double hi = std::min(to, t[k + 1]);
    if (hi <= lo) continue;
    sum += 0.5 * (hi - lo) * (value_at(k, lo) + value_at(k, hi));
  }
  return sum;
}

}  // namespace

PowerLawFit PowerLawFit::from_law(double d0, double kappa, double r2, std::size_t n_points,
                                  std::size_t dropped_zeros) {
  PowerLawFit fit;
  fit.d0 = d0;
  fit.kappa = kappa;
  fit.hurst = (kappa + 1.0) / 2.0;
  fit.r2 = r2;
  fit.n_points = n_points;
  fit.dropped_zeros = dropped_zeros;
  return fit;
}

std::vector<std::size_t> lag_range(std::size_t first, std::size_t last) {
  if (first < 1 || last < first) throw InvalidArgument("lag range needs 1 <= first <= last");
  std::vector<std::size_t> lags;
  lags.reserve(last - first + 1);
  for (std::size_t t = first; t <= last; ++t) lags.push_back(t);
  return lags;
}

DiffusionCurve msd_curve(const UniformSeries& series, std::size_t origin,
                         std::span<const std::size_t> lags, std::size_t window) {
  check_lags(lags);
  if (window < 8) throw InvalidArgument("msd window must be at least 8 start points");
  if (origin >= series.size())
    throw InvalidArgument("origin " + std::to_string(origin) + " is past the end of the series");
  const std::size_t max_lag = lags.back();
  if (origin < window + max_lag)
    throw DataError("insufficient history before origin " + std::to_string(origin) + ": need " +
                    std::to_string(window + max_lag) + " samples");

  const auto x = series.values();
  DiffusionCurve curve{origin, std::vector<std::size_t>(lags.begin(), lags.end()),
                       std::vector<double>(lags.size()), window};
  for (std::size_t k = 0; k < lags.size(); ++k) {
    const std::size_t lag = lags[k];
    double sum = 0.0;
    for (std::size_t j = origin - window - lag + 1; j <= origin - lag; ++j) {
      const double dx = x[j + lag] - x[j];
      sum += dx * dx;
    }
    curve.msd[k] = sum / static_cast<double>(window);
  }
  return curve;
}

PowerLawFit fit_power_law(std::span<const double> lags, std::span<const double> msd) {
  if (lags.size() != msd.size()) throw InvalidArgument("lags and msd differ in length");
  std::vector<double> log_t, log_b;
  std::size_t dropped = 0;
  for (std::size_t k = 0; k < lags.size(); ++k) {
    if (!(lags[k] > 0.0)) throw InvalidArgument("lags must be positive");
    if (!(msd[k] >= 0.0) || !std::isfinite(msd[k]))
      throw InvalidArgument("msd values must be finite and nonnegative");
    if (msd[k] == 0.0) {
      ++dropped;
      continue;
    }
    log_t.push_back(std::log(lags[k]));
    log_b.push_back(std::log(msd[k]));
  }
  const std::size_t n = log_t.size();
  if (n < 3)
    throw DataError("power-law fit needs at least 3 positive msd points, got " +
                    std::to_string(n) + " (" + std::to_string(dropped) + " zeros dropped)");

  double mean_t = 0.0, mean_b = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    mean_t += log_t[k];
    mean_b += log_b[k];
  }
  mean_t /= static_cast<double>(n);
  mean_b /= static_cast<double>(n);

  double stt = 0.0, stb = 0.0, sbb = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double dt = log_t[k] - mean_t;
    const double db = log_b[k] - mean_b;
    stt += dt * dt;
    stb += dt * db;
    sbb += db * db;
  }
  if (stt == 0.0) throw DataError("power-law fit needs at least two distinct lags");

  const double slope = stb / stt;
  const double intercept = mean_b - slope * mean_t;
  double ss_res = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double r = log_b[k] - (intercept + slope * log_t[k]);
    ss_res += r * r;
  }
  const double r2 = sbb > 0.0 ? std::clamp(1.0 - ss_res / sbb, 0.0, 1.0) : 1.0;

  // msd ~ T^(kappa + 1): the log-log slope is kappa + 1.
  return PowerLawFit::from_law(std::exp(intercept), slope - 1.0, r2, n, dropped);
}

PowerLawFit fit_power_law(const DiffusionCurve& curve) {
  std::vector<double> lags(curve.lags.begin(), curve.lags.end());
  return fit_power_law(lags, curve.msd);
}

double diffusive_scale(const PowerLawFit& fit, double t_lag) {
  if (!(t_lag > 0.0)) throw InvalidArgument("lag must be positive");
  return std::sqrt(fit.d0) * std::pow(t_lag, fit.hurst);
}

double diffusive_acceleration(const PowerLawFit& fit, double t_lag) {
  if (!(t_lag > 0.0)) throw InvalidArgument("lag must be positive");
  return std::sqrt(fit.d0) * fit.hurst * (fit.hurst - 1.0) * std::pow(t_lag, fit.hurst - 2.0);
}

double diffusion_spectrum(const PowerLawFit& fit, double freq) {
  if (!(freq > 0.0)) throw InvalidArgument("frequency must be positive");
  return fit.d0 * std::pow(freq, -fit.kappa);
}

double stabilization_factor(std::span<const double> lags, std::span<const double> transport) {
  if (lags.size() != transport.size())
    throw InvalidArgument("lags and transport values differ in length");
  if (lags.size() < 4) throw InvalidArgument("stabilization factor needs at least 4 lags");
  for (std::size_t k = 1; k < lags.size(); ++k) {
    if (!(lags[k] > lags[k - 1])) throw InvalidArgument("lags must be strictly ascending");
  }
  const double t_min = lags.front();
  const double t_max = lags.back();
  const double split = t_max / 2.0;
  if (!(t_min < split)) throw InvalidArgument("stabilization factor needs Tmin < Tmax/2");

  const double low = trapezoid(lags, transport, t_min, split);
  const double high = trapezoid(lags, transport, split, t_max);
  if (low == 0.0) throw DataError("stabilization factor: short-lag integral is zero");
  return high / low;
}

double stabilization_factor(const DiffusionCurve& curve) {
  std::vector<double> t(curve.lags.size()), d(curve.lags.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    t[k] = static_cast<double>(curve.lags[k]);
    d[k] = curve.msd[k] / t[k];
  }
  return stabilization_factor(t, d);
}

double momentary_transport(const UniformSeries& series, std::size_t index, std::size_t n,
                           MsdNormalization normalization) {
  if (n < 1) throw InvalidArgument("transport window must be at least 1");
  if (index >= series.size())
    throw InvalidArgument("index " + std::to_string(index) + " is past the end of the series");
  if (index < n)
    throw DataError("transport window of " + std::to_string(n) + " at index " +
                    std::to_string(index) + " extends before the series start");
  const auto x = series.values();
  const double xi = x[index];
  double sum = 0.0;
  for (std::size_t j = index - n; j <= index; ++j) {
    const double dx = xi - x[j];
    sum += dx * dx;
  }
  double d = sum / (static_cast<double>(n) * series.dt());
  if (normalization == MsdNormalization::mean) d /= static_cast<double>(n + 1);
  return d;
}

TransportSeries transport_increments(const UniformSeries& series, std::size_t n,
                                     MsdNormalization normalization) {
  if (n < 1) throw InvalidArgument("transport window must be at least 1");
  if (series.size() <= n + 1)
    throw DataError("transport increments with N=" + std::to_string(n) + " need at least " +
                    std::to_string(n + 2) + " samples, got " + std::to_string(series.size()));
  TransportSeries out;
  out.window_n = n;
  out.start_offset = n;
  out.normalization = normalization;
  out.d_values.reserve(series.size() - n);
  for (std::size_t i = n; i < series.size(); ++i)
    out.d_values.push_back(momentary_transport(series, i, n, normalization));
  out.delta_d.resize(out.d_values.size() - 1);
  for (std::size_t k = 0; k + 1 < out.d_values.size(); ++k)
    out.delta_d[k] = out.d_values[k + 1] - out.d_values[k];
  return out;
}

std::vector<std::size_t> sign_change_points(std::span<const double> increments) {
  if (increments.size() < 2) throw InvalidArgument("sign changes need at least 2 increments");
  std::vector<std::size_t> points;
  for (std::size_t k = 1; k < increments.size(); ++k) {
    if (increments[k - 1] * increments[k] < 0.0) points.push_back(k);
  }
  return points;
}

std::vector<std::size_t> d_bifurcation_points(const TransportSeries& transport) {
  std::vector<std::size_t> points = sign_change_points(transport.delta_d);
  for (auto& k : points) k = transport.delta_index(k);
  return points;
}

std::vector<RollingFit> rolling_fits(const UniformSeries& series,
                                     std::span<const std::size_t> lags, std::size_t window,
                                     std::size_t stride, unsigned threads) {
  check_lags(lags);
  if (stride < 1) throw InvalidArgument("stride must be at least 1");
  const std::size_t first = window + lags.back();
  if (first >= series.size())
    throw DataError("rolling fits need at least " + std::to_string(first + 1) +
                    " samples, got " + std::to_string(series.size()));

  const std::size_t count = (series.size() - first + stride - 1) / stride;
  std::vector<RollingFit> out(count);
  detail::parallel_for(count, threads, [&](std::size_t k) {
    RollingFit& slot = out[k];
    slot.origin = first + k * stride;
    const DiffusionCurve curve = msd_curve(series, slot.origin, lags, window);
    try {
      slot.fit = fit_power_law(curve);
    } catch (const DataError&) {
    }
    if (curve.lags.size() >= 4 && static_cast<double>(curve.lags.front()) <
                                      static_cast<double>(curve.lags.back()) / 2.0) {
      try {
        slot.stabilization = stabilization_factor(curve);
      } catch (const DataError&) {
      }
    }
  });
  return out;
}

}  // namespace tcat
