#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tcat/series.hpp"

namespace tcat {

enum class BifNormalization {
  global,   ///< divide by max |Bif| over the whole span
  rolling,  ///< divide by max |Bif| over a trailing window
};

/// Which of the two disruption cases makes Bif_i negative.
enum class Scenario {
  none,         ///< Bif_i >= 0
  accelerator,  ///< acceleration > 0 while specific energy falls
  decelerator,  ///< acceleration < 0 while specific energy rises
};

/// Per-step kinematics and the bifurcation indicator Bif_i = d_eps_i * a_i.
///
/// All arrays are aligned: entry k belongs to series index start_offset + k,
/// the first index where velocity, acceleration and the specific-energy
/// increment all exist.
struct ReynoldsSeries {
  std::vector<double> vel;        ///< v_i = (x_i - x_{i-1}) / dt
  std::vector<double> acc;        ///< (v_i - v_{i-1}) / dt
  std::vector<double> eps;        ///< v_i^2 / 2
  std::vector<double> delta_eps;  ///< eps_i - eps_{i-1}
  std::vector<double> bif;        ///< delta_eps_i * acc_i
  std::vector<double> bif_norm;   ///< bif scaled into [-1, 1]
  std::size_t start_offset = 2;

  std::size_t size() const noexcept { return bif.size(); }
  std::size_t series_index(std::size_t k) const noexcept { return start_offset + k; }
  Scenario scenario(std::size_t k) const;
};

struct ReynoldsOptions {
  BifNormalization normalization = BifNormalization::global;
  std::size_t rolling_window = 26;  ///< only used by BifNormalization::rolling
};

/// Needs at least 4 samples.
ReynoldsSeries reynolds_series(const UniformSeries& series, const ReynoldsOptions& options = {});

/// Scales values by max |value| (globally or over a trailing window of
/// `window` entries); all-zero spans stay zero.
std::vector<double> normalize_bif(std::span<const double> bif, BifNormalization mode,
                                  std::size_t window = 26);

/// Series indices with Bif_i < 0. Exact zeros are equilibrium, not critical.
std::vector<std::size_t> r_critical_points(const ReynoldsSeries& reynolds);

/// Critical indices when the energy increment is taken one step earlier than
/// the acceleration (d_eps_{i-1} * a_i < 0). Used only to report how
/// sensitive the critical set is to that alignment choice.
std::vector<std::size_t> lagged_critical_points(const UniformSeries& series);

}  // namespace tcat
