#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>

#include "tcat/series.hpp"

namespace tcat {

/// Parameters of a fractional Brownian path x(t), x(0) = 0, sampled at
/// t_k = k * dt for k < length, with E[(x(t+T) - x(t))^2] = scale * T^(2H).
struct FbmSpec {
  double hurst = 0.5;
  std::size_t length = 2;
  double dt = 1.0;
  double scale = 1.0;
  std::uint64_t seed = 0;

  /// Throws InvalidArgument naming the violated bound.
  void validate() const;
};

/// Largest path length accepted by the dense covariance factorization.
inline constexpr std::size_t kMaxFbmLength = 8192;

/// Standard Brownian path: x_0 = 0, independent N(0, scale * dt) increments.
UniformSeries gen_sbm(std::size_t length, double dt, double scale, std::uint64_t seed);

/// (scale / 2) * (t^2H + s^2H - |t - s|^2H).
double fbm_covariance(double hurst, double t, double s, double scale);

/// Exact FBM sampler. Factorizes the covariance Gram matrix of the grid once
/// and maps independent normal draws through it; sample() is const and can be
/// called from several threads with different seeds.
class FbmGenerator {
 public:
  /// `spec.seed` is ignored; pass seeds to sample(). Throws NumericalError if
  /// the Gram matrix cannot be factorized even with the largest jitter.
  explicit FbmGenerator(const FbmSpec& spec);
  ~FbmGenerator();
  FbmGenerator(FbmGenerator&&) noexcept;
  FbmGenerator& operator=(FbmGenerator&&) noexcept;

  UniformSeries sample(std::uint64_t seed) const;

  const FbmSpec& spec() const noexcept { return spec_; }
  /// Diagonal jitter that made the factorization succeed (0 if none needed).
  double jitter() const noexcept { return jitter_; }

 private:
  struct Factor;
  FbmSpec spec_;
  double jitter_ = 0.0;
  std::unique_ptr<Factor> factor_;
};

UniformSeries gen_fbm(const FbmSpec& spec);

struct VhOptions {
  /// Initial tanh-sinh step; halved until two levels agree to `tolerance`.
  double step = 0.5;
  double tolerance = 1e-9;
  int max_levels = 10;
};

struct VhResult {
  double value = 0.0;
  double error_estimate = 0.0;  ///< |I(h) - I(h/2)| at the final level
  double step = 0.0;            ///< step of the final level
  int levels = 0;
};

/// FBM variance constant V_H with E[(B_H(t+T) - B_H(t))^2] = V_H * T^(2H):
///
///   V_H = Gamma(H + 1/2)^-2 * ( int_0^inf ((1+u)^(H-1/2) - u^(H-1/2))^2 du + 1/(2H) )
///
/// The half-line is split at u = 1 and [1, inf) is mapped onto (0, 1] with
/// u = 1/w, so nothing is truncated. The power-law singularities at both
/// origins are integrated in closed form and only the bounded remainders go
/// through the quadrature.
///
/// Throws InvalidArgument for H outside (0, 1) and NumericalError if the
/// error estimate stays above 1e-6.
VhResult compute_vh(double hurst, const VhOptions& options = {});

}  // namespace tcat
