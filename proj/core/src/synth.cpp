#include "tcat/synth.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <array>
#include <cmath>
#include <sstream>

#include "quadrature.hpp"
#include "tcat/error.hpp"
#include "tcat/random.hpp"

namespace tcat {

void FbmSpec::validate() const {
  if (!(hurst > 0.0 && hurst < 1.0))
    throw InvalidArgument("hurst must lie in the open interval (0,1), got " +
                          format_double(hurst));
  if (length < 2) throw InvalidArgument("length must be at least 2");
  if (length > kMaxFbmLength)
    throw InvalidArgument("length must not exceed " + std::to_string(kMaxFbmLength) +
                          " for dense covariance factorization");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be positive");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidArgument("scale must be positive");
}

UniformSeries gen_sbm(std::size_t length, double dt, double scale, std::uint64_t seed) {
  if (length < 2) throw InvalidArgument("length must be at least 2");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be positive");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidArgument("scale must be positive");

  NormalStream normal(seed);
  const double sigma = std::sqrt(scale * dt);
  std::vector<double> x(length, 0.0);
  for (std::size_t i = 1; i < length; ++i) x[i] = x[i - 1] + sigma * normal.next();
  return UniformSeries(std::move(x), dt);
}

double fbm_covariance(double hurst, double t, double s, double scale) {
  if (!(hurst > 0.0 && hurst < 1.0))
    throw InvalidArgument("hurst must lie in the open interval (0,1)");
  if (t < 0.0 || s < 0.0) throw InvalidArgument("covariance times must be nonnegative");
  const double two_h = 2.0 * hurst;
  return 0.5 * scale *
         (std::pow(t, two_h) + std::pow(s, two_h) - std::pow(std::abs(t - s), two_h));
}

struct FbmGenerator::Factor {
  Eigen::MatrixXd lower;
};

FbmGenerator::FbmGenerator(const FbmSpec& spec) : spec_(spec) {
  spec_.validate();
  const auto n = static_cast<Eigen::Index>(spec_.length - 1);  // x_0 = 0 is fixed

  Eigen::MatrixXd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double ti = static_cast<double>(i + 1) * spec_.dt;
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double tj = static_cast<double>(j + 1) * spec_.dt;
      gram(i, j) = fbm_covariance(spec_.hurst, ti, tj, spec_.scale);
    }
  }
  const double diag_max = gram.diagonal().maxCoeff();

  constexpr std::array<double, 4> kJitterLadder{0.0, 1e-12, 1e-10, 1e-8};
  for (const double relative : kJitterLadder) {
    Eigen::MatrixXd trial = gram;
    trial.diagonal().array() += relative * diag_max;
    Eigen::LLT<Eigen::MatrixXd, Eigen::Lower> llt(trial);
    if (llt.info() == Eigen::Success) {
      factor_ = std::make_unique<Factor>();
      factor_->lower = llt.matrixL();
      jitter_ = relative * diag_max;
      return;
    }
  }
  std::ostringstream msg;
  msg << "FBM covariance factorization failed for H=" << spec_.hurst << ", length "
      << spec_.length << " even with diagonal jitter "
      << kJitterLadder.back() * diag_max;
  throw NumericalError(msg.str());
}

FbmGenerator::~FbmGenerator() = default;
FbmGenerator::FbmGenerator(FbmGenerator&&) noexcept = default;
FbmGenerator& FbmGenerator::operator=(FbmGenerator&&) noexcept = default;

UniformSeries FbmGenerator::sample(std::uint64_t seed) const {
  const auto n = factor_->lower.rows();
  NormalStream normal(seed);
  Eigen::VectorXd z(n);
  for (Eigen::Index i = 0; i < n; ++i) z[i] = normal.next();
  const Eigen::VectorXd path = factor_->lower.triangularView<Eigen::Lower>() * z;

  std::vector<double> x(spec_.length, 0.0);
  for (Eigen::Index i = 0; i < n; ++i) x[static_cast<std::size_t>(i) + 1] = path[i];
  return UniformSeries(std::move(x), spec_.dt);
}

UniformSeries gen_fbm(const FbmSpec& spec) { return FbmGenerator(spec).sample(spec.seed); }

namespace {

// Bracketed integral with both singular leading terms removed; see
// compute_vh. a = H - 1/2.
double vh_remainder(double a, double step) {
  // [0,1]: ((1+u)^a - u^a)^2 minus its u^(2a) term.
  const double near = detail::tanh_sinh_unit(
      [a](double u, double) {
        const double p = std::pow(1.0 + u, a);
        return p * p - 2.0 * std::pow(u, a) * p;
      },
      step);
  // [1,inf) with u = 1/w: w^(-2a-2) ((1+w)^a - 1)^2 minus its a^2 w^(-2a) term.
  const double far = detail::tanh_sinh_unit(
      [a](double w, double) {
        const double e1 = std::expm1(a * std::log1p(w));
        const double aw = a * w;
        // Grouped so that w -> 0 neither overflows nor hits inf * 0.
        return std::pow(w, -2.0 * a) * ((e1 - aw) / w) * ((e1 + aw) / w);
      },
      step);
  return near + far;
}

}  // namespace

VhResult compute_vh(double hurst, const VhOptions& options) {
  if (!(hurst > 0.0 && hurst < 1.0))
    throw InvalidArgument("hurst must lie in the open interval (0,1), got " +
                          format_double(hurst));
  if (!(options.step > 0.0) || options.max_levels < 2)
    throw InvalidArgument("invalid quadrature options");

  const double a = hurst - 0.5;
  // Closed-form pieces: int_0^1 u^(2a) du, a^2 int_0^1 w^(-2a) dw, and the
  // explicit 1/(2H) of the formula.
  const double analytic = 1.0 / (2.0 * hurst) + a * a / (2.0 - 2.0 * hurst) + 1.0 / (2.0 * hurst);
  const double gamma = std::tgamma(hurst + 0.5);
  const double norm = 1.0 / (gamma * gamma);

  VhResult result;
  double step = options.step;
  double previous = norm * (analytic + vh_remainder(a, step));
  for (int level = 1; level < options.max_levels; ++level) {
    step /= 2.0;
    const double current = norm * (analytic + vh_remainder(a, step));
    result = {current, std::abs(current - previous), step, level + 1};
    if (result.error_estimate <= options.tolerance) return result;
    previous = current;
  }
  if (result.error_estimate > 1e-6) {
    std::ostringstream msg;
    msg << "V_H quadrature did not converge for H=" << hurst
        << ": error estimate " << result.error_estimate << " after " << result.levels
        << " levels";
    throw NumericalError(msg.str());
  }
  return result;
}

}  // namespace tcat
