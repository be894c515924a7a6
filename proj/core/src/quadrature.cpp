#include "quadrature.hpp"

#include <cmath>
#include <numbers>

namespace tcat::detail {

double tanh_sinh_unit(const EndpointIntegrand& f, double step) {
  constexpr double pi = std::numbers::pi;
  // x(t) = (1 + tanh(pi/2 sinh t)) / 2. With q = exp(-pi sinh t), the node
  // sits at distance q / (1 + q) from an endpoint and the weight is
  // pi cosh t q / (1 + q)^2.
  double sum = f(0.5, 0.5) * pi / 4.0;
  for (int k = 1;; ++k) {
    const double t = k * step;
    const double q = std::exp(-pi * std::sinh(t));
    const double distance = q / (1.0 + q);
    if (distance < 1e-300) break;
    const double weight = pi * std::cosh(t) * q / ((1.0 + q) * (1.0 + q));
    const double term = weight * (f(distance, 1.0 - distance) + f(1.0 - distance, distance));
    sum += term;
    if (weight < 1e-300) break;
  }
  return sum * step;
}

}  // namespace tcat::detail
