#pragma once

#include <functional>

namespace tcat::detail {

// Tanh-sinh rule on [0, 1] with step h in the transformed variable.
//
// The integrand receives (x, 1 - x) so that points near either endpoint can
// be evaluated without cancellation: the nodes are generated as distances
// from the nearest endpoint.
using EndpointIntegrand = std::function<double(double x, double one_minus_x)>;

double tanh_sinh_unit(const EndpointIntegrand& f, double step);

}  // namespace tcat::detail
