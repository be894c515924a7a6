#pragma once

#include <cstdint>
#include <random>

namespace tcat {

/// Seedable stream of standard normal draws.
///
/// Bits come from std::mt19937_64, whose output sequence is fixed by the
/// standard; the normal transform (Box-Muller) is done here rather than with
/// std::normal_distribution so that a seed gives the same path on every
/// standard library. One stream per generated path.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  double next();

 private:
  double uniform_open();

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace tcat
