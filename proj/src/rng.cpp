#include "tracplan/rng.hpp"

#include <cmath>

namespace tracplan {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

void RngStream::normal_pair(double& z0, double& z1) {
  // u1 in (0, 1] keeps the log finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  z0 = r * std::cos(kTwoPi * u2);
  z1 = r * std::sin(kTwoPi * u2);
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double z0, z1;
  normal_pair(z0, z1);
  spare_ = z1;
  has_spare_ = true;
  return z0;
}

}  // namespace tracplan
