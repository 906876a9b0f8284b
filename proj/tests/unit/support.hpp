#pragma once

#include <cmath>
#include <complex>

#include "hypexpand/disk.hpp"
#include "hypexpand/rng.hpp"

namespace testing {

inline hypexpand::DiskPoint random_point(hypexpand::Rng& rng, double max_r = 3.0) {
  return hypexpand::DiskPoint::from_polar(rng.uniform(0.0, max_r),
                                          rng.uniform(-hypexpand::kPi, hypexpand::kPi));
}

// Closed-form distance on Cartesian coordinates, independent of translate().
inline double cartesian_distance(const hypexpand::DiskPoint& u, const hypexpand::DiskPoint& v) {
  const long double dx = u.x() - v.x();
  const long double dy = u.y() - v.y();
  const long double nu = 1.0L - (static_cast<long double>(u.x()) * u.x() + static_cast<long double>(u.y()) * u.y());
  const long double nv = 1.0L - (static_cast<long double>(v.x()) * v.x() + static_cast<long double>(v.y()) * v.y());
  return static_cast<double>(std::acosh(1.0L + 2.0L * (dx * dx + dy * dy) / (nu * nv)));
}

inline double cart_gap(const hypexpand::DiskPoint& a, const hypexpand::DiskPoint& b) {
  return std::hypot(a.x() - b.x(), a.y() - b.y());
}

}  // namespace testing
