#include "hypexpand/dilation.hpp"

#include <cmath>

#include "hypexpand/errors.hpp"

namespace hypexpand {

DilationParams::DilationParams(DiskPoint center, double k1, double k2)
    : center_(center), k1_(k1), k2_(k2) {
  if (!(std::isfinite(k1) && std::isfinite(k2) && k1 > 0.0 && k2 > 0.0)) {
    throw DomainError("DilationParams: factors must be positive and finite");
  }
}

DiskPoint dilate_origin(double k1, double k2, const DiskPoint& p) {
  if (p.is_origin()) return p;
  const double c = std::cos(p.theta());
  const double s = std::sin(p.theta());
  const double scale = std::hypot(k1 * c, k2 * s);
  return DiskPoint::from_polar(p.r() * scale, std::atan2(k2 * s, k1 * c));
}

DiskPoint dilate(const DilationParams& params, const DiskPoint& p) {
  const DiskPoint& c = params.center();
  if (c.is_origin()) return dilate_origin(params.k1(), params.k2(), p);
  const DiskPoint local = translate(negate(c), p);
  return translate(c, dilate_origin(params.k1(), params.k2(), local));
}

DiskPoint dilate_inverse(const DilationParams& params, const DiskPoint& p) {
  return dilate(params.inverse(), p);
}

}  // namespace hypexpand
