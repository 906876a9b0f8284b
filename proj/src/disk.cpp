#include "hypexpand/disk.hpp"

#include <cmath>
#include <string>

#include "hypexpand/errors.hpp"

namespace hypexpand {

double canonical_angle(double theta) {
  double a = std::remainder(theta, 2.0 * kPi);  // [-pi, pi]
  if (a >= kPi) a -= 2.0 * kPi;
  return a;
}

DiskPoint DiskPoint::from_polar(double r, double theta) {
  if (!std::isfinite(r) || !std::isfinite(theta) || r < 0.0) {
    throw DomainError("DiskPoint: polar radius must be finite and >= 0, got " + std::to_string(r));
  }
  DiskPoint p;
  p.r_ = r;
  p.theta_ = r == 0.0 ? 0.0 : canonical_angle(theta);
  const double rho = std::tanh(0.5 * r);
  p.x_ = rho * std::cos(p.theta_);
  p.y_ = rho * std::sin(p.theta_);
  return p;
}

DiskPoint DiskPoint::from_cartesian(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y) || x * x + y * y >= 1.0) {
    throw DomainError("DiskPoint: Cartesian point outside the open unit disk");
  }
  DiskPoint p;
  const double rho = std::hypot(x, y);
  p.r_ = 2.0 * std::atanh(rho);
  p.theta_ = rho == 0.0 ? 0.0 : canonical_angle(std::atan2(y, x));
  p.x_ = x;
  p.y_ = y;
  return p;
}

double DiskPoint::norm() const { return std::hypot(x_, y_); }

double DiskPoint::conformal_half() const { return std::cosh(0.5 * r_); }

DiskPoint make_disk_point(double r, double theta, std::complex<double> z) {
  DiskPoint p;
  p.r_ = r;
  p.theta_ = r == 0.0 ? 0.0 : canonical_angle(theta);
  p.x_ = z.real();
  p.y_ = z.imag();
  return p;
}

DiskPoint polar_cartesian_roundtrip(const DiskPoint& p) {
  return DiskPoint::from_cartesian(p.x(), p.y());
}

FirstFundamentalForm FirstFundamentalForm::at(double r) {
  const double sh = std::sinh(r);
  return {1.0, 0.0, sh * sh, std::sinh(2.0 * r)};
}

DiskPoint negate(const DiskPoint& p) {
  return make_disk_point(p.r(), p.theta() + kPi, -p.complex());
}

DiskPoint translate(const DiskPoint& c, const DiskPoint& x) {
  const std::complex<double> cz = c.complex();
  const std::complex<double> xz = x.complex();
  const std::complex<double> sum = cz + xz;
  const std::complex<double> z = sum / (1.0 + std::conj(cz) * xz);
  // sinh(r/2) = |out| / sqrt(1 - |out|^2) = |c + x| cosh(r_c/2) cosh(r_x/2);
  // this keeps r accurate when the image lies close to the ideal boundary.
  const double r = 2.0 * std::asinh(std::abs(sum) * c.conformal_half() * x.conformal_half());
  return make_disk_point(r, std::arg(z), z);
}

double hyperbolic_distance(const DiskPoint& u, const DiskPoint& v) {
  return translate(negate(u), v).r();
}

DiskPoint geodesic_point(const DiskPoint& u, const DiskPoint& v, double t) {
  const DiskPoint w = translate(negate(u), v);
  return translate(u, DiskPoint::from_polar(t * w.r(), w.theta()));
}

ChordRadius coth_chord(double r1, double r2, double dtheta, double t) {
  if (!(dtheta > 0.0 && dtheta < kPi)) {
    throw DomainError("coth_chord: angular gap must lie in (0, pi)");
  }
  if (!(r1 > 0.0 && r2 > 0.0)) {
    throw DomainError("coth_chord: endpoint radii must be positive");
  }
  const double a = 1.0 / std::tanh(r1);
  const double b = 1.0 / std::tanh(r2);
  const double am1 = 2.0 / std::expm1(2.0 * r1);  // coth r1 - 1
  const double bm1 = 2.0 / std::expm1(2.0 * r2);
  const double s1 = std::sin((1.0 - t) * dtheta);
  const double s2 = std::sin(t * dtheta);
  const double sd = std::sin(dtheta);
  // sin p + sin q - sin(p + q) = 4 sin(p/2) sin(q/2) sin((p+q)/2)
  const double gap = 4.0 * std::sin(0.5 * t * dtheta) * std::sin(0.5 * (1.0 - t) * dtheta) *
                     std::sin(0.5 * dtheta);
  const double coth_m1 = (am1 * s1 + bm1 * s2 + gap) / sd;
  if (!(coth_m1 > 0.0)) {
    throw DegenerateError("coth_chord: parameter outside the chord's domain");
  }
  const double coth_r = 1.0 + coth_m1;
  const double sinh2 = 1.0 / (coth_m1 * (coth_m1 + 2.0));  // 1 / (coth^2 - 1)

  ChordRadius out{};
  out.r = 0.5 * std::log1p(2.0 / coth_m1);
  out.dr = dtheta * sinh2 * (a * std::cos((1.0 - t) * dtheta) - b * std::cos(t * dtheta)) / sd;
  out.d2r = 2.0 * out.dr * out.dr * coth_r + dtheta * dtheta * coth_r * sinh2;
  return out;
}

}  // namespace hypexpand
