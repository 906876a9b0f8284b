#pragma once

#include <array>
#include <complex>

namespace hypexpand {

inline constexpr double kPi = 3.14159265358979323846;

/// Reduce an angle to [-pi, pi).
double canonical_angle(double theta);

/// A point of the open unit disk, held both in geodesic polar form about the
/// origin (r = hyperbolic distance to 0) and in Cartesian form.
///
/// The polar radius is the primary quantity. Near the ideal boundary the
/// Cartesian norm tanh(r/2) saturates long before r loses precision, so
/// operations that can propagate r exactly do so.
class DiskPoint {
 public:
  DiskPoint() = default;

  /// Throws DomainError for r < 0 or non-finite input.
  static DiskPoint from_polar(double r, double theta);
  /// Throws DomainError unless x^2 + y^2 < 1.
  static DiskPoint from_cartesian(double x, double y);
  static DiskPoint from_complex(std::complex<double> z) { return from_cartesian(z.real(), z.imag()); }

  double r() const { return r_; }
  double theta() const { return theta_; }
  double x() const { return x_; }
  double y() const { return y_; }
  std::array<double, 2> cart() const { return {x_, y_}; }
  std::complex<double> complex() const { return {x_, y_}; }
  double norm() const;
  /// cosh(r/2) = 1/sqrt(1 - |cart|^2), computed from r.
  double conformal_half() const;

  bool is_origin() const { return r_ == 0.0; }

 private:
  friend DiskPoint make_disk_point(double r, double theta, std::complex<double> z);
  double r_ = 0.0;
  double theta_ = 0.0;
  double x_ = 0.0;
  double y_ = 0.0;
};

/// Build a point whose polar data (r, theta) were computed independently of
/// z; z must be the matching Cartesian position.
DiskPoint make_disk_point(double r, double theta, std::complex<double> z);

/// Rebuild the polar data from the Cartesian representation.
DiskPoint polar_cartesian_roundtrip(const DiskPoint& p);

/// Metric coefficients of ds^2 = dr^2 + sinh^2 r dtheta^2.
struct FirstFundamentalForm {
  double E = 1.0;
  double F = 0.0;
  double G = 0.0;
  double G_r = 0.0;

  static FirstFundamentalForm at(double r);
};

/// Moebius translation carrying 0 to c: (c + x) / (1 + conj(c) x).
/// Its inverse is translate(negate(c), .).
DiskPoint translate(const DiskPoint& c, const DiskPoint& x);

DiskPoint negate(const DiskPoint& p);

double hyperbolic_distance(const DiskPoint& u, const DiskPoint& v);

/// Point at hyperbolic arclength fraction t along [u, v] (t = 0 gives u).
DiskPoint geodesic_point(const DiskPoint& u, const DiskPoint& v, double t);

/// Radius on the geodesic between X(r1, theta) and X(r2, theta + dtheta),
/// 0 < dtheta < pi, at the point with polar angle theta + t*dtheta:
///   coth r = (coth r1 sin((1-t)dtheta) + coth r2 sin(t dtheta)) / sin dtheta.
/// Also returns the first and second t-derivatives of r.
struct ChordRadius {
  double r;
  double dr;
  double d2r;
};
ChordRadius coth_chord(double r1, double r2, double dtheta, double t);

}  // namespace hypexpand
