#pragma once

#include <functional>

#include "hypexpand/disk.hpp"

namespace hypexpand {

struct Polar {
  double r;
  double theta;
};

/// Polar position with first and second parameter derivatives.
struct PolarJet {
  double r;
  double theta;
  double dr;
  double dtheta;
  double d2r;
  double d2theta;
};

/// Central-difference steps, divided at each t by the local rate
/// max(1, |theta'|, |r'|/r). The second-difference quotient divides round-off
/// by h^2, hence the larger step.
struct FiniteDifferenceSteps {
  double first = 1e-5;
  double second = 3e-3;
};

/// A twice-differentiable curve t -> (r(t), theta(t)), t in [0, 1].
///
/// Derivatives are either supplied analytically or taken by central
/// differences (Richardson-extrapolated once). theta is not required to stay
/// in the canonical range; differences are unwrapped.
class ParamCurve {
 public:
  using EvalFn = std::function<Polar(double)>;
  using JetFn = std::function<PolarJet(double)>;

  static ParamCurve analytic(JetFn jet, DiskPoint start, DiskPoint end);
  static ParamCurve sampled(EvalFn eval, DiskPoint start, DiskPoint end,
                            FiniteDifferenceSteps steps = {});

  Polar eval(double t) const;
  PolarJet jet(double t) const;
  DiskPoint point(double t) const;
  double speed(double t) const;

  bool has_analytic_derivatives() const { return static_cast<bool>(jet_); }
  /// Same positions, derivatives recomputed by finite differences.
  ParamCurve finite_difference_view(FiniteDifferenceSteps steps = {}) const;

  const DiskPoint& start() const { return start_; }
  const DiskPoint& end() const { return end_; }

  /// Set when the polar angle decreases along the curve (the parametrization
  /// was built for the mirrored configuration).
  bool orientation_reversed() const { return reversed_; }
  void set_orientation_reversed(bool v) { reversed_ = v; }

 private:
  ParamCurve() = default;
  PolarJet finite_difference_jet(double t) const;

  EvalFn eval_;
  JetFn jet_;
  FiniteDifferenceSteps steps_;
  DiskPoint start_;
  DiskPoint end_;
  bool reversed_ = false;
};

/// Geodesic segment from u to v.
///
/// For 0 < |dtheta| < pi the polar angle is linear in t and the radius follows
/// the coth chord equation. Configurations collinear with the origin use the
/// constant-speed radial or diameter parametrization. Throws DomainError when
/// u == v.
ParamCurve geodesic_between(const DiskPoint& u, const DiskPoint& v);

/// Signed geodesic curvature; positive for a counterclockwise circle about 0.
/// Throws DegenerateError if the speed or the radius is below 1e-12.
double geodesic_curvature(const ParamCurve& curve, double t);
double geodesic_curvature(const PolarJet& jet);

}  // namespace hypexpand
