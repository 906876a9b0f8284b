#include "hypexpand/curve.hpp"

#include <cmath>
#include <utility>

#include "hypexpand/errors.hpp"

namespace hypexpand {

namespace {

constexpr double kTinyRadius = 1e-12;
// Angular gaps this close to 0 or pi are treated as collinear with the origin.
constexpr double kCollinearAngle = 1e-9;

}  // namespace

ParamCurve ParamCurve::analytic(JetFn jet, DiskPoint start, DiskPoint end) {
  ParamCurve c;
  c.jet_ = std::move(jet);
  c.eval_ = [j = c.jet_](double t) {
    const PolarJet q = j(t);
    return Polar{q.r, q.theta};
  };
  c.start_ = start;
  c.end_ = end;
  return c;
}

ParamCurve ParamCurve::sampled(EvalFn eval, DiskPoint start, DiskPoint end,
                               FiniteDifferenceSteps steps) {
  ParamCurve c;
  c.eval_ = std::move(eval);
  c.steps_ = steps;
  c.start_ = start;
  c.end_ = end;
  return c;
}

ParamCurve ParamCurve::finite_difference_view(FiniteDifferenceSteps steps) const {
  ParamCurve c = sampled(eval_, start_, end_, steps);
  c.reversed_ = reversed_;
  return c;
}

Polar ParamCurve::eval(double t) const { return eval_(t); }

PolarJet ParamCurve::jet(double t) const {
  if (jet_) return jet_(t);
  return finite_difference_jet(t);
}

DiskPoint ParamCurve::point(double t) const {
  const Polar p = eval_(t);
  return DiskPoint::from_polar(std::max(p.r, 0.0), p.theta);
}

double ParamCurve::speed(double t) const {
  const PolarJet q = jet(t);
  const double sh = std::sinh(q.r);
  return std::sqrt(q.dr * q.dr + sh * sh * q.dtheta * q.dtheta);
}

PolarJet ParamCurve::finite_difference_jet(double t) const {
  const Polar c = eval_(t);
  struct Diffs {
    double dr, dth, d2r, d2th;
  };
  auto central = [&](double h) {
    const Polar p = eval_(t + h);
    const Polar m = eval_(t - h);
    const double ap = std::remainder(p.theta - c.theta, 2.0 * kPi);
    const double am = std::remainder(m.theta - c.theta, 2.0 * kPi);
    return Diffs{(p.r - m.r) / (2.0 * h), (ap - am) / (2.0 * h),
                 (p.r - 2.0 * c.r + m.r) / (h * h), (ap + am) / (h * h)};
  };
  // Steps are relative to the local time scale of the curve, so that a curve
  // sweeping quickly past the origin is resolved as well as a slow one.
  const Diffs pilot = central(1e-6);
  double rate = std::max(1.0, std::abs(pilot.dth));
  if (c.r > 0.0) rate = std::max(rate, std::abs(pilot.dr) / c.r);
  const double h1 = steps_.first / rate;
  const double h2 = steps_.second / rate;
  // One Richardson step on each central difference removes the O(h^2) term.
  const Diffs f1 = central(h1);
  const Diffs f2 = central(0.5 * h1);
  const Diffs s1 = central(h2);
  const Diffs s2 = central(0.5 * h2);
  PolarJet q{};
  q.r = c.r;
  q.theta = c.theta;
  q.dr = (4.0 * f2.dr - f1.dr) / 3.0;
  q.dtheta = (4.0 * f2.dth - f1.dth) / 3.0;
  q.d2r = (4.0 * s2.d2r - s1.d2r) / 3.0;
  q.d2theta = (4.0 * s2.d2th - s1.d2th) / 3.0;
  return q;
}

ParamCurve geodesic_between(const DiskPoint& u, const DiskPoint& v) {
  if (hyperbolic_distance(u, v) == 0.0) {
    throw DomainError("geodesic_between: endpoints coincide");
  }
  const double gap = canonical_angle(v.theta() - u.theta());
  const bool u_origin = u.r() < kTinyRadius;
  const bool v_origin = v.r() < kTinyRadius;

  if (u_origin || v_origin || std::abs(gap) < kCollinearAngle ||
      kPi - std::abs(gap) < kCollinearAngle) {
    // Signed radial coordinate along a diameter; hyperbolic arclength is
    // linear in it, so this is the constant-speed geodesic.
    const bool radial = u_origin || v_origin || std::abs(gap) < kCollinearAngle;
    const double su = (radial || u_origin) ? u.r() : -u.r();
    const double sv = v.r();
    const double theta_pos = v_origin ? u.theta() : v.theta();
    const double theta_neg = u.theta();
    const double dtheta = (radial && !u_origin && !v_origin) ? gap : 0.0;
    const double theta_u = u.theta();
    auto jet = [=](double t) {
      const double sigma = (1.0 - t) * su + t * sv;
      PolarJet q{};
      if (dtheta != 0.0) {
        q.r = sigma;
        q.theta = theta_u + t * dtheta;
        q.dr = sv - su;
        q.dtheta = dtheta;
      } else {
        q.r = std::abs(sigma);
        q.theta = sigma >= 0.0 ? theta_pos : theta_neg;
        q.dr = sigma >= 0.0 ? sv - su : su - sv;
      }
      return q;
    };
    ParamCurve c = ParamCurve::analytic(jet, u, v);
    c.set_orientation_reversed(dtheta < 0.0);
    return c;
  }

  const double span = std::abs(gap);
  const double dir = gap > 0.0 ? 1.0 : -1.0;
  const double r1 = u.r();
  const double r2 = v.r();
  const double theta0 = u.theta();
  auto jet = [=](double t) {
    const ChordRadius cr = coth_chord(r1, r2, span, t);
    return PolarJet{cr.r, theta0 + dir * t * span, cr.dr, dir * span, cr.d2r, 0.0};
  };
  ParamCurve c = ParamCurve::analytic(jet, u, v);
  c.set_orientation_reversed(dir < 0.0);
  return c;
}

double geodesic_curvature(const PolarJet& q) {
  if (q.r < kTinyRadius) {
    throw DegenerateError("geodesic_curvature: curve passes through the polar singularity");
  }
  const double sh = std::sinh(q.r);
  const double ch = std::cosh(q.r);
  const double v = std::sqrt(q.dr * q.dr + sh * sh * q.dtheta * q.dtheta);
  if (v < 1e-12) {
    throw DegenerateError("geodesic_curvature: curve is not regular here");
  }
  // sqrt(EG) = sinh r, G_r / G = 2 coth r, G_r / (2E) = sinh r cosh r.
  const double bracket = 2.0 * (ch / sh) * q.dr * q.dr * q.dtheta +
                         sh * ch * q.dtheta * q.dtheta * q.dtheta + q.dr * q.d2theta -
                         q.d2r * q.dtheta;
  return sh * bracket / (v * v * v);
}

double geodesic_curvature(const ParamCurve& curve, double t) {
  return geodesic_curvature(curve.jet(t));
}

}  // namespace hypexpand
