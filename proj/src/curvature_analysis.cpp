#include "hypexpand/curvature_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypexpand/errors.hpp"
#include "hypexpand/lemmas.hpp"

namespace hypexpand {

namespace {

// Both series have positive terms, so below a = 1 they are more accurate
// than the cancelling closed forms. Terms stop at 1e-17 of the partial sum.
double phi_series(double a) {
  const double a2 = a * a;
  double term = a * a2 / 6.0;
  double sum = 0.0;
  for (int n = 1; n < 200 && term > 1e-17 * sum; ++n) {
    sum += term;
    term *= a2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
  }
  return sum;
}

// a cosh a - sinh a = sum_{n>=1} 2n a^(2n+1) / (2n+1)!
double psi_numerator_series(double a) {
  const double a2 = a * a;
  double base = a * a2 / 6.0;  // a^(2n+1) / (2n+1)!
  double sum = 0.0;
  for (int n = 1; n < 200; ++n) {
    const double term = 2.0 * n * base;
    sum += term;
    if (term <= 1e-17 * sum) break;
    base *= a2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
  }
  return sum;
}

}  // namespace

double phi(double a) {
  if (a < 0.0) throw DomainError("phi: argument must be >= 0");
  if (a < 1.0) return phi_series(a);
  return std::sinh(a) - a;
}

double psi(double a) {
  if (a < 0.0) throw DomainError("psi: argument must be >= 0");
  if (a == 0.0) return 0.0;
  if (a < 1.0) return psi_numerator_series(a) / std::sinh(a);
  return a / std::tanh(a) - 1.0;
}

BetaParts beta_parts(double theta_hat, double s) {
  const double c = std::cos(theta_hat);
  const double sn = std::sin(theta_hat);
  const double one_minus_s2 = (1.0 - s) * (1.0 + s);
  return {s * s * c * c + sn * sn, one_minus_s2 * sn * sn, one_minus_s2 * c * c};
}

double beta(double theta_hat, double s) { return beta_parts(theta_hat, s).beta; }

ChordSpec::ChordSpec(double r1, double r2, double theta1, double theta2)
    : r1_(r1), r2_(r2), theta1_(theta1), theta2_(theta2) {
  if (!(r1 > 0.0 && r2 > 0.0)) throw DomainError("ChordSpec: radii must be positive");
  if (!(theta1 >= -0.5 * kPi && theta1 < theta2 && theta2 < 0.5 * kPi)) {
    throw DomainError("ChordSpec: need -pi/2 <= theta1 < theta2 < pi/2");
  }
}

double chord_radius(const ChordSpec& spec, double t) { return chord_radius_jet(spec, t).r; }

ChordRadius chord_radius_jet(const ChordSpec& spec, double t) {
  return coth_chord(spec.r1(), spec.r2(), spec.dtheta(), t);
}

PreimageJet preimage_jet(double r_hat, double theta_hat, double dr_hat, double dtheta_hat,
                         double s) {
  PreimageJet j{};
  j.r_hat = r_hat;
  j.dr_hat = dr_hat;
  j.theta_hat = theta_hat;
  j.dtheta_hat = dtheta_hat;
  // Geodesic equation for the chord.
  j.d2r_hat = 2.0 * dr_hat * dr_hat / std::tanh(r_hat) +
              dtheta_hat * dtheta_hat * 0.5 * std::sinh(2.0 * r_hat);

  const BetaParts bp = beta_parts(theta_hat, s);
  const double one_minus_s2 = (1.0 - s) * (1.0 + s);
  j.beta = bp.beta;
  j.dbeta = one_minus_s2 * dtheta_hat * std::sin(2.0 * theta_hat);
  j.dbeta_sq = 4.0 * bp.beta_minus_s2 * bp.one_minus_beta * dtheta_hat * dtheta_hat;
  j.d2beta = 2.0 * one_minus_s2 * dtheta_hat * dtheta_hat * std::cos(2.0 * theta_hat);

  const double sb = std::sqrt(j.beta);
  j.r = r_hat * sb;
  j.dr = dr_hat * sb + r_hat * j.dbeta / (2.0 * sb);
  j.d2r = j.d2r_hat * sb + dr_hat * j.dbeta / sb +
          0.5 * r_hat * (j.d2beta * sb - j.dbeta * j.dbeta / (2.0 * sb)) / j.beta;

  j.theta = std::atan2(std::sin(theta_hat), s * std::cos(theta_hat));
  j.dtheta = s * dtheta_hat / j.beta;
  j.d2theta = -j.dtheta * j.dbeta / j.beta;
  return j;
}

PreimageJet preimage_jet(const ChordSpec& spec, double s, double t) {
  const ChordRadius cr = chord_radius_jet(spec, t);
  return preimage_jet(cr.r, spec.theta_at(t), cr.dr, spec.dtheta(), s);
}

ParamCurve preimage_curve(const ChordSpec& spec, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw DomainError("preimage_curve: s must lie in (0, 1]");
  auto jet = [spec, s](double t) { return preimage_jet(spec, s, t).polar(); };
  const PreimageJet a = preimage_jet(spec, s, 0.0);
  const PreimageJet b = preimage_jet(spec, s, 1.0);
  return ParamCurve::analytic(jet, DiskPoint::from_polar(spec.r1() * std::sqrt(a.beta), a.theta),
                              DiskPoint::from_polar(spec.r2() * std::sqrt(b.beta), b.theta));
}

PCoefficients p_coefficients(double r_hat, double theta_hat, double s, double dr_hat,
                             double dtheta_hat) {
  if (!(r_hat > 0.0)) throw DomainError("p_coefficients: r_hat must be positive");
  if (!(s > 0.0 && s < 1.0)) throw DomainError("p_coefficients: s must lie in (0, 1)");
  if (!(dtheta_hat > 0.0 && dtheta_hat < kPi)) {
    throw DomainError("p_coefficients: dtheta_hat must lie in (0, pi)");
  }
  const BetaParts bp = beta_parts(theta_hat, s);
  const double b = bp.beta;
  const double sb = std::sqrt(b);
  const double a = r_hat * sb;
  const double psi_a = psi(a);
  const double gaps = bp.beta_minus_s2 * bp.one_minus_beta;

  PCoefficients p{};
  p.r_hat = r_hat;
  p.beta = b;
  p.s = s;

  const double dbeta = (1.0 - s) * (1.0 + s) * dtheta_hat * std::sin(2.0 * theta_hat);
  const double dr = dr_hat * sb + r_hat * dbeta / (2.0 * sb);
  const double dtheta = s * dtheta_hat / b;
  const double sh = std::sinh(a);
  p.v = std::sqrt(dr * dr + sh * sh * dtheta * dtheta);

  p.P0 = (s * dtheta_hat / b) * sh / (p.v * p.v * p.v);
  p.P1 = 2.0 * sb * (psi_a - psi(r_hat)) / r_hat;
  p.P2 = 2.0 * (1.0 - s) * (1.0 + s) * std::sin(2.0 * theta_hat) * psi_a / sb;
  p.P2sq = 16.0 * gaps * psi_a * psi_a / b;
  p.P3 = (s * s / sb * phi(2.0 * a) - b * b * phi(2.0 * r_hat) + 4.0 * r_hat * gaps * psi_a) /
         (2.0 * b * sb);
  return p;
}

double discriminant_factored(double r_hat, double theta_hat, double s) {
  const BetaParts bp = beta_parts(theta_hat, s);
  const double b = bp.beta;
  const double sb = std::sqrt(b);
  const double a = r_hat * sb;
  const double psi_a = psi(a);
  const double psi_r = psi(r_hat);
  const double head = (psi_r - psi_a) / r_hat * (s * s / sb * phi(2.0 * a) - b * b * phi(2.0 * r_hat));
  return 4.0 / b * (head + 4.0 * bp.beta_minus_s2 * bp.one_minus_beta * psi_a * psi_r);
}

double phi_scaling_margin(double r_hat, double beta) {
  return lemma_sinh_scaling(2.0 * r_hat, std::sqrt(beta));
}

double psi_product_margin(double r_hat, double beta) {
  return lemma_coth_ratio(r_hat, std::sqrt(beta));
}

ParamCurve gamma_curve(const DiskPoint& x1, const DiskPoint& x2) {
  if (x1.is_origin() || x2.is_origin()) throw DomainError("gamma_curve: endpoints must be off the origin");
  if (hyperbolic_distance(x1, x2) == 0.0) throw DomainError("gamma_curve: endpoints coincide");
  const double r1 = x1.r();
  const double dr = x2.r() - x1.r();
  const double th1 = x1.theta();
  const double dth = canonical_angle(x2.theta() - x1.theta());
  auto jet = [=](double t) { return PolarJet{r1 + t * dr, th1 + t * dth, dr, dth, 0.0, 0.0}; };
  ParamCurve c = ParamCurve::analytic(jet, x1, x2);
  c.set_orientation_reversed(dth < 0.0);
  return c;
}

double gamma_curvature(double r, double dr, double dtheta) {
  const double sh = std::sinh(r);
  const double v = std::sqrt(dr * dr + sh * sh * dtheta * dtheta);
  return sh * dtheta * (2.0 / std::tanh(r) * dr * dr + 0.5 * std::sinh(2.0 * r) * dtheta * dtheta) /
         (v * v * v);
}

nlohmann::json SideOrderingReport::to_json() const {
  nlohmann::json j = {{"samples", samples},
                      {"min_inner_gap", min_inner_gap},
                      {"min_outer_gap", min_outer_gap},
                      {"max_kg_x", max_kg_x},
                      {"min_kg_gamma", min_kg_gamma},
                      {"violation_count", violation_count},
                      {"pass", pass()}};
  if (first_violation) {
    const auto& v = *first_violation;
    j["first_violation"] = {{"sample", v.sample}, {"t", v.t},         {"check", v.check},
                            {"r_x", v.r_x},       {"r_chord", v.r_chord}, {"r_gamma", v.r_gamma},
                            {"kg_x", v.kg_x},     {"kg_gamma", v.kg_gamma}};
  }
  return j;
}

SideOrderingReport side_ordering(const ChordSpec& spec, double s, std::size_t samples,
                                 double slack) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("side_ordering: s must lie in (0, 1)");
  if (samples < 2) throw DomainError("side_ordering: need at least 2 samples");
  const ParamCurve x = preimage_curve(spec, s);
  const DiskPoint x1 = x.start();
  const DiskPoint x2 = x.end();
  const ParamCurve gamma = gamma_curve(x1, x2);
  const double th1 = x1.theta();
  const double span = x2.theta() - x1.theta();

  SideOrderingReport rep;
  rep.samples = samples;
  rep.min_inner_gap = std::numeric_limits<double>::infinity();
  rep.min_outer_gap = std::numeric_limits<double>::infinity();
  rep.max_kg_x = -std::numeric_limits<double>::infinity();
  rep.min_kg_gamma = std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(samples - 1);
    const PolarJet jx = x.jet(t);
    const double tau = std::clamp((jx.theta - th1) / span, 0.0, 1.0);
    const double r_chord = coth_chord(x1.r(), x2.r(), span, tau).r;
    const double r_gamma = (1.0 - tau) * x1.r() + tau * x2.r();
    const double kg_x = geodesic_curvature(jx);
    const double kg_gamma = geodesic_curvature(gamma, t);

    const bool interior = i > 0 && i + 1 < samples;
    if (interior) {
      rep.min_inner_gap = std::min(rep.min_inner_gap, r_chord - jx.r);
      rep.min_outer_gap = std::min(rep.min_outer_gap, r_gamma - r_chord);
    }
    rep.max_kg_x = std::max(rep.max_kg_x, kg_x);
    rep.min_kg_gamma = std::min(rep.min_kg_gamma, kg_gamma);

    const char* failed = nullptr;
    if (!(jx.r <= r_chord + slack)) {
      failed = "r_x <= r_chord";
    } else if (!(r_chord <= r_gamma + slack)) {
      failed = "r_chord <= r_gamma";
    } else if (!(kg_x < 0.0)) {
      failed = "kg_x < 0";
    } else if (!(kg_gamma > 0.0)) {
      failed = "kg_gamma > 0";
    }
    if (failed) {
      ++rep.violation_count;
      if (!rep.first_violation) {
        rep.first_violation = SideOrderingViolation{i, t, failed, jx.r, r_chord, r_gamma, kg_x, kg_gamma};
      }
    }
  }
  return rep;
}

}  // namespace hypexpand
