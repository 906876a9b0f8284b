#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "hypexpand/curve.hpp"
#include "hypexpand/disk.hpp"

namespace hypexpand {

/// phi(a) = sinh a - a.
double phi(double a);
/// psi(a) = a coth a - 1, with psi(0) = 0.
double psi(double a);

/// beta = s^2 cos^2(theta_hat) + sin^2(theta_hat), together with the two
/// gaps formed without cancellation.
struct BetaParts {
  double beta;
  double beta_minus_s2;   // (1 - s^2) sin^2
  double one_minus_beta;  // (1 - s^2) cos^2
};
BetaParts beta_parts(double theta_hat, double s);
double beta(double theta_hat, double s);

/// Chord [x_hat_1, x_hat_2] of the dilated set, with
/// -pi/2 <= theta1 < theta2 < pi/2.
class ChordSpec {
 public:
  /// Throws DomainError on non-positive radii or angles outside the range.
  ChordSpec(double r1, double r2, double theta1, double theta2);

  double r1() const { return r1_; }
  double r2() const { return r2_; }
  double theta1() const { return theta1_; }
  double theta2() const { return theta2_; }
  double dtheta() const { return theta2_ - theta1_; }
  double theta_at(double t) const { return theta1_ + t * dtheta(); }
  DiskPoint start() const { return DiskPoint::from_polar(r1_, theta1_); }
  DiskPoint end() const { return DiskPoint::from_polar(r2_, theta2_); }

 private:
  double r1_, r2_, theta1_, theta2_;
};

/// r_hat(t) on the chord; r_hat(0) = r1, r_hat(1) = r2.
double chord_radius(const ChordSpec& spec, double t);
ChordRadius chord_radius_jet(const ChordSpec& spec, double t);

/// Every intermediate quantity of the preimage derivative chain at one
/// parameter value. Hatted values live on the image chord; the rest on the
/// preimage curve x(t) = X(r_hat sqrt(beta), atan2(sin th_hat, s cos th_hat)).
struct PreimageJet {
  double r_hat, dr_hat, d2r_hat;
  double theta_hat, dtheta_hat;
  double beta, dbeta, dbeta_sq, d2beta;
  double r, dr, d2r;
  double theta, dtheta, d2theta;

  PolarJet polar() const { return {r, theta, dr, dtheta, d2r, d2theta}; }
};

/// Chain from a point of a geodesic with angular speed dtheta_hat; the second
/// derivative of r_hat follows from the geodesic equation.
PreimageJet preimage_jet(double r_hat, double theta_hat, double dr_hat, double dtheta_hat, double s);

/// Preimage of the chord under dilate_origin(1/s, 1), with analytic
/// derivatives. Requires s in (0, 1].
ParamCurve preimage_curve(const ChordSpec& spec, double s);
PreimageJet preimage_jet(const ChordSpec& spec, double s, double t);

/// Curvature of the preimage curve split as
/// k_g = P0 (P1 r_hat'^2 + P2 r_hat' dtheta_hat + P3 dtheta_hat^2).
struct PCoefficients {
  double P0, P1, P2, P2sq, P3;
  double r_hat, beta, s, v;

  double discriminant() const { return P2sq - 4.0 * P1 * P3; }
  double curvature(double dr_hat, double dtheta_hat) const {
    return P0 * (P1 * dr_hat * dr_hat + P2 * dr_hat * dtheta_hat + P3 * dtheta_hat * dtheta_hat);
  }
};

PCoefficients p_coefficients(double r_hat, double theta_hat, double s, double dr_hat,
                             double dtheta_hat);

/// Discriminant in its factored form, the expression the sign argument
/// bounds term by term.
double discriminant_factored(double r_hat, double theta_hat, double s);

/// The two inequalities that bound the discriminant, as margins (> 0 when
/// they hold). They evaluate the scalar inequalities at (2 r_hat, sqrt(beta))
/// and (r_hat, sqrt(beta)).
double phi_scaling_margin(double r_hat, double beta);
double psi_product_margin(double r_hat, double beta);

/// Curve with r and theta both linear in t.
ParamCurve gamma_curve(const DiskPoint& x1, const DiskPoint& x2);
/// Closed-form curvature of the linear-in-polar curve at radius r.
double gamma_curvature(double r, double dr, double dtheta);

struct SideOrderingViolation {
  std::size_t sample;
  double t;
  std::string check;
  double r_x, r_chord, r_gamma, kg_x, kg_gamma;
};

struct SideOrderingReport {
  std::size_t samples = 0;
  double min_inner_gap = 0.0;   // min over interior samples of r_chord - r_x
  double min_outer_gap = 0.0;   // min over interior samples of r_gamma - r_chord
  double max_kg_x = 0.0;        // should stay negative
  double min_kg_gamma = 0.0;    // should stay positive
  std::size_t violation_count = 0;
  std::optional<SideOrderingViolation> first_violation;

  bool pass() const { return violation_count == 0; }
  nlohmann::json to_json() const;
};

inline constexpr double kSideOrderingSlack = 1e-9;

/// Checks along the preimage curve x(t): k_g(x) < 0, k_g(gamma) > 0, and
/// r_x <= r_chord <= r_gamma on each ray from 0, where the chord is the
/// geodesic [x1, x2] between the preimage endpoints. Radii are compared on
/// the ray through x(t).
SideOrderingReport side_ordering(const ChordSpec& spec, double s, std::size_t samples,
                                 double slack = kSideOrderingSlack);

}  // namespace hypexpand
