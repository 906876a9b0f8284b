#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hypexpand {

// Each lemma is exposed as a margin: positive exactly when the inequality
// holds strictly at that point.

/// y^3 (sinh x - x) - (sinh xy - xy), for x > 0, 0 < y < 1.
double lemma_sinh_scaling(double x, double y);
/// sinh xy - y^3 sinh x - xy + x y^3 via its Taylor series
/// y^3 sum_{k>=2} x^(2k+1) (y^(2k-2) - 1) / (2k+1)!, truncated after max_k.
double sinh_scaling_series(double x, double y, int max_k = 200);

/// y^2 (sinh 2x - 2x) / (4 (1 - y^2)) - x psi(xy) psi(x) / (psi(x) - psi(xy)).
/// Throws DegenerateError if psi(x) - psi(xy) <= 0.
double lemma_coth_ratio(double x, double y);
/// f(a, y) = (coth a - y coth ay) / (psi(ay) psi(a)) + 4 (1 - 1/y^2) / (sinh 2a - 2a),
/// decreasing in y on (0, 1) with f -> 0 as y -> 1.
double coth_ratio_f(double a, double y);

/// x^3 (coth x + x (1 - coth^2 x)) - 6 (x coth x - 1)^2.
double lemma_coth_poly(double x);
/// The same margin multiplied by sinh^2 x.
double coth_poly_I(double x);
/// sum_{k>=3} 2^(2k+2) x^(2k+4) / (2k+4)! (2k+3)(k-1)(k-2), truncated after max_k.
double coth_poly_series(double x, int max_k = 200);

/// sin xy - y sin x, for x in (0, pi), y in [0, 1].
double lemma_sin_scaling(double x, double y);
/// d/dx of the sin scaling margin: y (cos xy - cos x).
double sin_scaling_slope(double x, double y);

struct GridAxis {
  std::string name;
  double lo;
  double hi;
  std::size_t count;
  std::string spacing;  // "log" or "cluster" (denser toward both ends)

  std::vector<double> values() const;
  nlohmann::json to_json() const;
};

struct GridViolation {
  double x;
  double y;
  double margin;
};

struct GridReport {
  std::string lemma;
  std::vector<GridAxis> axes;
  double min_margin = 0.0;
  std::size_t points = 0;
  std::size_t violation_count = 0;
  std::vector<GridViolation> violations;  // first few, for diagnosis

  bool pass() const { return violation_count == 0 && min_margin > 0.0; }
  nlohmann::json to_json() const;
};

/// Boundary inset for open domains.
inline constexpr double kLemmaInset = 1e-3;

GridReport verify_sinh_scaling(std::size_t n);
GridReport verify_coth_ratio(std::size_t n);
/// Evaluated at x = a y over the (a, y) grid of the coth ratio lemma, the
/// arguments at which that lemma's monotonicity argument applies it.
GridReport verify_coth_poly(std::size_t n);
GridReport verify_sin_scaling(std::size_t n);

/// Largest relative gap between a series identity and direct evaluation.
struct SeriesCheck {
  std::string identity;
  double max_relative_error;
  std::size_t points;
  nlohmann::json to_json() const;
};
SeriesCheck check_sinh_scaling_series(std::size_t n);
SeriesCheck check_coth_poly_series(std::size_t n);

}  // namespace hypexpand
