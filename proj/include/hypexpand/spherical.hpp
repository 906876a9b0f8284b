#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypexpand/planar.hpp"
#include "hypexpand/rng.hpp"

namespace hypexpand {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(Vec3 a);

/// Unit vector on S^2.
class SpherePoint {
 public:
  SpherePoint() = default;
  /// Normalizes; throws DomainError for a zero or non-finite vector.
  static SpherePoint from_vector(Vec3 v);
  const Vec3& v() const { return v_; }

 private:
  Vec3 v_{0.0, 0.0, 1.0};
};

double angular_distance(const SpherePoint& a, const SpherePoint& b);

/// Orthonormal frame (e1, e2) of the tangent plane at a center. The base
/// frame is fixed by the center alone; `rotation` turns it about the center.
struct TangentFrame {
  Vec3 center;
  Vec3 e1;
  Vec3 e2;

  static TangentFrame at(const SpherePoint& c, double rotation = 0.0);

  /// Geodesic polar coordinates (rho, theta) about the center.
  std::array<double, 2> polar(const SpherePoint& p) const;
  SpherePoint exp(double rho, double theta) const;
  /// Central projection onto the tangent plane; great circles become lines.
  /// Throws DomainError outside the open hemisphere.
  Vec2 gnomonic(const SpherePoint& p) const;
  SpherePoint from_gnomonic(Vec2 q) const;
};

/// Rotation of p by angle about the axis through c.
SpherePoint rotate_about(const SpherePoint& c, double angle, const SpherePoint& p);

/// Geodesic-polar analog of the hyperbolic asymmetric dilation, about c:
/// rho' = rho sqrt(k1^2 cos^2 + k2^2 sin^2), theta' = atan2(k2 sin, k1 cos).
/// Throws DomainError unless k1, k2 in (0, 1] and p lies in the open
/// hemisphere of c.
SpherePoint s_contract(const SpherePoint& c, double k1, double k2, const SpherePoint& p,
                       double frame_rotation = 0.0);

/// Simple counterclockwise (seen from the center) polygon inside the open
/// hemisphere about its center.
class SphericalPolygon {
 public:
  SphericalPolygon(std::vector<SpherePoint> vertices, SpherePoint center);

  const std::vector<SpherePoint>& vertices() const { return vertices_; }
  const SpherePoint& center() const { return center_; }
  const std::vector<Vec2>& gnomonic() const { return gnomonic_; }
  std::size_t size() const { return vertices_.size(); }

 private:
  std::vector<SpherePoint> vertices_;
  SpherePoint center_;
  std::vector<Vec2> gnomonic_;
};

bool is_sconvex(const SphericalPolygon& poly);

/// Sampled closed boundary on the sphere; edges between samples are
/// great-circle arcs, i.e. straight in the gnomonic chart about the center.
class SphericalRegion {
 public:
  SphericalRegion(std::vector<SpherePoint> boundary, SpherePoint center,
                  std::vector<std::size_t> corners = {});

  const std::vector<SpherePoint>& boundary() const { return boundary_; }
  const SpherePoint& center() const { return center_; }
  const std::vector<Vec2>& gnomonic() const { return gnomonic_; }
  const std::vector<std::size_t>& corners() const { return corners_; }

 private:
  std::vector<SpherePoint> boundary_;
  SpherePoint center_;
  std::vector<Vec2> gnomonic_;
  std::vector<std::size_t> corners_;
};

/// Point at fraction t along the minor great-circle arc from a to b.
SpherePoint slerp(const SpherePoint& a, const SpherePoint& b, double t);

SphericalRegion sample_spherical_polygon(const SphericalPolygon& poly, std::size_t samples_per_edge);
SphericalRegion contract_region(const SphericalPolygon& poly, double k1, double k2,
                                std::size_t samples_per_edge, double frame_rotation = 0.0);

/// Largest gnomonic-plane distance by which a sampled great-circle chord
/// between boundary samples leaves the region. Nested sampling, as for the
/// hyperbolic defect.
double s_convexity_defect(const SphericalRegion& region, std::size_t pair_samples,
                          std::size_t segment_samples);
double s_convexity_defect(const SphericalPolygon& poly, std::size_t samples_per_edge,
                          std::size_t pair_samples, std::size_t segment_samples);

/// Random convex polygon containing c, vertices within max_rho of c.
SphericalPolygon random_sconvex_polygon(Rng& rng, const SpherePoint& c, double max_rho = 1.2);
SpherePoint random_sphere_point(Rng& rng);

struct ConjectureOptions {
  std::size_t samples_per_edge = 32;
  std::size_t pair_samples = 256;
  std::size_t segment_samples = 32;
  double threshold = 1e-6;
  /// Every n-th trial uses k1 == k2.
  std::size_t symmetric_every = 4;
  double min_factor = 0.05;
  unsigned threads = 1;
};

struct ConjectureTrialResult {
  std::size_t index;
  std::uint64_t seed;
  double k1;
  double k2;
  std::size_t n_vertices;
  double defect;
  bool rechecked;
  bool exceeded;
};

struct ConjectureReport {
  std::uint64_t seed;
  std::vector<ConjectureTrialResult> trials;
  ConjectureOptions options;

  std::size_t exceedances() const;
  std::size_t symmetric_exceedances() const;
  nlohmann::json to_json() const;
};

ConjectureTrialResult run_conjecture_trial(std::uint64_t seed, std::size_t index,
                                           const ConjectureOptions& options);
ConjectureReport conjecture_trial(std::uint64_t seed, std::size_t trials,
                                  const ConjectureOptions& options = {});

}  // namespace hypexpand
