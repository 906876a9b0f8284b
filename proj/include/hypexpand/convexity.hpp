#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypexpand/dilation.hpp"
#include "hypexpand/disk.hpp"
#include "hypexpand/planar.hpp"
#include "hypexpand/rng.hpp"

namespace hypexpand {

/// Tolerance on Klein-model orientation values for vertex convexity tests.
inline constexpr double kConvexVertexTol = 1e-12;
/// Points this close (Klein distance) to a region boundary count as inside.
inline constexpr double kBoundaryTol = 1e-9;
/// Defect above which a sampled region is declared not h-convex.
inline constexpr double kConvexDefectThreshold = 1e-6;

/// Poincare -> Klein: 2p / (1 + |p|^2). The Klein radius is tanh r.
Vec2 to_klein(const DiskPoint& p);
/// Throws DomainError unless |q| < 1.
DiskPoint from_klein(Vec2 q);

/// Simple, counterclockwise polygon with geodesic edges.
class GeodesicPolygon {
 public:
  /// Throws DomainError for fewer than 3 vertices, a self-intersecting
  /// boundary or clockwise orientation.
  explicit GeodesicPolygon(std::vector<DiskPoint> vertices);

  const std::vector<DiskPoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vec2>& klein() const { return klein_; }

 private:
  std::vector<DiskPoint> vertices_;
  std::vector<Vec2> klein_;
};

/// Closed boundary loop of a Jordan domain, sampled densely. Consecutive
/// samples are joined by geodesic edges, so every membership and distance
/// query runs on the Klein image, where those edges are straight.
class SampledRegion {
 public:
  static constexpr std::size_t kMinSamples = 64;

  /// The loop is closed if the caller did not repeat the first sample.
  /// Throws DomainError for fewer than kMinSamples distinct samples, a
  /// non-simple loop or clockwise orientation.
  SampledRegion(std::vector<DiskPoint> boundary, nlohmann::json provenance,
                std::vector<std::size_t> corners = {});

  /// Closed loop: front() and back() coincide.
  const std::vector<DiskPoint>& boundary() const { return boundary_; }
  /// Distinct samples (boundary().size() - 1).
  std::size_t sample_count() const { return klein_.size(); }
  const std::vector<Vec2>& klein() const { return klein_; }
  const std::vector<std::size_t>& corners() const { return corners_; }
  const nlohmann::json& provenance() const { return provenance_; }

 private:
  std::vector<DiskPoint> boundary_;
  std::vector<Vec2> klein_;  // open loop
  std::vector<std::size_t> corners_;
  nlohmann::json provenance_;
};

/// Smallest h-convex polygon containing the points. Throws DomainError for
/// fewer than 3 points or when all points lie on one geodesic.
GeodesicPolygon hyperbolic_hull(std::span<const DiskPoint> points);

bool is_hconvex(const GeodesicPolygon& poly);

/// Image of the polygon under translate(c, .).
GeodesicPolygon translate(const DiskPoint& c, const GeodesicPolygon& poly);

bool region_contains(const SampledRegion& region, const DiskPoint& p);
/// Klein-plane distance from p to the region boundary; 0 if p is inside.
double outside_distance(const SampledRegion& region, const DiskPoint& p);

/// Largest outside excursion of geodesic chords between boundary samples.
/// All corner pairs are tested, plus pair_samples stratified pairs; each
/// chord is probed at segment_samples interior points. Sample sets are
/// nested, so raising either count never lowers the result. Throws
/// DomainError when a count is below 16.
double convexity_defect(const SampledRegion& region, std::size_t pair_samples,
                        std::size_t segment_samples);

/// Boundary of the polygon with samples_per_edge points per geodesic edge
/// (raised if needed to reach SampledRegion::kMinSamples).
SampledRegion sample_polygon(const GeodesicPolygon& poly, std::size_t samples_per_edge);

/// Image of the sampled polygon boundary under dilate(params, .).
SampledRegion dilate_region(const GeodesicPolygon& poly, const DilationParams& params,
                            std::size_t samples_per_edge);

struct PolygonSampling {
  int min_points = 4;
  int max_points = 12;
  double min_radius = 0.2;
  double max_radius = 3.0;
};

/// Random h-convex polygon: hull of random points, moved by an isometry so
/// that an interior point of the hull lands on center.
GeodesicPolygon random_hconvex_polygon(Rng& rng, const DiskPoint& center,
                                       const PolygonSampling& sampling = {});

nlohmann::json polygon_to_json(const GeodesicPolygon& poly);
GeodesicPolygon polygon_from_json(const nlohmann::json& doc);
nlohmann::json region_to_json(const SampledRegion& region);
SampledRegion region_from_json(const nlohmann::json& doc);

}  // namespace hypexpand
