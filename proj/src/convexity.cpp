#include "hypexpand/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypexpand/errors.hpp"

namespace hypexpand {

Vec2 to_klein(const DiskPoint& p) {
  const double k = std::tanh(p.r());
  return {k * std::cos(p.theta()), k * std::sin(p.theta())};
}

DiskPoint from_klein(Vec2 q) {
  const double n = std::hypot(q.x, q.y);
  if (!(n < 1.0)) throw DomainError("from_klein: point outside the open unit disk");
  return DiskPoint::from_polar(std::atanh(n), n == 0.0 ? 0.0 : std::atan2(q.y, q.x));
}

namespace {

std::vector<Vec2> klein_of(std::span<const DiskPoint> pts) {
  std::vector<Vec2> out;
  out.reserve(pts.size());
  for (const DiskPoint& p : pts) out.push_back(to_klein(p));
  return out;
}

nlohmann::json polar_array(std::span<const DiskPoint> pts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const DiskPoint& p : pts) arr.push_back({p.r(), p.theta()});
  return arr;
}

std::vector<DiskPoint> polar_points(const nlohmann::json& arr) {
  std::vector<DiskPoint> pts;
  pts.reserve(arr.size());
  for (const auto& e : arr) pts.push_back(DiskPoint::from_polar(e.at(0), e.at(1)));
  return pts;
}

}  // namespace

GeodesicPolygon::GeodesicPolygon(std::vector<DiskPoint> vertices)
    : vertices_(std::move(vertices)), klein_(klein_of(vertices_)) {
  if (vertices_.size() < 3) throw DomainError("GeodesicPolygon: need at least 3 vertices");
  if (!is_simple_polygon(klein_)) throw DomainError("GeodesicPolygon: boundary is not simple");
  if (!(signed_area(klein_) > 0.0)) {
    throw DomainError("GeodesicPolygon: vertices must be counterclockwise");
  }
}

SampledRegion::SampledRegion(std::vector<DiskPoint> boundary, nlohmann::json provenance,
                             std::vector<std::size_t> corners)
    : boundary_(std::move(boundary)), corners_(std::move(corners)), provenance_(std::move(provenance)) {
  if (boundary_.empty()) throw DomainError("SampledRegion: empty boundary");
  const DiskPoint& first = boundary_.front();
  const DiskPoint& last = boundary_.back();
  const bool closed = boundary_.size() > 1 && std::abs(first.x() - last.x()) <= 1e-12 &&
                      std::abs(first.y() - last.y()) <= 1e-12;
  if (!closed) boundary_.push_back(first);
  klein_ = klein_of(std::span(boundary_).first(boundary_.size() - 1));
  if (klein_.size() < kMinSamples) {
    throw DomainError("SampledRegion: need at least " + std::to_string(kMinSamples) + " samples");
  }
  for (std::size_t c : corners_) {
    if (c >= klein_.size()) throw DomainError("SampledRegion: corner index out of range");
  }
  if (!(signed_area(klein_) > 0.0)) {
    throw DomainError("SampledRegion: boundary must be counterclockwise");
  }
  if (!is_simple_polygon(klein_)) throw DomainError("SampledRegion: boundary is not simple");
}

GeodesicPolygon hyperbolic_hull(std::span<const DiskPoint> points) {
  if (points.size() < 3) throw DomainError("hyperbolic_hull: need at least 3 points");
  const std::vector<Vec2> k = klein_of(points);
  const std::vector<std::size_t> idx = convex_hull_indices(k);
  // Round-off can leave a sliver hull for collinear input; measure its area.
  double area2 = 0.0;
  double extent = 0.0;
  for (std::size_t i = 0; idx.size() >= 3 && i < idx.size(); ++i) {
    const Vec2 a = k[idx[i]];
    const Vec2 b = k[idx[(i + 1) % idx.size()]];
    area2 += cross(a, b);
    extent = std::max(extent, std::hypot(b.x - a.x, b.y - a.y));
  }
  if (idx.size() < 3 || area2 <= 1e-12 * extent * extent) {
    throw DomainError("hyperbolic_hull: points lie on one geodesic");
  }
  std::vector<DiskPoint> verts;
  verts.reserve(idx.size());
  for (std::size_t i : idx) verts.push_back(points[i]);
  return GeodesicPolygon(std::move(verts));
}

bool is_hconvex(const GeodesicPolygon& poly) {
  return is_convex_ccw(poly.klein(), kConvexVertexTol);
}

GeodesicPolygon translate(const DiskPoint& c, const GeodesicPolygon& poly) {
  std::vector<DiskPoint> out;
  out.reserve(poly.size());
  for (const DiskPoint& v : poly.vertices()) out.push_back(translate(c, v));
  return GeodesicPolygon(std::move(out));
}

bool region_contains(const SampledRegion& region, const DiskPoint& p) {
  return outside_distance(region, p) == 0.0;
}

double outside_distance(const SampledRegion& region, const DiskPoint& p) {
  return outside_distance(region.klein(), to_klein(p), kBoundaryTol);
}

double convexity_defect(const SampledRegion& region, std::size_t pair_samples,
                        std::size_t segment_samples) {
  if (pair_samples < 16 || segment_samples < 16) {
    throw DomainError("convexity_defect: sample counts must be at least 16");
  }
  return chord_defect(region.klein(), region.corners(), pair_samples, segment_samples, kBoundaryTol);
}

namespace {

std::vector<DiskPoint> sample_edges(const GeodesicPolygon& poly, std::size_t per_edge) {
  const auto& v = poly.vertices();
  std::vector<DiskPoint> out;
  out.reserve(v.size() * per_edge);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const DiskPoint& a = v[i];
    const DiskPoint& b = v[(i + 1) % v.size()];
    out.push_back(a);
    for (std::size_t j = 1; j < per_edge; ++j) {
      out.push_back(geodesic_point(a, b, static_cast<double>(j) / static_cast<double>(per_edge)));
    }
  }
  return out;
}

std::size_t effective_per_edge(const GeodesicPolygon& poly, std::size_t samples_per_edge) {
  if (samples_per_edge < 16) throw DomainError("samples_per_edge must be at least 16");
  const std::size_t needed = (SampledRegion::kMinSamples + poly.size() - 1) / poly.size();
  return std::max(samples_per_edge, needed);
}

std::vector<std::size_t> corner_indices(std::size_t count, std::size_t per_edge) {
  std::vector<std::size_t> c(count);
  for (std::size_t i = 0; i < count; ++i) c[i] = i * per_edge;
  return c;
}

}  // namespace

SampledRegion sample_polygon(const GeodesicPolygon& poly, std::size_t samples_per_edge) {
  const std::size_t per_edge = effective_per_edge(poly, samples_per_edge);
  nlohmann::json prov = {{"kind", "geodesic_polygon"},
                         {"samples_per_edge", per_edge},
                         {"vertices_polar", polar_array(poly.vertices())}};
  return SampledRegion(sample_edges(poly, per_edge), std::move(prov),
                       corner_indices(poly.size(), per_edge));
}

SampledRegion dilate_region(const GeodesicPolygon& poly, const DilationParams& params,
                            std::size_t samples_per_edge) {
  const std::size_t per_edge = effective_per_edge(poly, samples_per_edge);
  std::vector<DiskPoint> pts = sample_edges(poly, per_edge);
  for (DiskPoint& p : pts) p = dilate(params, p);
  nlohmann::json prov = {{"kind", "dilated_polygon"},
                         {"k1", params.k1()},
                         {"k2", params.k2()},
                         {"center_polar", {params.center().r(), params.center().theta()}},
                         {"samples_per_edge", per_edge},
                         {"vertices_polar", polar_array(poly.vertices())}};
  return SampledRegion(std::move(pts), std::move(prov), corner_indices(poly.size(), per_edge));
}

GeodesicPolygon random_hconvex_polygon(Rng& rng, const DiskPoint& center,
                                       const PolygonSampling& sampling) {
  for (;;) {
    const int m = rng.uniform_int(sampling.min_points, sampling.max_points);
    std::vector<DiskPoint> pts;
    pts.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      const double r = rng.uniform(sampling.min_radius, sampling.max_radius);
      pts.push_back(DiskPoint::from_polar(r, rng.uniform(-kPi, kPi)));
    }
    try {
      const GeodesicPolygon hull = hyperbolic_hull(pts);
      Vec2 centroid;
      for (const Vec2& q : hull.klein()) centroid = centroid + q;
      centroid = (1.0 / static_cast<double>(hull.size())) * centroid;
      const DiskPoint inner = from_klein(centroid);
      std::vector<DiskPoint> moved;
      moved.reserve(hull.size());
      for (const DiskPoint& v : hull.vertices()) {
        moved.push_back(translate(center, translate(negate(inner), v)));
      }
      return GeodesicPolygon(std::move(moved));
    } catch (const DomainError&) {
      // Degenerate draw (e.g. nearly collinear points); sample again.
    }
  }
}

nlohmann::json polygon_to_json(const GeodesicPolygon& poly) {
  return {{"vertices_polar", polar_array(poly.vertices())}};
}

GeodesicPolygon polygon_from_json(const nlohmann::json& doc) {
  return GeodesicPolygon(polar_points(doc.at("vertices_polar")));
}

nlohmann::json region_to_json(const SampledRegion& region) {
  nlohmann::json cart = nlohmann::json::array();
  for (const DiskPoint& p : region.boundary()) cart.push_back({p.x(), p.y()});
  return {{"boundary", std::move(cart)},
          {"boundary_polar", polar_array(region.boundary())},
          {"corners", region.corners()},
          {"provenance", region.provenance()}};
}

SampledRegion region_from_json(const nlohmann::json& doc) {
  std::vector<DiskPoint> pts;
  if (doc.contains("boundary_polar")) {
    pts = polar_points(doc.at("boundary_polar"));
  } else {
    for (const auto& e : doc.at("boundary")) pts.push_back(DiskPoint::from_cartesian(e.at(0), e.at(1)));
  }
  std::vector<std::size_t> corners;
  if (doc.contains("corners")) corners = doc.at("corners").get<std::vector<std::size_t>>();
  return SampledRegion(std::move(pts), doc.value("provenance", nlohmann::json::object()),
                       std::move(corners));
}

}  // namespace hypexpand
