#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "hypexpand/convexity.hpp"
#include "hypexpand/errors.hpp"
#include "support.hpp"

using namespace hypexpand;
using testing::random_point;

namespace {

std::vector<DiskPoint> circle(double r, std::size_t n) {
  std::vector<DiskPoint> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(DiskPoint::from_polar(r, -kPi + 2.0 * kPi * i / n));
  return pts;
}

// Disk of radius 1.5 with a dent pushed in around theta = 0.
SampledRegion crescent() {
  std::vector<DiskPoint> pts;
  const std::size_t n = 256;
  for (std::size_t i = 0; i < n; ++i) {
    const double th = -kPi + 2.0 * kPi * i / n;
    const double dent = std::exp(-th * th / 0.08);
    pts.push_back(DiskPoint::from_polar(1.5 * (1.0 - 0.7 * dent), th));
  }
  return SampledRegion(pts, {{"kind", "crescent"}});
}

// Half-plane membership for a convex polygon, straight edges in the Klein model.
bool inside_halfplanes(const GeodesicPolygon& poly, const DiskPoint& p) {
  const auto& k = poly.klein();
  const Vec2 q = to_klein(p);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (orient(k[i], k[(i + 1) % k.size()], q) < 0.0) return false;
  }
  return true;
}

GeodesicPolygon reflex_quad() {
  // Convex quadrilateral with one vertex pushed inward past the diagonal
  // joining its neighbours.
  return GeodesicPolygon({DiskPoint::from_polar(2.0, -1.2), DiskPoint::from_polar(0.2, 0.0),
                          DiskPoint::from_polar(2.0, 1.2), DiskPoint::from_polar(2.0, kPi)});
}

}  // namespace

TEST_CASE("Klein model") {
  CHECK(to_klein(DiskPoint{}).x == 0.0);
  const Vec2 q = to_klein(DiskPoint::from_cartesian(0.5, 0.0));
  CHECK(q.x == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(q.y == 0.0);
  Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    const DiskPoint p = random_point(rng, 6.0);
    const Vec2 k = to_klein(p);
    const double n2 = p.x() * p.x() + p.y() * p.y();
    CHECK(std::abs(k.x - 2.0 * p.x() / (1.0 + n2)) < 1e-12);
    CHECK(testing::cart_gap(from_klein(k), p) < 1e-12);
  }
  CHECK_THROWS_AS(from_klein({1.0, 0.0}), DomainError);
}

TEST_CASE("polygon validation") {
  const DiskPoint a = DiskPoint::from_polar(1.0, 0.0);
  const DiskPoint b = DiskPoint::from_polar(1.0, 2.0);
  const DiskPoint c = DiskPoint::from_polar(1.0, 4.0);
  CHECK_NOTHROW(GeodesicPolygon({a, b, c}));
  CHECK_THROWS_AS(GeodesicPolygon({a, c, b}), DomainError);
  CHECK_THROWS_AS(GeodesicPolygon({a, b}), DomainError);
  const DiskPoint d = DiskPoint::from_polar(1.0, 5.0);
  // Bow tie.
  CHECK_THROWS_AS(GeodesicPolygon({a, c, b, d}), DomainError);
}

TEST_CASE("hyperbolic hull") {
  Rng rng(9);
  SUBCASE("triangle") {
    const std::vector<DiskPoint> tri = {DiskPoint::from_polar(1.0, 0.0), DiskPoint::from_polar(2.0, 2.0),
                                        DiskPoint::from_polar(0.5, -2.0)};
    CHECK(hyperbolic_hull(tri).size() == 3);
  }
  SUBCASE("interior point is dropped") {
    std::vector<DiskPoint> pts = {DiskPoint::from_polar(2.0, 0.0), DiskPoint::from_polar(2.0, 2.0),
                                  DiskPoint::from_polar(2.0, 4.0), DiskPoint::from_polar(0.1, 1.0)};
    const GeodesicPolygon h = hyperbolic_hull(pts);
    CHECK(h.size() == 3);
    for (const auto& v : h.vertices()) CHECK(v.r() == doctest::Approx(2.0));
  }
  SUBCASE("idempotent and containing its inputs") {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<DiskPoint> pts;
      for (int i = 0; i < 10; ++i) pts.push_back(random_point(rng));
      const GeodesicPolygon h = hyperbolic_hull(pts);
      const GeodesicPolygon hh = hyperbolic_hull(h.vertices());
      REQUIRE(hh.size() == h.size());
      for (std::size_t i = 0; i < h.size(); ++i) {
        CHECK(testing::cart_gap(h.vertices()[i], hh.vertices()[i]) == 0.0);
      }
      CHECK(is_hconvex(h));
      const SampledRegion region = sample_polygon(h, 32);
      for (const auto& p : pts) CHECK(region_contains(region, p));
    }
  }
  SUBCASE("points on one geodesic are rejected") {
    std::vector<DiskPoint> pts = {DiskPoint::from_polar(1.0, 0.5), DiskPoint{}, DiskPoint::from_polar(2.0, 0.5 - kPi)};
    CHECK_THROWS_AS(hyperbolic_hull(pts), DomainError);
  }
}

TEST_CASE("convexity predicate") {
  Rng rng(10);
  CHECK(is_hconvex(GeodesicPolygon({DiskPoint::from_polar(3.0, 0.0), DiskPoint::from_polar(3.0, 0.1),
                                    DiskPoint::from_polar(0.2, 2.0)})));
  CHECK_FALSE(is_hconvex(reflex_quad()));
  for (int i = 0; i < 100; ++i) {
    const GeodesicPolygon p = random_hconvex_polygon(rng, random_point(rng, 1.0));
    const DiskPoint c = random_point(rng, 2.0);
    CHECK(is_hconvex(p));
    CHECK(is_hconvex(translate(c, p)));
  }
  const DiskPoint c = DiskPoint::from_polar(1.0, 0.4);
  CHECK_FALSE(is_hconvex(translate(c, reflex_quad())));
}

TEST_CASE("sampled regions") {
  SUBCASE("loop closure and counts") {
    const SampledRegion r(circle(1.0, 64), {});
    CHECK(r.sample_count() == 64);
    CHECK(r.boundary().size() == 65);
    auto closed = circle(1.0, 64);
    closed.push_back(closed.front());
    CHECK(SampledRegion(closed, {}).sample_count() == 64);
    CHECK_THROWS_AS(SampledRegion(circle(1.0, 63), {}), DomainError);
    auto cw = circle(1.0, 64);
    std::reverse(cw.begin(), cw.end());
    CHECK_THROWS_AS(SampledRegion(cw, {}), DomainError);
    CHECK_THROWS_AS(SampledRegion(circle(1.0, 64), {}, {64}), DomainError);
  }
  SUBCASE("membership on a circle") {
    const SampledRegion r(circle(1.0, 128), {});
    CHECK(region_contains(r, DiskPoint{}));
    CHECK_FALSE(region_contains(r, DiskPoint::from_polar(1.2, 0.3)));
    CHECK(outside_distance(r, DiskPoint::from_polar(1.2, 0.3)) > 0.0);
    // Boundary samples count as inside.
    CHECK(region_contains(r, r.boundary()[5]));
  }
  SUBCASE("membership agrees with half-plane tests") {
    Rng rng(12);
    for (int trial = 0; trial < 10; ++trial) {
      const GeodesicPolygon poly = random_hconvex_polygon(rng, DiskPoint{});
      const SampledRegion region = sample_polygon(poly, 32);
      for (int i = 0; i < 100; ++i) {
        const DiskPoint p = random_point(rng, 3.5);
        const bool a = region_contains(region, p);
        const bool b = inside_halfplanes(poly, p);
        if (a != b) {
          const auto& k = poly.klein();
          double d = 1.0;
          for (std::size_t j = 0; j < k.size(); ++j) {
            d = std::min(d, distance_to_segment(to_klein(p), k[j], k[(j + 1) % k.size()]));
          }
          CHECK(d < kBoundaryTol);
        }
      }
    }
  }
}

TEST_CASE("convexity defect") {
  Rng rng(13);
  SUBCASE("polygon boundary") {
    for (int i = 0; i < 20; ++i) {
      const GeodesicPolygon poly = random_hconvex_polygon(rng, random_point(rng, 1.0));
      CHECK(convexity_defect(sample_polygon(poly, 32), 256, 32) < 1e-9);
    }
  }
  SUBCASE("crescent") { CHECK(convexity_defect(crescent(), 256, 32) > 1e-3); }
  SUBCASE("reflex quadrilateral") {
    CHECK(convexity_defect(sample_polygon(reflex_quad(), 32), 64, 32) > 1e-3);
  }
  SUBCASE("sample counts below 16 are rejected") {
    CHECK_THROWS_AS(convexity_defect(crescent(), 8, 32), DomainError);
    CHECK_THROWS_AS(convexity_defect(crescent(), 32, 15), DomainError);
  }
  SUBCASE("refinement never lowers the defect") {
    const SampledRegion r = crescent();
    double prev = 0.0;
    for (std::size_t n : {16, 32, 64, 128, 256}) {
      const double d = convexity_defect(r, n, n);
      CHECK(d >= prev);
      prev = d;
    }
    const GeodesicPolygon poly = random_hconvex_polygon(rng, DiskPoint{});
    const SampledRegion image = dilate_region(poly, DilationParams::about_origin(0.25, 1.0), 32);
    CHECK(convexity_defect(image, 16, 16) <= convexity_defect(image, 64, 16));
    CHECK(convexity_defect(image, 64, 16) <= convexity_defect(image, 64, 64));
  }
}

TEST_CASE("dilated regions") {
  Rng rng(14);
  SUBCASE("identity keeps the vertices") {
    const GeodesicPolygon poly = random_hconvex_polygon(rng, DiskPoint::from_polar(0.5, 1.0));
    const SampledRegion r = dilate_region(poly, DilationParams(poly.vertices()[0], 1.0, 1.0), 32);
    CHECK(convexity_defect(r, 256, 32) < 1e-9);
    REQUIRE(r.corners().size() == poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      CHECK(hyperbolic_distance(r.boundary()[r.corners()[i]], poly.vertices()[i]) < 1e-10);
    }
    CHECK(r.provenance().at("kind") == "dilated_polygon");
  }
  SUBCASE("symmetric expansion about the origin") {
    const GeodesicPolygon poly = random_hconvex_polygon(rng, DiskPoint{});
    CHECK(convexity_defect(dilate_region(poly, DilationParams::about_origin(2.0, 2.0), 32), 256, 32) < 1e-6);
  }
  SUBCASE("one-axis expansion about an interior point") {
    const DiskPoint c = DiskPoint::from_polar(0.7, -0.5);
    for (int i = 0; i < 10; ++i) {
      const GeodesicPolygon poly = random_hconvex_polygon(rng, c);
      CHECK(convexity_defect(dilate_region(poly, DilationParams(c, 2.0, 1.0), 32), 256, 32) < 1e-6);
    }
  }
  SUBCASE("too few samples per edge") {
    const GeodesicPolygon poly = random_hconvex_polygon(rng, DiskPoint{});
    CHECK_THROWS_AS(dilate_region(poly, DilationParams::about_origin(2.0, 1.0), 8), DomainError);
  }
  SUBCASE("small polygons are sampled up to the minimum") {
    const GeodesicPolygon tri({DiskPoint::from_polar(1.0, 0.0), DiskPoint::from_polar(1.0, 2.0),
                               DiskPoint::from_polar(1.0, 4.0)});
    CHECK(sample_polygon(tri, 16).sample_count() >= SampledRegion::kMinSamples);
  }
}

TEST_CASE("random polygons contain their center") {
  Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    const DiskPoint c = random_point(rng, 1.0);
    const GeodesicPolygon poly = random_hconvex_polygon(rng, c);
    CHECK(poly.size() >= 3);
    CHECK(poly.size() <= 12);
    CHECK(inside_halfplanes(poly, c));
  }
}

TEST_CASE("JSON round trip") {
  Rng rng(16);
  const GeodesicPolygon poly = random_hconvex_polygon(rng, DiskPoint{});
  const GeodesicPolygon back = polygon_from_json(nlohmann::json::parse(polygon_to_json(poly).dump()));
  REQUIRE(back.size() == poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    CHECK(testing::cart_gap(back.vertices()[i], poly.vertices()[i]) < 1e-15);
  }
  const SampledRegion r = dilate_region(poly, DilationParams::about_origin(2.0, 1.0), 16);
  const nlohmann::json doc = region_to_json(r);
  CHECK(doc.contains("boundary"));
  CHECK(doc.contains("provenance"));
  const SampledRegion r2 = region_from_json(nlohmann::json::parse(doc.dump()));
  CHECK(r2.sample_count() == r.sample_count());
  CHECK(r2.corners() == r.corners());
  CHECK(convexity_defect(r2, 64, 16) == convexity_defect(r, 64, 16));
  // Cartesian-only documents are accepted too.
  nlohmann::json cart_only = {{"boundary", doc.at("boundary")}, {"provenance", doc.at("provenance")}};
  CHECK(region_from_json(cart_only).sample_count() == r.sample_count());
}
