#include <cmath>

#include "doctest.h"
#include "hypexpand/disk.hpp"
#include "hypexpand/errors.hpp"
#include "hypexpand/spherical.hpp"

using namespace hypexpand;

namespace {

SpherePoint sp(double x, double y, double z) { return SpherePoint::from_vector({x, y, z}); }

double gap(const SpherePoint& a, const SpherePoint& b) { return norm(a.v() - b.v()); }

// Spherical triangle / quad about the north pole given in (rho, theta).
SphericalPolygon polar_polygon(std::initializer_list<std::array<double, 2>> pts) {
  const SpherePoint c = sp(0, 0, 1);
  const TangentFrame f = TangentFrame::at(c);
  std::vector<SpherePoint> v;
  for (const auto& p : pts) v.push_back(f.exp(p[0], p[1]));
  return SphericalPolygon(std::move(v), c);
}

}  // namespace

TEST_CASE("sphere points and frames") {
  CHECK(norm(sp(3, 4, 0).v()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(sp(0, 0, 0), DomainError);
  CHECK_THROWS_AS(sp(NAN, 0, 1), DomainError);
  CHECK(angular_distance(sp(1, 0, 0), sp(0, 1, 0)) == doctest::Approx(kPi / 2.0));
  CHECK(angular_distance(sp(1, 0, 0), sp(1, 1e-9, 0)) == doctest::Approx(1e-9).epsilon(1e-6));

  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const SpherePoint c = random_sphere_point(rng);
    const TangentFrame f = TangentFrame::at(c, rng.uniform(-kPi, kPi));
    CHECK(std::abs(dot(f.e1, c.v())) < 1e-14);
    CHECK(std::abs(dot(f.e2, c.v())) < 1e-14);
    CHECK(std::abs(dot(f.e1, f.e2)) < 1e-14);
    CHECK(dot(cross(f.e1, f.e2), c.v()) == doctest::Approx(1.0));

    const double rho = rng.uniform(0.01, 1.5);
    const double th = rng.uniform(-kPi, kPi);
    const SpherePoint p = f.exp(rho, th);
    CHECK(angular_distance(c, p) == doctest::Approx(rho).epsilon(1e-12));
    const auto pol = f.polar(p);
    CHECK(pol[0] == doctest::Approx(rho).epsilon(1e-12));
    CHECK(std::abs(std::remainder(pol[1] - th, 2.0 * kPi)) < 1e-12);
    const Vec2 g = f.gnomonic(p);
    CHECK(std::hypot(g.x, g.y) == doctest::Approx(std::tan(rho)).epsilon(1e-12));
    CHECK(gap(f.from_gnomonic(g), p) < 1e-14);
  }
  CHECK_THROWS_AS(TangentFrame::at(sp(0, 0, 1)).gnomonic(sp(1, 0, -0.1)), DomainError);
}

TEST_CASE("great circles are straight in the gnomonic chart") {
  Rng rng(9);
  const SpherePoint c = sp(0.3, -0.2, 1.0);
  const TangentFrame f = TangentFrame::at(c);
  for (int i = 0; i < 50; ++i) {
    const SpherePoint a = f.exp(rng.uniform(0.1, 1.2), rng.uniform(-kPi, kPi));
    const SpherePoint b = f.exp(rng.uniform(0.1, 1.2), rng.uniform(-kPi, kPi));
    const Vec2 ga = f.gnomonic(a), gb = f.gnomonic(b);
    for (double t : {0.2, 0.5, 0.9}) {
      const Vec2 gp = f.gnomonic(slerp(a, b, t));
      CHECK(std::abs(orient(ga, gb, gp)) < 1e-10 * (1.0 + std::hypot(gb.x - ga.x, gb.y - ga.y)));
    }
  }
  CHECK_THROWS_AS(slerp(sp(1, 0, 0), sp(-1, 0, 0), 0.5), DomainError);
}

TEST_CASE("spherical contraction") {
  const SpherePoint c = sp(0, 0, 1);
  const TangentFrame f = TangentFrame::at(c);
  SUBCASE("examples") {
    const SpherePoint p = f.exp(1.0, 0.0);
    CHECK(gap(s_contract(c, 1.0, 1.0, p), p) < 1e-15);
    const auto a = f.polar(s_contract(c, 0.5, 1.0, p));
    CHECK(a[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(a[1]) < 1e-14);
    const auto b = f.polar(s_contract(c, 0.5, 1.0, f.exp(1.0, kPi / 4.0)));
    CHECK(b[0] == doctest::Approx(std::sqrt(0.625)).epsilon(1e-14));
    CHECK(b[1] == doctest::Approx(std::atan(2.0)).epsilon(1e-14));
    CHECK(gap(s_contract(c, 0.3, 0.6, c), c) == 0.0);
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(s_contract(c, 0.0, 1.0, f.exp(1.0, 0.0)), DomainError);
    CHECK_THROWS_AS(s_contract(c, 1.2, 1.0, f.exp(1.0, 0.0)), DomainError);
    CHECK_THROWS_AS(s_contract(c, 0.5, 1.0, f.exp(kPi / 2.0 + 0.1, 0.0)), DomainError);
  }
  SUBCASE("never moves points away from the center") {
    Rng rng(12);
    for (int i = 0; i < 500; ++i) {
      const SpherePoint cc = random_sphere_point(rng);
      const SpherePoint p = TangentFrame::at(cc).exp(rng.uniform(0.0, 1.5), rng.uniform(-kPi, kPi));
      const double k1 = rng.uniform(0.05, 1.0), k2 = rng.uniform(0.05, 1.0);
      CHECK(angular_distance(cc, s_contract(cc, k1, k2, p, rng.uniform(-kPi, kPi))) <=
            angular_distance(cc, p) * (1.0 + 1e-14) + 1e-15);
    }
  }
  SUBCASE("symmetric factors do not depend on the frame") {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
      const SpherePoint cc = random_sphere_point(rng);
      const SpherePoint p = TangentFrame::at(cc).exp(rng.uniform(0.0, 1.5), rng.uniform(-kPi, kPi));
      const double k = rng.uniform(0.05, 1.0);
      const SpherePoint a = s_contract(cc, k, k, p, 0.0);
      const SpherePoint b = s_contract(cc, k, k, p, rng.uniform(-kPi, kPi));
      CHECK(gap(a, b) < 1e-12);
      // Stays on the great circle through c and p.
      CHECK(std::abs(dot(cross(cc.v(), p.v()), a.v())) < 1e-12);
    }
  }
  SUBCASE("rotating the frame by a quarter turn swaps the factors") {
    Rng rng(14);
    for (int i = 0; i < 100; ++i) {
      const SpherePoint cc = random_sphere_point(rng);
      const SpherePoint p = TangentFrame::at(cc).exp(rng.uniform(0.0, 1.5), rng.uniform(-kPi, kPi));
      const double k1 = rng.uniform(0.05, 1.0), k2 = rng.uniform(0.05, 1.0);
      CHECK(gap(s_contract(cc, k1, k2, p, 0.0), s_contract(cc, k2, k1, p, kPi / 2.0)) < 1e-10);
    }
  }
}

TEST_CASE("spherical polygons") {
  CHECK_THROWS_AS(polar_polygon({{0.5, 0.0}, {0.5, 1.0}}), DomainError);
  // Clockwise.
  CHECK_THROWS_AS(polar_polygon({{0.5, 0.0}, {0.5, -2.0}, {0.5, 2.0}}), DomainError);
  // Leaves the hemisphere.
  CHECK_THROWS_AS(polar_polygon({{1.7, 0.0}, {0.5, 2.0}, {0.5, -2.0}}), DomainError);

  const SphericalPolygon tri = polar_polygon({{0.8, 0.0}, {0.8, 2.1}, {0.8, -2.1}});
  CHECK(is_sconvex(tri));
  const SphericalPolygon reflex = polar_polygon({{1.0, -1.2}, {0.15, 0.0}, {1.0, 1.2}, {1.0, kPi}});
  CHECK_FALSE(is_sconvex(reflex));

  SUBCASE("defect") {
    CHECK(s_convexity_defect(tri, 32, 256, 32) < 1e-9);
    CHECK(s_convexity_defect(reflex, 32, 256, 32) > 1e-3);
    CHECK(s_convexity_defect(contract_region(tri, 0.6, 0.6, 32), 256, 32) < 1e-6);
  }
  SUBCASE("regions") {
    const SphericalRegion r = sample_spherical_polygon(tri, 32);
    CHECK(r.boundary().size() == 96);
    CHECK(r.corners().size() == 3);
    CHECK_THROWS_AS(sample_spherical_polygon(tri, 4), DomainError);
    CHECK(contract_region(tri, 0.5, 0.5, 16).boundary().size() >= 64);
  }
  SUBCASE("random polygons are convex and contain the center") {
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
      const SpherePoint c = random_sphere_point(rng);
      const SphericalPolygon p = random_sconvex_polygon(rng, c);
      CHECK(is_sconvex(p));
      CHECK(outside_distance(p.gnomonic(), Vec2{0.0, 0.0}, 1e-12) == 0.0);
      for (const SpherePoint& v : p.vertices()) CHECK(angular_distance(c, v) <= 1.2 + 1e-12);
    }
  }
}

TEST_CASE("conjecture trials") {
  ConjectureOptions opts;
  opts.samples_per_edge = 16;
  opts.pair_samples = 64;
  opts.segment_samples = 16;
  SUBCASE("deterministic across thread counts") {
    opts.threads = 1;
    const ConjectureReport a = conjecture_trial(3, 16, opts);
    opts.threads = 4;
    const ConjectureReport b = conjecture_trial(3, 16, opts);
    CHECK(a.to_json().dump() == b.to_json().dump());
  }
  SUBCASE("symmetric trials stay convex") {
    const ConjectureReport r = conjecture_trial(1, 24, opts);
    CHECK(r.symmetric_exceedances() == 0);
    std::size_t sym = 0;
    for (const auto& t : r.trials) {
      if (t.k1 == t.k2) ++sym;
      CHECK(t.k1 > 0.0);
      CHECK(t.k2 <= 1.0);
    }
    CHECK(sym == 6);
    const auto j = r.to_json();
    CHECK(j["summary"]["trials"] == 24);
    CHECK(j.contains("contraction"));
  }
}
