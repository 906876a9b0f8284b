#include <array>
#include <cmath>

#include "doctest.h"
#include "hypexpand/curvature_analysis.hpp"
#include "hypexpand/dilation.hpp"
#include "hypexpand/errors.hpp"
#include "support.hpp"

using namespace hypexpand;

namespace {

long double phi_ref(long double a) {
  // Series to convergence in extended precision.
  long double term = a * a * a / 6.0L, sum = 0.0L;
  for (int n = 1; n < 400 && term > 1e-30L * sum; ++n) {
    sum += term;
    term *= a * a / ((2.0L * n + 2.0L) * (2.0L * n + 3.0L));
  }
  return sum;
}

long double psi_ref(long double a) {
  if (a > 2.0L) return a / std::tanh(a) - 1.0L;
  long double base = a * a * a / 6.0L, num = 0.0L;
  for (int n = 1; n < 400; ++n) {
    num += 2.0L * n * base;
    base *= a * a / ((2.0L * n + 2.0L) * (2.0L * n + 3.0L));
    if (base < 1e-30L * num) break;
  }
  return num / std::sinh(a);
}

ChordSpec random_spec(Rng& rng) {
  const double a = rng.uniform(-kPi / 2.0 + 1e-3, kPi / 2.0 - 0.02);
  const double b = rng.uniform(a + 1e-2, kPi / 2.0 - 1e-3);
  return ChordSpec(rng.uniform(0.1, 5.0), rng.uniform(0.1, 5.0), a, b);
}

double klein_cross(const DiskPoint& a, const DiskPoint& b, const DiskPoint& p) {
  auto k = [](const DiskPoint& q) {
    const double t = std::tanh(q.r());
    return std::array<double, 2>{t * std::cos(q.theta()), t * std::sin(q.theta())};
  };
  const auto ka = k(a), kb = k(b), kp = k(p);
  return (kb[0] - ka[0]) * (kp[1] - ka[1]) - (kb[1] - ka[1]) * (kp[0] - ka[0]);
}

}  // namespace

TEST_CASE("phi and psi") {
  CHECK(phi(0.0) == 0.0);
  CHECK(psi(0.0) == 0.0);
  CHECK_THROWS_AS(phi(-1.0), DomainError);
  CHECK_THROWS_AS(psi(-1.0), DomainError);
  SUBCASE("small-argument limits") {
    CHECK(phi(1e-4) == doctest::Approx(1e-12 / 6.0).epsilon(1e-8));
    CHECK(psi(1e-4) == doctest::Approx(1e-8 / 3.0).epsilon(1e-8));
  }
  SUBCASE("extended precision reference") {
    for (double a = 1e-3; a < 10.0; a *= 1.07) {
      CHECK(std::abs(phi(a) - static_cast<double>(phi_ref(a))) <= 1e-14 * phi(a));
      CHECK(std::abs(psi(a) - static_cast<double>(psi_ref(a))) <= 1e-13 * psi(a));
    }
  }
  SUBCASE("continuous across the branch switch") {
    const double lo = std::nextafter(1.0, 0.0);
    CHECK(phi(lo) == doctest::Approx(phi(1.0)).epsilon(1e-14));
    CHECK(psi(lo) == doctest::Approx(psi(1.0)).epsilon(1e-14));
  }
}

TEST_CASE("beta") {
  CHECK(beta(0.0, 0.5) == doctest::Approx(0.25));
  CHECK(beta(kPi / 2.0, 0.5) == doctest::Approx(1.0));
  CHECK(beta(std::asin(std::sqrt(1.0 / 3.0)), 0.5) == doctest::Approx(0.5).epsilon(1e-14));
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const double th = rng.uniform(-kPi / 2.0, kPi / 2.0);
    const double s = rng.uniform(0.01, 0.99);
    const BetaParts bp = beta_parts(th, s);
    CHECK(bp.beta >= s * s);
    CHECK(bp.beta <= 1.0);
    CHECK(std::abs(bp.beta - s * s - bp.beta_minus_s2) < 1e-15);
    CHECK(std::abs(1.0 - bp.beta - bp.one_minus_beta) < 1e-15);
  }
}

TEST_CASE("chord radius") {
  CHECK_THROWS_AS(ChordSpec(0.0, 1.0, 0.0, 0.5), DomainError);
  CHECK_THROWS_AS(ChordSpec(1.0, 1.0, 0.5, 0.5), DomainError);
  CHECK_THROWS_AS(ChordSpec(1.0, 1.0, 0.0, kPi / 2.0), DomainError);
  const ChordSpec sym(2.0, 2.0, -0.5, 0.5);
  CHECK(chord_radius(sym, 0.0) == doctest::Approx(2.0));
  CHECK(chord_radius(sym, 1.0) == doctest::Approx(2.0));
  // The midpoint lies on the perpendicular bisector at tanh r = tanh 2 cos 0.5.
  CHECK(chord_radius(sym, 0.5) == doctest::Approx(std::atanh(std::tanh(2.0) * std::cos(0.5))).epsilon(1e-13));

  SUBCASE("points are collinear in the Klein model") {
    Rng rng(8);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const ChordSpec spec = random_spec(rng);
      for (int k = 1; k < 20; ++k) {
        const double t = k / 20.0;
        const DiskPoint p = DiskPoint::from_polar(chord_radius(spec, t), spec.theta_at(t));
        worst = std::max(worst, std::abs(klein_cross(spec.start(), spec.end(), p)));
      }
    }
    CHECK(worst < 1e-7);
  }
}

TEST_CASE("preimage curve") {
  Rng rng(21);
  SUBCASE("endpoints are the contracted chord endpoints") {
    for (int i = 0; i < 50; ++i) {
      const ChordSpec spec = random_spec(rng);
      const double s = rng.uniform(0.05, 0.95);
      const ParamCurve x = preimage_curve(spec, s);
      CHECK(testing::cart_gap(x.start(), dilate_origin(s, 1.0, spec.start())) < 1e-13);
      CHECK(testing::cart_gap(x.end(), dilate_origin(s, 1.0, spec.end())) < 1e-13);
      CHECK(testing::cart_gap(x.point(0.5), dilate_origin(s, 1.0, DiskPoint::from_polar(
                                                 chord_radius(spec, 0.5), spec.theta_at(0.5)))) < 1e-13);
    }
  }
  SUBCASE("s = 1 gives back the chord") {
    const ChordSpec spec(1.0, 3.0, -0.4, 0.9);
    const PreimageJet j = preimage_jet(spec, 1.0, 0.3);
    CHECK(j.beta == doctest::Approx(1.0));
    CHECK(j.r == doctest::Approx(chord_radius(spec, 0.3)));
    CHECK(j.theta == doctest::Approx(spec.theta_at(0.3)));
    CHECK(std::abs(geodesic_curvature(j.polar())) < 1e-9);
  }
  SUBCASE("rejects s outside (0, 1]") {
    const ChordSpec spec(1.0, 3.0, -0.4, 0.9);
    CHECK_THROWS_AS(preimage_curve(spec, 0.0), DomainError);
    CHECK_THROWS_AS(preimage_curve(spec, 1.5), DomainError);
  }
  SUBCASE("analytic derivatives match finite differences") {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const ChordSpec spec = random_spec(rng);
      const double s = rng.uniform(0.05, 0.95);
      const ParamCurve x = preimage_curve(spec, s);
      const ParamCurve fd = x.finite_difference_view();
      for (double t : {0.1, 0.37, 0.5, 0.81}) {
        const PolarJet a = x.jet(t);
        const PolarJet b = fd.jet(t);
        const double scale = 1.0 + std::abs(a.dr) + std::abs(a.d2r) + std::abs(a.dtheta) + std::abs(a.d2theta);
        worst = std::max({worst, std::abs(a.dr - b.dr) / scale, std::abs(a.d2r - b.d2r) / scale,
                          std::abs(a.dtheta - b.dtheta) / scale, std::abs(a.d2theta - b.d2theta) / scale});
      }
    }
    CHECK(worst < 1e-6);
  }
  SUBCASE("derivative chain is internally consistent") {
    for (int i = 0; i < 200; ++i) {
      const ChordSpec spec = random_spec(rng);
      const double s = rng.uniform(0.05, 0.95);
      const PreimageJet j = preimage_jet(spec, s, rng.uniform());
      CHECK(std::abs(j.dbeta * j.dbeta - j.dbeta_sq) <= 1e-12 * std::max(1.0, j.dbeta_sq));
      CHECK(j.r == doctest::Approx(j.r_hat * std::sqrt(j.beta)).epsilon(1e-14));
      CHECK(std::tan(j.theta) * s == doctest::Approx(std::tan(j.theta_hat)).epsilon(1e-10));
      CHECK(j.dtheta > 0.0);
    }
  }
}

TEST_CASE("curvature coefficients") {
  Rng rng(33);
  SUBCASE("P2sq is the square of P2") {
    for (int i = 0; i < 500; ++i) {
      const PCoefficients p = p_coefficients(rng.uniform(0.01, 10.0), rng.uniform(-1.5, 1.5),
                                             rng.uniform(0.05, 0.95), rng.uniform(-3.0, 3.0),
                                             rng.uniform(0.05, 3.0));
      CHECK(std::abs(p.P2 * p.P2 - p.P2sq) <= 1e-10 * std::max(1.0, p.P2sq));
    }
  }
  SUBCASE("P1 is negative at r_hat = 1, beta = 1/2") {
    const double th = std::asin(std::sqrt(1.0 / 3.0));
    const PCoefficients p = p_coefficients(1.0, th, 0.5, 0.0, 1.0);
    CHECK(p.beta == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p.P1 < 0.0);
  }
  SUBCASE("reconstruction matches the generic curvature") {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double r = rng.uniform(0.05, 8.0);
      const double th = rng.uniform(-1.5, 1.5);
      const double s = rng.uniform(0.05, 0.95);
      const double dr = rng.uniform(-3.0, 3.0);
      const double dth = rng.uniform(0.05, kPi - 0.05);
      const PCoefficients p = p_coefficients(r, th, s, dr, dth);
      const double direct = geodesic_curvature(preimage_jet(r, th, dr, dth, s).polar());
      const double closed = p.curvature(dr, dth);
      worst = std::max(worst, std::abs(closed - direct) / std::max(1.0, std::abs(direct)));
      CHECK(closed < 0.0);
    }
    CHECK(worst < 1e-8);
  }
  SUBCASE("discriminant factored form") {
    for (int i = 0; i < 500; ++i) {
      const double r = rng.uniform(0.05, 8.0);
      const double th = rng.uniform(-1.5, 1.5);
      const double s = rng.uniform(0.05, 0.95);
      const PCoefficients p = p_coefficients(r, th, s, 0.0, 1.0);
      const double f = discriminant_factored(r, th, s);
      CHECK(std::abs(p.discriminant() - f) <= 1e-9 * std::max(1.0, std::abs(f)));
      CHECK(f < 0.0);
    }
  }
  SUBCASE("bounding margins are positive where the discriminant is used") {
    for (int i = 0; i < 300; ++i) {
      const double r = rng.uniform(0.05, 8.0);
      const double b = beta_parts(rng.uniform(-1.5, 1.5), rng.uniform(0.05, 0.95)).beta;
      if (b >= 1.0 - 1e-6) continue;
      CHECK(phi_scaling_margin(r, b) > 0.0);
      CHECK(psi_product_margin(r, b) > 0.0);
    }
  }
  CHECK_THROWS_AS(p_coefficients(0.0, 0.1, 0.5, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(p_coefficients(1.0, 0.1, 1.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(p_coefficients(1.0, 0.1, 0.5, 0.0, 0.0), DomainError);
}

TEST_CASE("linear-in-polar curve") {
  SUBCASE("circle") {
    for (double r : {0.3, 1.0, 4.0}) CHECK(gamma_curvature(r, 0.0, 0.7) == doctest::Approx(1.0 / std::tanh(r)));
  }
  SUBCASE("closed form agrees with the generic formula") {
    Rng rng(44);
    for (int i = 0; i < 200; ++i) {
      const DiskPoint a = DiskPoint::from_polar(rng.uniform(0.1, 5.0), rng.uniform(-1.5, 0.0));
      const DiskPoint b = DiskPoint::from_polar(rng.uniform(0.1, 5.0), rng.uniform(0.05, 1.5));
      const ParamCurve g = gamma_curve(a, b);
      const double t = rng.uniform();
      const PolarJet j = g.jet(t);
      const double closed = gamma_curvature(j.r, j.dr, j.dtheta);
      CHECK(std::abs(closed - geodesic_curvature(g, t)) <= 1e-9 * std::max(1.0, std::abs(closed)));
      CHECK(closed > 0.0);
    }
  }
  CHECK_THROWS_AS(gamma_curve(DiskPoint{}, DiskPoint::from_polar(1.0, 0.0)), DomainError);
}

TEST_CASE("side ordering") {
  Rng rng(55);
  SUBCASE("random chords") {
    for (int i = 0; i < 20; ++i) {
      const ChordSpec spec = random_spec(rng);
      const SideOrderingReport rep = side_ordering(spec, rng.uniform(0.05, 0.95), 64);
      CHECK(rep.pass());
      CHECK(rep.max_kg_x < 0.0);
      CHECK(rep.min_kg_gamma > 0.0);
    }
  }
  SUBCASE("near s = 1 the preimage approaches its chord") {
    const ChordSpec spec(1.5, 2.5, -0.6, 0.8);
    const SideOrderingReport rep = side_ordering(spec, 1.0 - 1e-6, 64);
    CHECK(rep.pass());
    CHECK(std::abs(rep.min_inner_gap) < 1e-5);
    CHECK(rep.min_outer_gap > 1e-3);
  }
  SUBCASE("symmetric chord") {
    const SideOrderingReport rep = side_ordering(ChordSpec(2.0, 2.0, -0.5, 0.5), 0.2, 64);
    CHECK(rep.pass());
    CHECK(rep.min_inner_gap > 0.0);
    CHECK(rep.min_outer_gap > 0.0);
  }
  SUBCASE("chords touching the axes") {
    CHECK(side_ordering(ChordSpec(1.0, 2.0, 0.0, 1.0), 0.5, 64).pass());
    CHECK(side_ordering(ChordSpec(1.0, 2.0, -kPi / 2.0, 0.0), 0.5, 64).pass());
  }
  CHECK_THROWS_AS(side_ordering(ChordSpec(1.0, 2.0, 0.0, 1.0), 1.0, 64), DomainError);
  CHECK_THROWS_AS(side_ordering(ChordSpec(1.0, 2.0, 0.0, 1.0), 0.5, 1), DomainError);
}
