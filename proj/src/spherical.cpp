#include "hypexpand/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypexpand/disk.hpp"
#include "hypexpand/errors.hpp"
#include "hypexpand/parallel.hpp"

namespace hypexpand {

namespace {

constexpr double kHalfPi = 0.5 * kPi;
constexpr double kGnomonicBoundaryTol = 1e-9;
constexpr std::size_t kMinSphericalSamples = 64;

Vec3 normalized(Vec3 v) { return (1.0 / norm(v)) * v; }

std::vector<Vec2> gnomonic_of(const TangentFrame& f, std::span<const SpherePoint> pts) {
  std::vector<Vec2> out;
  out.reserve(pts.size());
  for (const SpherePoint& p : pts) out.push_back(f.gnomonic(p));
  return out;
}

void require_contraction(double k1, double k2) {
  if (!(k1 > 0.0 && k1 <= 1.0 && k2 > 0.0 && k2 <= 1.0)) {
    throw DomainError("s_contract: k1 and k2 must lie in (0, 1]");
  }
}

}  // namespace

double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

SpherePoint SpherePoint::from_vector(Vec3 v) {
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("SpherePoint: zero or non-finite vector");
  SpherePoint p;
  p.v_ = (1.0 / n) * v;
  return p;
}

double angular_distance(const SpherePoint& a, const SpherePoint& b) {
  return std::atan2(norm(cross(a.v(), b.v())), dot(a.v(), b.v()));
}

TangentFrame TangentFrame::at(const SpherePoint& c, double rotation) {
  const Vec3& n = c.v();
  Vec3 axis{1.0, 0.0, 0.0};
  if (std::abs(n.y) < std::abs(n.x) && std::abs(n.y) <= std::abs(n.z)) {
    axis = {0.0, 1.0, 0.0};
  } else if (std::abs(n.z) < std::abs(n.x) && std::abs(n.z) < std::abs(n.y)) {
    axis = {0.0, 0.0, 1.0};
  }
  const Vec3 e1 = normalized(axis - dot(axis, n) * n);
  const Vec3 e2 = cross(n, e1);
  const double ca = std::cos(rotation);
  const double sa = std::sin(rotation);
  return {n, ca * e1 + sa * e2, ca * e2 - sa * e1};
}

std::array<double, 2> TangentFrame::polar(const SpherePoint& p) const {
  const double u = dot(p.v(), e1);
  const double w = dot(p.v(), e2);
  const double rho = std::atan2(std::hypot(u, w), dot(p.v(), center));
  return {rho, rho == 0.0 ? 0.0 : std::atan2(w, u)};
}

SpherePoint TangentFrame::exp(double rho, double theta) const {
  const double s = std::sin(rho);
  return SpherePoint::from_vector(std::cos(rho) * center +
                                  s * (std::cos(theta) * e1 + std::sin(theta) * e2));
}

Vec2 TangentFrame::gnomonic(const SpherePoint& p) const {
  const double d = dot(p.v(), center);
  if (!(d > 0.0)) throw DomainError("gnomonic: point outside the open hemisphere");
  return {dot(p.v(), e1) / d, dot(p.v(), e2) / d};
}

SpherePoint TangentFrame::from_gnomonic(Vec2 q) const {
  return SpherePoint::from_vector(center + q.x * e1 + q.y * e2);
}

SpherePoint rotate_about(const SpherePoint& c, double angle, const SpherePoint& p) {
  const Vec3& k = c.v();
  const Vec3& v = p.v();
  const double ca = std::cos(angle);
  return SpherePoint::from_vector(ca * v + std::sin(angle) * cross(k, v) +
                                  (dot(k, v) * (1.0 - ca)) * k);
}

SpherePoint s_contract(const SpherePoint& c, double k1, double k2, const SpherePoint& p,
                       double frame_rotation) {
  require_contraction(k1, k2);
  const TangentFrame f = TangentFrame::at(c, frame_rotation);
  const auto [rho, theta] = f.polar(p);
  if (!(rho < kHalfPi)) throw DomainError("s_contract: point outside the open hemisphere of c");
  if (rho == 0.0) return c;
  const double u = k1 * std::cos(theta);
  const double w = k2 * std::sin(theta);
  return f.exp(rho * std::hypot(u, w), std::atan2(w, u));
}

SphericalPolygon::SphericalPolygon(std::vector<SpherePoint> vertices, SpherePoint center)
    : vertices_(std::move(vertices)), center_(center) {
  if (vertices_.size() < 3) throw DomainError("SphericalPolygon: need at least 3 vertices");
  for (const SpherePoint& v : vertices_) {
    if (!(angular_distance(center_, v) < kHalfPi)) {
      throw DomainError("SphericalPolygon: vertex outside the hemisphere of the center");
    }
  }
  gnomonic_ = gnomonic_of(TangentFrame::at(center_), vertices_);
  if (!is_simple_polygon(gnomonic_)) throw DomainError("SphericalPolygon: boundary is not simple");
  if (!(signed_area(gnomonic_) > 0.0)) {
    throw DomainError("SphericalPolygon: vertices must be counterclockwise seen from the center");
  }
}

bool is_sconvex(const SphericalPolygon& poly) { return is_convex_ccw(poly.gnomonic(), 1e-12); }

SphericalRegion::SphericalRegion(std::vector<SpherePoint> boundary, SpherePoint center,
                                 std::vector<std::size_t> corners)
    : boundary_(std::move(boundary)), center_(center), corners_(std::move(corners)) {
  if (boundary_.size() > 1 && angular_distance(boundary_.front(), boundary_.back()) <= 1e-12) {
    boundary_.pop_back();
  }
  if (boundary_.size() < kMinSphericalSamples) {
    throw DomainError("SphericalRegion: need at least 64 samples");
  }
  for (std::size_t c : corners_) {
    if (c >= boundary_.size()) throw DomainError("SphericalRegion: corner index out of range");
  }
  gnomonic_ = gnomonic_of(TangentFrame::at(center_), boundary_);
  if (!(signed_area(gnomonic_) > 0.0)) {
    throw DomainError("SphericalRegion: boundary must be counterclockwise");
  }
  if (!is_simple_polygon(gnomonic_)) throw DomainError("SphericalRegion: boundary is not simple");
}

SpherePoint slerp(const SpherePoint& a, const SpherePoint& b, double t) {
  const double omega = angular_distance(a, b);
  if (omega < 1e-15) return a;
  if (!(omega < kPi - 1e-12)) throw DomainError("slerp: antipodal endpoints");
  const double s = std::sin(omega);
  return SpherePoint::from_vector((std::sin((1.0 - t) * omega) / s) * a.v() +
                                  (std::sin(t * omega) / s) * b.v());
}

namespace {

std::size_t spherical_per_edge(const SphericalPolygon& poly, std::size_t samples_per_edge) {
  if (samples_per_edge < 16) throw DomainError("samples_per_edge must be at least 16");
  return std::max(samples_per_edge, (kMinSphericalSamples + poly.size() - 1) / poly.size());
}

std::vector<SpherePoint> sample_arcs(const SphericalPolygon& poly, std::size_t per_edge) {
  const auto& v = poly.vertices();
  std::vector<SpherePoint> out;
  out.reserve(v.size() * per_edge);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const SpherePoint& a = v[i];
    const SpherePoint& b = v[(i + 1) % v.size()];
    out.push_back(a);
    for (std::size_t j = 1; j < per_edge; ++j) {
      out.push_back(slerp(a, b, static_cast<double>(j) / static_cast<double>(per_edge)));
    }
  }
  return out;
}

std::vector<std::size_t> spherical_corners(std::size_t count, std::size_t per_edge) {
  std::vector<std::size_t> c(count);
  for (std::size_t i = 0; i < count; ++i) c[i] = i * per_edge;
  return c;
}

}  // namespace

SphericalRegion sample_spherical_polygon(const SphericalPolygon& poly, std::size_t samples_per_edge) {
  const std::size_t per_edge = spherical_per_edge(poly, samples_per_edge);
  return SphericalRegion(sample_arcs(poly, per_edge), poly.center(),
                         spherical_corners(poly.size(), per_edge));
}

SphericalRegion contract_region(const SphericalPolygon& poly, double k1, double k2,
                                std::size_t samples_per_edge, double frame_rotation) {
  require_contraction(k1, k2);
  const std::size_t per_edge = spherical_per_edge(poly, samples_per_edge);
  std::vector<SpherePoint> pts = sample_arcs(poly, per_edge);
  for (SpherePoint& p : pts) p = s_contract(poly.center(), k1, k2, p, frame_rotation);
  return SphericalRegion(std::move(pts), poly.center(), spherical_corners(poly.size(), per_edge));
}

double s_convexity_defect(const SphericalRegion& region, std::size_t pair_samples,
                          std::size_t segment_samples) {
  if (pair_samples < 16 || segment_samples < 16) {
    throw DomainError("s_convexity_defect: sample counts must be at least 16");
  }
  return chord_defect(region.gnomonic(), region.corners(), pair_samples, segment_samples,
                      kGnomonicBoundaryTol);
}

double s_convexity_defect(const SphericalPolygon& poly, std::size_t samples_per_edge,
                          std::size_t pair_samples, std::size_t segment_samples) {
  return s_convexity_defect(sample_spherical_polygon(poly, samples_per_edge), pair_samples,
                            segment_samples);
}

SpherePoint random_sphere_point(Rng& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = rng.uniform(-kPi, kPi);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return SpherePoint::from_vector({s * std::cos(phi), s * std::sin(phi), z});
}

SphericalPolygon random_sconvex_polygon(Rng& rng, const SpherePoint& c, double max_rho) {
  if (!(max_rho > 0.05 && max_rho < kHalfPi)) {
    throw DomainError("random_sconvex_polygon: max_rho must lie in (0.05, pi/2)");
  }
  const TangentFrame f = TangentFrame::at(c);
  for (;;) {
    const int m = rng.uniform_int(4, 12);
    const double offset = rng.uniform(-kPi, kPi);
    std::vector<SpherePoint> pts;
    std::vector<Vec2> plane;
    for (int j = 0; j < m; ++j) {
      // Angular gaps below pi keep c strictly inside the hull.
      const double theta = offset + 2.0 * kPi * (j + 0.8 * rng.uniform()) / m;
      pts.push_back(f.exp(rng.uniform(0.05, max_rho), theta));
      plane.push_back(f.gnomonic(pts.back()));
    }
    const std::vector<std::size_t> idx = convex_hull_indices(plane);
    if (idx.size() < 3) continue;
    std::vector<SpherePoint> verts;
    for (std::size_t i : idx) verts.push_back(pts[i]);
    try {
      return SphericalPolygon(std::move(verts), c);
    } catch (const DomainError&) {
      // Numerically degenerate hull; draw again.
    }
  }
}

ConjectureTrialResult run_conjecture_trial(std::uint64_t seed, std::size_t index,
                                           const ConjectureOptions& options) {
  const std::uint64_t trial_seed = mix_seed(seed, index);
  Rng rng(trial_seed);
  const SpherePoint c = random_sphere_point(rng);
  const SphericalPolygon poly = random_sconvex_polygon(rng, c);
  const double k1 = rng.uniform(options.min_factor, 1.0);
  const double drawn_k2 = rng.uniform(options.min_factor, 1.0);
  const bool symmetric = options.symmetric_every > 0 && index % options.symmetric_every == 0;
  const double k2 = symmetric ? k1 : drawn_k2;

  ConjectureTrialResult res{index, trial_seed, k1, k2, poly.size(), 0.0, false, false};
  res.defect = s_convexity_defect(contract_region(poly, k1, k2, options.samples_per_edge),
                                  options.pair_samples, options.segment_samples);
  if (res.defect > options.threshold) {
    res.rechecked = true;
    res.defect = s_convexity_defect(contract_region(poly, k1, k2, 4 * options.samples_per_edge),
                                    4 * options.pair_samples, 4 * options.segment_samples);
    res.exceeded = res.defect > options.threshold;
  }
  return res;
}

ConjectureReport conjecture_trial(std::uint64_t seed, std::size_t trials,
                                  const ConjectureOptions& options) {
  if (trials < 1) throw DomainError("conjecture_trial: trials must be at least 1");
  ConjectureReport rep{seed, std::vector<ConjectureTrialResult>(trials), options};
  parallel_for(trials, worker_count(options.threads),
               [&](std::size_t i) { rep.trials[i] = run_conjecture_trial(seed, i, options); });
  return rep;
}

std::size_t ConjectureReport::exceedances() const {
  return static_cast<std::size_t>(
      std::count_if(trials.begin(), trials.end(), [](const auto& t) { return t.exceeded; }));
}

std::size_t ConjectureReport::symmetric_exceedances() const {
  return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const auto& t) {
    return t.exceeded && t.k1 == t.k2;
  }));
}

nlohmann::json ConjectureReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  double max_defect = 0.0;
  double max_symmetric = 0.0;
  std::size_t symmetric = 0;
  std::size_t rechecked = 0;
  for (const auto& t : trials) {
    rows.push_back({{"index", t.index},
                    {"seed", t.seed},
                    {"k1", t.k1},
                    {"k2", t.k2},
                    {"n_vertices", t.n_vertices},
                    {"defect", t.defect},
                    {"rechecked", t.rechecked},
                    {"exceeded", t.exceeded}});
    max_defect = std::max(max_defect, t.defect);
    if (t.k1 == t.k2) {
      ++symmetric;
      max_symmetric = std::max(max_symmetric, t.defect);
    }
    if (t.rechecked) ++rechecked;
  }
  return {
      {"contraction",
       {{"definition",
         "geodesic polar coordinates (rho, theta) about c in a fixed tangent frame: "
         "rho' = rho * sqrt(k1^2 cos^2 theta + k2^2 sin^2 theta), "
         "theta' = atan2(k2 sin theta, k1 cos theta)"},
        {"status", "adopted analog of the hyperbolic polar map; not a given definition"}}},
      {"seed", seed},
      {"sampling",
       {{"samples_per_edge", options.samples_per_edge},
        {"pair_samples", options.pair_samples},
        {"segment_samples", options.segment_samples},
        {"recheck_factor", 4},
        {"threshold", options.threshold},
        {"symmetric_every", options.symmetric_every},
        {"min_factor", options.min_factor}}},
      {"trials", std::move(rows)},
      {"summary",
       {{"trials", trials.size()},
        {"max_defect", max_defect},
        {"exceedances", exceedances()},
        {"rechecked", rechecked},
        {"symmetric_trials", symmetric},
        {"symmetric_max_defect", max_symmetric},
        {"symmetric_exceedances", symmetric_exceedances()}}}};
}

}  // namespace hypexpand
