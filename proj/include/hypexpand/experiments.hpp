#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypexpand/convexity.hpp"
#include "hypexpand/curvature_analysis.hpp"
#include "hypexpand/dilation.hpp"
#include "hypexpand/lemmas.hpp"

namespace hypexpand {

struct DefectSampling {
  std::size_t samples_per_edge = 32;
  std::size_t pair_samples = 256;
  std::size_t segment_samples = 32;

  DefectSampling scaled(std::size_t factor) const {
    return {samples_per_edge * factor, pair_samples * factor, segment_samples * factor};
  }
  nlohmann::json to_json() const;
  static DefectSampling from_json(const nlohmann::json& doc);
};

double dilated_defect(const GeodesicPolygon& poly, const DilationParams& params,
                      const DefectSampling& sampling);

// Expansion trials.

struct TheoremOptions {
  std::size_t trials = 200;
  std::optional<double> k1;  // forced factor; otherwise uniform in [1, 4]
  std::optional<double> k2;
  bool center_origin = false;
  double max_center_radius = 1.0;
  DefectSampling sampling;
  double threshold = kConvexDefectThreshold;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct TheoremTrial {
  std::size_t index;
  std::uint64_t seed;
  double k1;
  double k2;
  DiskPoint center;
  std::size_t n_vertices;
  double defect;
};

struct TheoremReport {
  std::uint64_t seed;
  TheoremOptions options;
  std::vector<TheoremTrial> trials;

  double max_defect() const;
  std::vector<std::uint64_t> offending_seeds() const;
  bool pass() const { return offending_seeds().empty(); }
  nlohmann::json to_json() const;
};

TheoremTrial theorem_trial(std::uint64_t seed, std::size_t index, const TheoremOptions& options);
TheoremReport verify_theorem(std::uint64_t seed, const TheoremOptions& options = {});

// Contraction counterexamples.

struct SearchOptions {
  double k1 = 0.25;
  double k2 = 1.0;
  std::size_t budget = 2000;
  double threshold = 1e-3;
  DefectSampling sampling;
  unsigned threads = 0;
};

/// A polygon whose dilated image fails convexity, with everything needed to
/// recompute the defect.
struct Witness {
  GeodesicPolygon polygon;
  DilationParams params;
  DefectSampling sampling;  // the re-check density
  double defect;
  std::uint64_t seed;
  std::size_t trial;
  std::string generator;

  nlohmann::json to_json() const;
  static Witness from_json(const nlohmann::json& doc);
};

struct SearchReport {
  std::uint64_t seed;
  SearchOptions options;
  std::size_t trials_run = 0;
  double max_screen_defect = 0.0;
  std::optional<Witness> witness;

  bool found() const { return witness.has_value(); }
  nlohmann::json to_json() const;
};

/// Alternates thin wedges aligned with the contracted axis and random
/// h-convex polygons. A candidate counts only if its defect still exceeds
/// the threshold at 4x sampling density. Throws DomainError unless k1 < 1.
SearchReport search_counterexample(std::uint64_t seed, const SearchOptions& options = {});
/// Recomputes a witness's defect from its stored polygon, map and sampling.
double replay_witness(const Witness& witness);

// Auxiliary inequalities.

struct MonotoneCheck {
  double a;
  std::size_t points;
  double max_slope;  // largest finite-difference slope of f(a, .)
  bool pass() const { return max_slope < 0.0; }
};
MonotoneCheck check_coth_ratio_monotone(double a, std::size_t n = 400);

struct LemmaSuite {
  std::vector<GridReport> grids;
  std::vector<SeriesCheck> series;
  std::vector<MonotoneCheck> monotone;
  double series_tolerance = 1e-9;

  bool pass() const;
  nlohmann::json to_json() const;
};
LemmaSuite verify_lemmas(std::size_t grid_n = 500);

// Curvature decomposition sweep.

struct SweepOptions {
  std::size_t n_r = 50;
  std::size_t n_theta = 50;
  std::size_t n_s = 9;
  double r_max = 10.0;
  std::size_t side_specs = 100;
  std::size_t side_samples = 64;
};

struct SweepRow {
  double r_hat, theta_hat, s, dr_hat, dtheta_hat;
  double P0, P1, P2, P3, discriminant;
  double kg_closed, kg_generic;
};

struct SweepReport {
  std::uint64_t seed;
  SweepOptions options;
  std::vector<SweepRow> rows;
  double max_relative_error = 0.0;
  std::size_t sign_violations = 0;
  std::vector<SideOrderingReport> side;
  std::size_t side_violations = 0;

  bool pass(double tol = 1e-8) const {
    return max_relative_error < tol && sign_violations == 0 && side_violations == 0;
  }
  std::string to_csv() const;
  nlohmann::json to_json() const;  // summary only; rows go to CSV
};

SweepReport curvature_sweep(std::uint64_t seed, const SweepOptions& options = {});
/// Random spec for the side-ordering check: radii in [0.1, 5], angles in
/// (-pi/2, pi/2), s in [0.05, 0.95].
struct SideOrderingCase {
  ChordSpec spec;
  double s;
};
SideOrderingCase random_side_case(Rng& rng);

// Figures and traces.

struct RenderOptions {
  double k1 = 2.0;
  double k2 = 1.0;
  double s = 0.4;
  std::size_t samples_per_edge = 32;
  std::size_t curve_samples = 128;
};

/// SVG of a polygon, its dilated image about the origin, and the chord,
/// preimage and gamma curves of one image chord.
std::string render_svg(std::uint64_t seed, const RenderOptions& options = {});

/// CSV with columns t, r, theta, x, y, kg for the named curve: "geodesic",
/// "preimage" or "gamma".
std::string trace_csv(std::uint64_t seed, const std::string& curve, std::size_t samples = 65);

}  // namespace hypexpand
