#include "hypexpand/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "hypexpand/errors.hpp"
#include "hypexpand/parallel.hpp"

namespace hypexpand {

nlohmann::json DefectSampling::to_json() const {
  return {{"samples_per_edge", samples_per_edge},
          {"pair_samples", pair_samples},
          {"segment_samples", segment_samples}};
}

DefectSampling DefectSampling::from_json(const nlohmann::json& doc) {
  return {doc.at("samples_per_edge").get<std::size_t>(), doc.at("pair_samples").get<std::size_t>(),
          doc.at("segment_samples").get<std::size_t>()};
}

double dilated_defect(const GeodesicPolygon& poly, const DilationParams& params,
                      const DefectSampling& sampling) {
  return convexity_defect(dilate_region(poly, params, sampling.samples_per_edge),
                          sampling.pair_samples, sampling.segment_samples);
}

namespace {

nlohmann::json polar_json(const DiskPoint& p) { return {p.r(), p.theta()}; }

DiskPoint random_center(Rng& rng, double max_radius) {
  const double r = rng.uniform(0.0, max_radius);
  return DiskPoint::from_polar(r, rng.uniform(-kPi, kPi));
}

}  // namespace

// ---------------------------------------------------------------------------
// Expansion trials

TheoremTrial theorem_trial(std::uint64_t seed, std::size_t index, const TheoremOptions& options) {
  const std::uint64_t trial_seed = mix_seed(seed, index);
  Rng rng(trial_seed);
  const DiskPoint center =
      options.center_origin ? DiskPoint{} : random_center(rng, options.max_center_radius);
  const GeodesicPolygon poly = random_hconvex_polygon(rng, center);
  const double k1 = options.k1 ? *options.k1 : rng.uniform(1.0, 4.0);
  const double k2 = options.k2 ? *options.k2 : rng.uniform(1.0, 4.0);
  const double defect = dilated_defect(poly, DilationParams(center, k1, k2), options.sampling);
  return {index, trial_seed, k1, k2, center, poly.size(), defect};
}

TheoremReport verify_theorem(std::uint64_t seed, const TheoremOptions& options) {
  if (options.trials < 1) throw DomainError("verify_theorem: trials must be at least 1");
  TheoremReport rep{seed, options, {}};
  rep.trials.resize(options.trials, TheoremTrial{0, 0, 1.0, 1.0, DiskPoint{}, 0, 0.0});
  parallel_for(options.trials, worker_count(options.threads),
               [&](std::size_t i) { rep.trials[i] = theorem_trial(seed, i, options); });
  return rep;
}

double TheoremReport::max_defect() const {
  double m = 0.0;
  for (const auto& t : trials) m = std::max(m, t.defect);
  return m;
}

std::vector<std::uint64_t> TheoremReport::offending_seeds() const {
  std::vector<std::uint64_t> out;
  for (const auto& t : trials) {
    if (!(t.defect < options.threshold)) out.push_back(t.seed);
  }
  return out;
}

nlohmann::json TheoremReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& t : trials) {
    rows.push_back({{"index", t.index},
                    {"seed", t.seed},
                    {"k1", t.k1},
                    {"k2", t.k2},
                    {"center_polar", polar_json(t.center)},
                    {"n_vertices", t.n_vertices},
                    {"defect", t.defect}});
  }
  nlohmann::json opts = {{"trials", options.trials},
                         {"center_origin", options.center_origin},
                         {"max_center_radius", options.max_center_radius},
                         {"sampling", options.sampling.to_json()},
                         {"threshold", options.threshold}};
  opts["k1"] = options.k1 ? nlohmann::json(*options.k1) : nlohmann::json("uniform[1,4]");
  opts["k2"] = options.k2 ? nlohmann::json(*options.k2) : nlohmann::json("uniform[1,4]");
  return {{"experiment", "expansion_preserves_convexity"},
          {"seed", seed},
          {"options", std::move(opts)},
          {"trials", std::move(rows)},
          {"summary",
           {{"max_defect", max_defect()},
            {"offending_seeds", offending_seeds()},
            {"pass", pass()}}}};
}

// ---------------------------------------------------------------------------
// Contraction counterexamples

nlohmann::json Witness::to_json() const {
  return {{"kind", "contraction_counterexample"},
          {"generator", generator},
          {"seed", seed},
          {"trial", trial},
          {"polygon", polygon_to_json(polygon)},
          {"params",
           {{"k1", params.k1()}, {"k2", params.k2()}, {"center_polar", polar_json(params.center())}}},
          {"sampling", sampling.to_json()},
          {"defect", defect}};
}

Witness Witness::from_json(const nlohmann::json& doc) {
  const auto& p = doc.at("params");
  const auto& c = p.at("center_polar");
  return {polygon_from_json(doc.at("polygon")),
          DilationParams(DiskPoint::from_polar(c.at(0), c.at(1)), p.at("k1"), p.at("k2")),
          DefectSampling::from_json(doc.at("sampling")),
          doc.at("defect").get<double>(),
          doc.value("seed", std::uint64_t{0}),
          doc.value("trial", std::size_t{0}),
          doc.value("generator", std::string("unknown"))};
}

double replay_witness(const Witness& witness) {
  return dilated_defect(witness.polygon, witness.params, witness.sampling);
}

nlohmann::json SearchReport::to_json() const {
  nlohmann::json doc = {{"experiment", "contraction_counterexample_search"},
                        {"seed", seed},
                        {"options",
                         {{"k1", options.k1},
                          {"k2", options.k2},
                          {"budget", options.budget},
                          {"threshold", options.threshold},
                          {"sampling", options.sampling.to_json()},
                          {"recheck_factor", 4}}},
                        {"trials_run", trials_run},
                        {"max_screen_defect", max_screen_defect},
                        {"found", found()}};
  doc["witness"] = witness ? witness->to_json() : nlohmann::json(nullptr);
  return doc;
}

namespace {

struct Candidate {
  std::optional<GeodesicPolygon> polygon;
  DiskPoint center;
  std::string generator;
  double defect = 0.0;
};

// Thin triangle about the origin, elongated along a direction near the
// contracted axis, with its apex just behind the origin.
std::optional<GeodesicPolygon> directed_wedge(Rng& rng) {
  const double phi = rng.uniform(-0.3, 0.3);
  const double half = rng.uniform(0.05, 0.5);
  const double apex = rng.uniform(0.02, 0.5);
  const double r1 = rng.uniform(1.0, 3.5);
  const double r2 = rng.uniform(1.0, 3.5);
  try {
    return GeodesicPolygon({DiskPoint::from_polar(r1, phi - half), DiskPoint::from_polar(r2, phi + half),
                            DiskPoint::from_polar(apex, kPi + phi)});
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

Candidate search_candidate(std::uint64_t trial_seed, std::size_t index, const SearchOptions& opts) {
  Rng rng(trial_seed);
  Candidate c;
  if (index % 2 == 0) {
    c.polygon = directed_wedge(rng);
    c.generator = "directed_wedge";
  }
  if (!c.polygon) {
    c.center = random_center(rng, 1.0);
    c.polygon = random_hconvex_polygon(rng, c.center);
    c.generator = "random_hconvex";
  }
  c.defect = dilated_defect(*c.polygon, DilationParams(c.center, opts.k1, opts.k2), opts.sampling);
  return c;
}

}  // namespace

SearchReport search_counterexample(std::uint64_t seed, const SearchOptions& options) {
  if (!(options.k1 > 0.0 && options.k1 < 1.0)) {
    throw DomainError("search_counterexample: k1 must lie in (0, 1)");
  }
  if (!(options.k2 > 0.0)) throw DomainError("search_counterexample: k2 must be positive");
  SearchReport rep{seed, options, 0, 0.0, std::nullopt};
  const unsigned threads = worker_count(options.threads);
  constexpr std::size_t kBatch = 64;

  for (std::size_t base = 0; base < options.budget && !rep.witness; base += kBatch) {
    const std::size_t n = std::min(kBatch, options.budget - base);
    std::vector<Candidate> batch(n);
    parallel_for(n, threads, [&](std::size_t j) {
      batch[j] = search_candidate(mix_seed(seed, base + j), base + j, options);
    });
    for (std::size_t j = 0; j < n; ++j) {
      const Candidate& c = batch[j];
      rep.trials_run = base + j + 1;
      rep.max_screen_defect = std::max(rep.max_screen_defect, c.defect);
      if (!(c.defect > options.threshold)) continue;
      Witness w{*c.polygon,
                DilationParams(c.center, options.k1, options.k2),
                options.sampling.scaled(4),
                0.0,
                mix_seed(seed, base + j),
                base + j,
                c.generator};
      // Measure on the serialized form so a replay sees identical inputs.
      w = Witness::from_json(w.to_json());
      w.defect = replay_witness(w);
      if (w.defect > options.threshold) {
        rep.witness = std::move(w);
        break;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Auxiliary inequalities

MonotoneCheck check_coth_ratio_monotone(double a, std::size_t n) {
  const GridAxis ay{"y", kLemmaInset, 1.0 - kLemmaInset, n, "linear"};
  const std::vector<double> ys = ay.values();
  MonotoneCheck m{a, n, -std::numeric_limits<double>::infinity()};
  double prev = coth_ratio_f(a, ys[0]);
  for (std::size_t i = 1; i < ys.size(); ++i) {
    const double cur = coth_ratio_f(a, ys[i]);
    m.max_slope = std::max(m.max_slope, (cur - prev) / (ys[i] - ys[i - 1]));
    prev = cur;
  }
  return m;
}

bool LemmaSuite::pass() const {
  for (const auto& g : grids) {
    if (!g.pass()) return false;
  }
  for (const auto& s : series) {
    if (!(s.max_relative_error < series_tolerance)) return false;
  }
  for (const auto& m : monotone) {
    if (!m.pass()) return false;
  }
  return true;
}

nlohmann::json LemmaSuite::to_json() const {
  nlohmann::json g = nlohmann::json::array();
  for (const auto& r : grids) g.push_back(r.to_json());
  nlohmann::json s = nlohmann::json::array();
  for (const auto& c : series) {
    nlohmann::json j = c.to_json();
    j["tolerance"] = series_tolerance;
    j["pass"] = c.max_relative_error < series_tolerance;
    s.push_back(std::move(j));
  }
  nlohmann::json m = nlohmann::json::array();
  for (const auto& c : monotone) {
    m.push_back({{"function", "coth_ratio_f"},
                 {"a", c.a},
                 {"points", c.points},
                 {"max_slope", c.max_slope},
                 {"pass", c.pass()}});
  }
  return {{"grids", std::move(g)}, {"series", std::move(s)}, {"monotone", std::move(m)},
          {"pass", pass()}};
}

LemmaSuite verify_lemmas(std::size_t grid_n) {
  LemmaSuite suite;
  suite.grids = {verify_sinh_scaling(grid_n), verify_coth_ratio(grid_n), verify_coth_poly(grid_n),
                 verify_sin_scaling(grid_n)};
  suite.series = {check_sinh_scaling_series(100), check_coth_poly_series(400)};
  for (double a : {0.5, 1.0, 3.0}) suite.monotone.push_back(check_coth_ratio_monotone(a));
  return suite;
}

// ---------------------------------------------------------------------------
// Curvature decomposition sweep

SideOrderingCase random_side_case(Rng& rng) {
  constexpr double kEdge = 1e-3;
  for (;;) {
    double a = rng.uniform(-0.5 * kPi + kEdge, 0.5 * kPi - kEdge);
    double b = rng.uniform(-0.5 * kPi + kEdge, 0.5 * kPi - kEdge);
    const double r1 = rng.uniform(0.1, 5.0);
    const double r2 = rng.uniform(0.1, 5.0);
    const double s = rng.uniform(0.05, 0.95);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-2) continue;
    return {ChordSpec(r1, r2, a, b), s};
  }
}

SweepReport curvature_sweep(std::uint64_t seed, const SweepOptions& options) {
  SweepReport rep;
  rep.seed = seed;
  rep.options = options;
  Rng rng(mix_seed(seed, 1));
  rep.rows.reserve(options.n_r * options.n_theta * options.n_s);
  for (std::size_t i = 0; i < options.n_r; ++i) {
    const double r_hat = options.r_max * static_cast<double>(i + 1) / static_cast<double>(options.n_r);
    for (std::size_t j = 0; j < options.n_theta; ++j) {
      const double theta_hat =
          -0.5 * kPi + kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(options.n_theta);
      for (std::size_t k = 0; k < options.n_s; ++k) {
        const double s = static_cast<double>(k + 1) / static_cast<double>(options.n_s + 1);
        const double dr_hat = rng.uniform(-3.0, 3.0);
        const double dtheta_hat = rng.uniform(0.05, kPi - 0.05);
        const PCoefficients p = p_coefficients(r_hat, theta_hat, s, dr_hat, dtheta_hat);
        const double kg_closed = p.curvature(dr_hat, dtheta_hat);
        const double kg_generic =
            geodesic_curvature(preimage_jet(r_hat, theta_hat, dr_hat, dtheta_hat, s).polar());
        const double disc = p.discriminant();
        rep.rows.push_back({r_hat, theta_hat, s, dr_hat, dtheta_hat, p.P0, p.P1, p.P2, p.P3, disc,
                            kg_closed, kg_generic});
        rep.max_relative_error = std::max(rep.max_relative_error,
                                          std::abs(kg_closed - kg_generic) / std::abs(kg_generic));
        if (!(p.P0 > 0.0 && p.P1 < 0.0 && disc < 0.0)) ++rep.sign_violations;
      }
    }
  }
  Rng side_rng(mix_seed(seed, 2));
  for (std::size_t i = 0; i < options.side_specs; ++i) {
    const SideOrderingCase c = random_side_case(side_rng);
    rep.side.push_back(side_ordering(c.spec, c.s, options.side_samples));
    rep.side_violations += rep.side.back().violation_count;
  }
  return rep;
}

std::string SweepReport::to_csv() const {
  std::string out = "r_hat,theta_hat,s,P0,P1,P2,P3,discriminant,kg_closed,kg_generic\n";
  char buf[512];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  r.r_hat, r.theta_hat, r.s, r.P0, r.P1, r.P2, r.P3, r.discriminant, r.kg_closed,
                  r.kg_generic);
    out += buf;
  }
  return out;
}

nlohmann::json SweepReport::to_json() const {
  double max_disc = -std::numeric_limits<double>::infinity();
  for (const auto& r : rows) max_disc = std::max(max_disc, r.discriminant);
  double min_inner = std::numeric_limits<double>::infinity();
  double min_outer = std::numeric_limits<double>::infinity();
  double max_kg_x = -std::numeric_limits<double>::infinity();
  double min_kg_gamma = std::numeric_limits<double>::infinity();
  nlohmann::json first = nullptr;
  for (const auto& s : side) {
    min_inner = std::min(min_inner, s.min_inner_gap);
    min_outer = std::min(min_outer, s.min_outer_gap);
    max_kg_x = std::max(max_kg_x, s.max_kg_x);
    min_kg_gamma = std::min(min_kg_gamma, s.min_kg_gamma);
    if (first.is_null() && !s.pass()) first = s.to_json();
  }
  return {{"experiment", "curvature_decomposition"},
          {"seed", seed},
          {"grid",
           {{"r_hat", {{"count", options.n_r}, {"max", options.r_max}}},
            {"theta_hat", {{"count", options.n_theta}}},
            {"s", {{"count", options.n_s}}}}},
          {"points", rows.size()},
          {"max_relative_error", max_relative_error},
          {"sign_violations", sign_violations},
          {"max_discriminant", max_disc},
          {"side_ordering",
           {{"specs", side.size()},
            {"samples", options.side_samples},
            {"violations", side_violations},
            {"min_inner_gap", min_inner},
            {"min_outer_gap", min_outer},
            {"max_kg_x", max_kg_x},
            {"min_kg_gamma", min_kg_gamma},
            {"first_failure", first}}},
          {"pass", pass()}};
}

// ---------------------------------------------------------------------------
// Figures and traces

namespace {

class SvgCanvas {
 public:
  SvgCanvas() {
    out_ =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.05 -1.05 2.1 2.1\" "
        "width=\"800\" height=\"800\">\n"
        "<circle class=\"unit\" cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#000\" "
        "stroke-width=\"0.004\"/>\n";
  }

  void path(const char* cls, const std::vector<DiskPoint>& pts, bool closed, const char* stroke,
            double width) {
    out_ += "<polyline class=\"";
    out_ += cls;
    out_ += "\" fill=\"none\" stroke=\"";
    out_ += stroke;
    char buf[96];
    std::snprintf(buf, sizeof buf, "\" stroke-width=\"%.4f\" points=\"", width);
    out_ += buf;
    auto emit = [&](const DiskPoint& p) {
      // Only an axis flip: SVG y grows downward.
      std::snprintf(buf, sizeof buf, "%.6f,%.6f ", p.x(), -p.y());
      out_ += buf;
    };
    for (const DiskPoint& p : pts) emit(p);
    if (closed && !pts.empty()) emit(pts.front());
    out_ += "\"/>\n";
  }

  std::string finish() { return out_ + "</svg>\n"; }

 private:
  std::string out_;
};

std::vector<DiskPoint> curve_points(const ParamCurve& c, std::size_t n) {
  std::vector<DiskPoint> pts;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(c.point(static_cast<double>(i) / static_cast<double>(n - 1)));
  }
  return pts;
}

std::vector<DiskPoint> visible(const std::vector<DiskPoint>& pts) {
  std::vector<DiskPoint> out;
  for (const DiskPoint& p : pts) {
    if (p.norm() < 1.0) out.push_back(p);
  }
  return out;
}

}  // namespace

std::string render_svg(std::uint64_t seed, const RenderOptions& options) {
  Rng rng(mix_seed(seed, 0));
  const PolygonSampling small{4, 8, 0.2, 1.5};
  const GeodesicPolygon poly = random_hconvex_polygon(rng, DiskPoint{}, small);
  const SampledRegion source = sample_polygon(poly, options.samples_per_edge);
  const SampledRegion image =
      dilate_region(poly, DilationParams::about_origin(options.k1, options.k2),
                    options.samples_per_edge);

  const ChordSpec spec(rng.uniform(0.8, 1.8), rng.uniform(0.8, 1.8), rng.uniform(-1.2, -0.2),
                       rng.uniform(0.2, 1.2));
  const double s = options.k1 > 1.0 ? 1.0 / options.k1 : options.s;
  const ParamCurve chord = geodesic_between(spec.start(), spec.end());
  const ParamCurve x = preimage_curve(spec, s);
  const ParamCurve gamma = gamma_curve(x.start(), x.end());

  SvgCanvas svg;
  svg.path("source", visible(source.boundary()), false, "#1f77b4", 0.006);
  svg.path("image", visible(image.boundary()), false, "#d62728", 0.006);
  svg.path("chord", curve_points(chord, options.curve_samples), false, "#2ca02c", 0.005);
  svg.path("preimage", curve_points(x, options.curve_samples), false, "#9467bd", 0.005);
  svg.path("gamma", curve_points(gamma, options.curve_samples), false, "#ff7f0e", 0.005);
  return svg.finish();
}

std::string trace_csv(std::uint64_t seed, const std::string& curve, std::size_t samples) {
  if (samples < 2) throw DomainError("trace_csv: need at least 2 samples");
  Rng rng(mix_seed(seed, 0));
  const ChordSpec spec(rng.uniform(0.3, 3.0), rng.uniform(0.3, 3.0), rng.uniform(-1.4, -0.1),
                       rng.uniform(0.1, 1.4));
  const double s = rng.uniform(0.1, 0.9);
  std::optional<ParamCurve> c;
  if (curve == "geodesic") {
    c = geodesic_between(spec.start(), spec.end());
  } else if (curve == "preimage") {
    c = preimage_curve(spec, s);
  } else if (curve == "gamma") {
    const ParamCurve x = preimage_curve(spec, s);
    c = gamma_curve(x.start(), x.end());
  } else {
    throw DomainError("trace_csv: curve must be geodesic, preimage or gamma");
  }
  std::string out = "t,r,theta,x,y,kg\n";
  char buf[256];
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(samples - 1);
    const DiskPoint p = c->point(t);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", t, p.r(), p.theta(),
                  p.x(), p.y(), geodesic_curvature(*c, t));
    out += buf;
  }
  return out;
}

}  // namespace hypexpand
