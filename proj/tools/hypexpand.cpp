// Command-line driver for the hyperbolic dilation experiments.
//
// Exit status: 0 when the checked property holds, 1 when it is violated,
// 2 for usage or configuration errors.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hypexpand/errors.hpp"
#include "hypexpand/experiments.hpp"
#include "hypexpand/spherical.hpp"

namespace {

using namespace hypexpand;

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::uint64_t seed = 1;
  std::optional<std::size_t> trials;
  std::optional<double> k1;
  std::optional<double> k2;
  std::optional<std::size_t> grid_n;
  std::optional<double> tol;
  std::string out;
  std::string format;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
}

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (cfg.format == a) return;
  }
  throw DomainError("unsupported --format '" + cfg.format + "' for this command");
}

int verify_theorem_cmd(RunConfig cfg, bool center_origin) {
  if (cfg.format.empty()) cfg.format = "json";
  require_format(cfg, {"json"});
  TheoremOptions opts;
  if (cfg.trials) opts.trials = *cfg.trials;
  opts.k1 = cfg.k1;
  opts.k2 = cfg.k2;
  if (cfg.tol) opts.threshold = *cfg.tol;
  opts.center_origin = center_origin;
  const TheoremReport rep = verify_theorem(cfg.seed, opts);
  emit(cfg, dump(rep.to_json()));
  std::fprintf(stderr, "verify-theorem: %zu trials, max defect %.3e, %s\n", rep.trials.size(),
               rep.max_defect(), rep.pass() ? "pass" : "FAIL");
  return rep.pass() ? kPass : kViolation;
}

int search_cmd(RunConfig cfg) {
  if (cfg.format.empty()) cfg.format = "json";
  require_format(cfg, {"json"});
  SearchOptions opts;
  if (cfg.k1) opts.k1 = *cfg.k1;
  if (cfg.k2) opts.k2 = *cfg.k2;
  if (cfg.trials) opts.budget = *cfg.trials;
  if (cfg.tol) opts.threshold = *cfg.tol;
  const SearchReport rep = search_counterexample(cfg.seed, opts);
  // The witness alone is the replayable artifact.
  emit(cfg, dump(rep.found() ? rep.witness->to_json() : rep.to_json()));
  if (rep.found()) {
    std::fprintf(stderr, "search-counterexample: witness at trial %zu (%s), defect %.6e\n",
                 rep.witness->trial, rep.witness->generator.c_str(), rep.witness->defect);
  } else {
    std::fprintf(stderr, "search-counterexample: none in %zu trials (max screen defect %.3e)\n",
                 rep.trials_run, rep.max_screen_defect);
  }
  return rep.found() ? kPass : kViolation;
}

int replay_cmd(const RunConfig& cfg, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot read " + path);
  const Witness w = Witness::from_json(nlohmann::json::parse(f));
  const double got = replay_witness(w);
  const double tol = cfg.tol.value_or(1e-9);
  const bool ok = std::abs(got - w.defect) <= tol;
  std::printf("stored %.17g\nreplay %.17g\n|diff| %.3e (tol %.1e) %s\n", w.defect, got,
              std::abs(got - w.defect), tol, ok ? "ok" : "MISMATCH");
  return ok ? kPass : kViolation;
}

std::string lemma_table(const LemmaSuite& suite) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-14s %10s %14s %10s  %s\n", "lemma", "points", "min margin",
                "violations", "status");
  os << line;
  for (const auto& g : suite.grids) {
    std::snprintf(line, sizeof line, "%-14s %10zu %14.6e %10zu  %s\n", g.lemma.c_str(), g.points,
                  g.min_margin, g.violation_count, g.pass() ? "pass" : "FAIL");
    os << line;
  }
  for (const auto& s : suite.series) {
    const bool ok = s.max_relative_error < suite.series_tolerance;
    std::snprintf(line, sizeof line, "%-22s rel err %.3e over %zu points  %s\n", s.identity.c_str(),
                  s.max_relative_error, s.points, ok ? "pass" : "FAIL");
    os << line;
  }
  for (const auto& m : suite.monotone) {
    std::snprintf(line, sizeof line, "f(a=%.1f, y) max slope %.4f  %s\n", m.a, m.max_slope,
                  m.pass() ? "pass" : "FAIL");
    os << line;
  }
  return os.str();
}

int lemmas_cmd(RunConfig cfg) {
  if (cfg.format.empty()) cfg.format = "json";
  require_format(cfg, {"json", "table"});
  const LemmaSuite suite = verify_lemmas(cfg.grid_n.value_or(500));
  emit(cfg, cfg.format == "table" ? lemma_table(suite) : dump(suite.to_json()));
  return suite.pass() ? kPass : kViolation;
}

int sweep_cmd(RunConfig cfg, const std::string& csv_path) {
  if (cfg.format.empty()) cfg.format = "json";
  require_format(cfg, {"json", "csv"});
  SweepOptions opts;
  if (cfg.grid_n) opts.n_r = opts.n_theta = *cfg.grid_n;
  if (cfg.trials) opts.side_specs = *cfg.trials;
  const SweepReport rep = curvature_sweep(cfg.seed, opts);
  const double tol = cfg.tol.value_or(1e-8);
  if (!csv_path.empty()) {
    RunConfig side = cfg;
    side.out = csv_path;
    emit(side, rep.to_csv());
  }
  emit(cfg, cfg.format == "csv" ? rep.to_csv() : dump(rep.to_json()));
  std::fprintf(stderr, "curvature-sweep: %zu points, max rel err %.3e, sign violations %zu, "
               "side-ordering violations %zu\n",
               rep.rows.size(), rep.max_relative_error, rep.sign_violations, rep.side_violations);
  return rep.pass(tol) ? kPass : kViolation;
}

int sphere_cmd(RunConfig cfg) {
  if (cfg.format.empty()) cfg.format = "json";
  require_format(cfg, {"json"});
  ConjectureOptions opts;
  if (cfg.tol) opts.threshold = *cfg.tol;
  const ConjectureReport rep = conjecture_trial(cfg.seed, cfg.trials.value_or(500), opts);
  emit(cfg, dump(rep.to_json()));
  std::fprintf(stderr, "sphere-conjecture: %zu trials, %zu exceedances (%zu symmetric)\n",
               rep.trials.size(), rep.exceedances(), rep.symmetric_exceedances());
  // The asymmetric outcome is data; only the symmetric regime is a known result.
  return rep.symmetric_exceedances() == 0 ? kPass : kViolation;
}

int render_cmd(RunConfig cfg) {
  if (cfg.format.empty()) cfg.format = "svg";
  require_format(cfg, {"svg"});
  RenderOptions opts;
  if (cfg.k1) opts.k1 = *cfg.k1;
  if (cfg.k2) opts.k2 = *cfg.k2;
  emit(cfg, render_svg(cfg.seed, opts));
  return kPass;
}

int trace_cmd(RunConfig cfg, const std::string& curve) {
  if (cfg.format.empty()) cfg.format = "csv";
  require_format(cfg, {"csv"});
  emit(cfg, trace_csv(cfg.seed, curve, cfg.grid_n.value_or(65)));
  return kPass;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  sub->add_option("--out", cfg.out, "output path (default: stdout)");
  sub->add_option("--format", cfg.format, "output format: json, csv, svg or table");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymmetric dilations of the Poincare disk: experiments and checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  bool center_origin = false;
  auto* theorem = app.add_subcommand("verify-theorem", "expansion trials (k1, k2 >= 1)");
  add_common(theorem, cfg);
  theorem->add_option("--trials", cfg.trials, "number of trials (default 200)");
  theorem->add_option("--k1", cfg.k1, "force k1 (default uniform in [1, 4])");
  theorem->add_option("--k2", cfg.k2, "force k2 (default uniform in [1, 4])");
  theorem->add_option("--tol", cfg.tol, "defect threshold (default 1e-6)");
  theorem->add_flag("--center-origin", center_origin, "dilate about the origin");

  auto* search = app.add_subcommand("search-counterexample", "contraction counterexample search");
  add_common(search, cfg);
  search->add_option("--trials", cfg.trials, "trial budget (default 2000)");
  search->add_option("--k1", cfg.k1, "contracting factor, < 1 (default 0.25)");
  search->add_option("--k2", cfg.k2, "second factor (default 1)");
  search->add_option("--tol", cfg.tol, "witness defect threshold (default 1e-3)");

  std::string witness_path;
  auto* replay = app.add_subcommand("replay", "recompute a stored witness");
  replay->add_option("witness", witness_path, "witness JSON file")->required();
  replay->add_option("--tol", cfg.tol, "allowed |difference| (default 1e-9)");

  auto* lemmas = app.add_subcommand("verify-lemmas", "grid checks of the scalar inequalities");
  add_common(lemmas, cfg);
  lemmas->add_option("--grid-n", cfg.grid_n, "points per grid axis (default 500)");

  std::string csv_path;
  auto* sweep = app.add_subcommand("curvature-sweep", "P-coefficient sweep and side ordering");
  add_common(sweep, cfg);
  sweep->add_option("--grid-n", cfg.grid_n, "points on the r_hat and theta_hat axes (default 50)");
  sweep->add_option("--trials", cfg.trials, "side-ordering chord specs (default 100)");
  sweep->add_option("--tol", cfg.tol, "relative tolerance for the reconstruction (default 1e-8)");
  sweep->add_option("--csv", csv_path, "also write the per-point CSV here");

  auto* sphere = app.add_subcommand("sphere-conjecture", "spherical contraction trials");
  add_common(sphere, cfg);
  sphere->add_option("--trials", cfg.trials, "number of trials (default 500)");
  sphere->add_option("--tol", cfg.tol, "exceedance threshold (default 1e-6)");

  auto* render = app.add_subcommand("render", "SVG of a region, its image and the chord comparison curves");
  add_common(render, cfg);
  render->add_option("--k1", cfg.k1, "dilation factor k1 (default 2)");
  render->add_option("--k2", cfg.k2, "dilation factor k2 (default 1)");

  std::string curve = "geodesic";
  auto* trace = app.add_subcommand("trace", "CSV trace t, r, theta, x, y, kg of a curve");
  add_common(trace, cfg);
  trace->add_option("--curve", curve, "geodesic, preimage or gamma")->capture_default_str();
  trace->add_option("--grid-n", cfg.grid_n, "number of samples (default 65)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*theorem) return verify_theorem_cmd(cfg, center_origin);
    if (*search) return search_cmd(cfg);
    if (*replay) return replay_cmd(cfg, witness_path);
    if (*lemmas) return lemmas_cmd(cfg);
    if (*sweep) return sweep_cmd(cfg, csv_path);
    if (*sphere) return sphere_cmd(cfg);
    if (*render) return render_cmd(cfg);
    if (*trace) return trace_cmd(cfg, curve);
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "error: malformed input: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kViolation;
  }
  return kUsage;
}
