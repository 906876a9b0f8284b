#include "hypexpand/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "hypexpand/curvature_analysis.hpp"
#include "hypexpand/errors.hpp"

namespace hypexpand {

namespace {

constexpr std::size_t kKeptViolations = 16;

void require_unit_open(double y, const char* who) {
  if (!(y > 0.0 && y < 1.0)) throw DomainError(std::string(who) + ": y must lie in (0, 1)");
}

void require_positive(double x, const char* who) {
  if (!(x > 0.0)) throw DomainError(std::string(who) + ": x must be positive");
}

}  // namespace

double sinh_scaling_series(double x, double y, int max_k) {
  const double x2 = x * x;
  const double y2 = y * y;
  double base = x2 * x2 * x / 120.0;  // x^(2k+1) / (2k+1)! at k = 2
  double ypow = y2;                   // y^(2k-2)
  double sum = 0.0;
  for (int k = 2; k <= max_k; ++k) {
    const double term = -base * (1.0 - ypow);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    base *= x2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    ypow *= y2;
  }
  return y * y2 * sum;
}

double lemma_sinh_scaling(double x, double y) {
  require_positive(x, "lemma_sinh_scaling");
  require_unit_open(y, "lemma_sinh_scaling");
  if (x < 1e-3) return -sinh_scaling_series(x, y);
  return y * y * y * phi(x) - phi(x * y);
}

double lemma_coth_ratio(double x, double y) {
  require_positive(x, "lemma_coth_ratio");
  require_unit_open(y, "lemma_coth_ratio");
  const double psi_x = psi(x);
  const double psi_xy = psi(x * y);
  const double gap = psi_x - psi_xy;
  if (!(gap > 0.0)) {
    throw DegenerateError("lemma_coth_ratio: psi(x) - psi(xy) must be positive (psi is increasing)");
  }
  const double rhs = y * y * phi(2.0 * x) / (4.0 * (1.0 - y) * (1.0 + y));
  return rhs - x * psi_xy * psi_x / gap;
}

double coth_ratio_f(double a, double y) {
  require_positive(a, "coth_ratio_f");
  require_unit_open(y, "coth_ratio_f");
  const double psi_a = psi(a);
  const double psi_ay = psi(a * y);
  return (psi_a - psi_ay) / (a * psi_ay * psi_a) -
         4.0 * (1.0 - y) * (1.0 + y) / (y * y * phi(2.0 * a));
}

double coth_poly_series(double x, int max_k) {
  const double x2 = x * x;
  // 2^(2k+2) x^(2k+4) / (2k+4)! at k = 3.
  double base = 256.0 * std::pow(x, 10) / 3628800.0;
  double sum = 0.0;
  for (int k = 3; k <= max_k; ++k) {
    const double term = base * (2.0 * k + 3.0) * (k - 1.0) * (k - 2.0);
    sum += term;
    if (term <= 1e-17 * sum) break;
    base *= 4.0 * x2 / ((2.0 * k + 5.0) * (2.0 * k + 6.0));
  }
  return sum;
}

double coth_poly_I(double x) {
  require_positive(x, "coth_poly_I");
  if (x < 1.0) return coth_poly_series(x);
  const double w = x * std::cosh(x) - std::sinh(x);
  return x * x * x * (0.5 * std::sinh(2.0 * x) - x) - 6.0 * w * w;
}

double lemma_coth_poly(double x) {
  require_positive(x, "lemma_coth_poly");
  if (x < 1.0) {
    const double sh = std::sinh(x);
    return coth_poly_series(x) / (sh * sh);
  }
  const double coth = 1.0 / std::tanh(x);
  const double sh = std::sinh(x);
  const double p = psi(x);
  return x * x * x * (coth - x / (sh * sh)) - 6.0 * p * p;
}

double lemma_sin_scaling(double x, double y) {
  if (!(x > 0.0 && x < kPi)) throw DomainError("lemma_sin_scaling: x must lie in (0, pi)");
  if (!(y >= 0.0 && y <= 1.0)) throw DomainError("lemma_sin_scaling: y must lie in [0, 1]");
  return std::sin(x * y) - y * std::sin(x);
}

double sin_scaling_slope(double x, double y) { return y * (std::cos(x * y) - std::cos(x)); }

std::vector<double> GridAxis::values() const {
  std::vector<double> v(count);
  if (count == 1) {
    v[0] = lo;
    return v;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(count - 1);
    if (spacing == "log") {
      v[i] = lo * std::pow(hi / lo, u);
    } else if (spacing == "cluster") {
      v[i] = lo + (hi - lo) * 0.5 * (1.0 - std::cos(kPi * u));
    } else {
      v[i] = lo + (hi - lo) * u;
    }
  }
  v.front() = lo;
  v.back() = hi;
  return v;
}

nlohmann::json GridAxis::to_json() const {
  return {{"name", name}, {"lo", lo}, {"hi", hi}, {"count", count}, {"spacing", spacing}};
}

nlohmann::json GridReport::to_json() const {
  nlohmann::json axes_json = nlohmann::json::array();
  for (const auto& a : axes) axes_json.push_back(a.to_json());
  nlohmann::json v = nlohmann::json::array();
  for (const auto& e : violations) v.push_back({{"x", e.x}, {"y", e.y}, {"margin", e.margin}});
  return {{"lemma", lemma},
          {"grid", axes_json},
          {"points", points},
          {"min_margin", min_margin},
          {"violation_count", violation_count},
          {"violations", v},
          {"pass", pass()}};
}

nlohmann::json SeriesCheck::to_json() const {
  return {{"identity", identity}, {"max_relative_error", max_relative_error}, {"points", points}};
}

namespace {

GridReport sweep(std::string lemma, GridAxis ax, GridAxis ay,
                 const std::function<double(double, double)>& margin) {
  GridReport rep;
  rep.lemma = std::move(lemma);
  rep.min_margin = std::numeric_limits<double>::infinity();
  const std::vector<double> xs = ax.values();
  const std::vector<double> ys = ay.values();
  for (double x : xs) {
    for (double y : ys) {
      const double m = margin(x, y);
      ++rep.points;
      rep.min_margin = std::min(rep.min_margin, m);
      if (!(m > 0.0)) {
        ++rep.violation_count;
        if (rep.violations.size() < kKeptViolations) rep.violations.push_back({x, y, m});
      }
    }
  }
  rep.axes = {std::move(ax), std::move(ay)};
  return rep;
}

GridAxis open_unit_axis(std::string name, std::size_t n) {
  return {std::move(name), kLemmaInset, 1.0 - kLemmaInset, n, "cluster"};
}

}  // namespace

GridReport verify_sinh_scaling(std::size_t n) {
  return sweep("sinh_scaling", {"x", kLemmaInset, 20.0, n, "log"}, open_unit_axis("y", n),
               lemma_sinh_scaling);
}

GridReport verify_coth_ratio(std::size_t n) {
  return sweep("coth_ratio", {"x", kLemmaInset, 10.0, n, "log"}, open_unit_axis("y", n),
               lemma_coth_ratio);
}

GridReport verify_coth_poly(std::size_t n) {
  return sweep("coth_poly", {"a", kLemmaInset, 10.0, n, "log"}, open_unit_axis("y", n),
               [](double a, double y) { return lemma_coth_poly(a * y); });
}

GridReport verify_sin_scaling(std::size_t n) {
  return sweep("sin_scaling", {"x", kLemmaInset, kPi - kLemmaInset, n, "cluster"},
               open_unit_axis("y", n), lemma_sin_scaling);
}

SeriesCheck check_sinh_scaling_series(std::size_t n) {
  SeriesCheck c{"sinh_scaling_series", 0.0, 0};
  const GridAxis ax{"x", 0.5, 5.0, n, "linear"};
  const GridAxis ay{"y", 0.05, 0.95, n, "linear"};
  for (double x : ax.values()) {
    for (double y : ay.values()) {
      const long double lx = x;
      const long double ly = y;
      const long double direct =
          std::sinh(lx * ly) - ly * ly * ly * std::sinh(lx) - lx * ly + lx * ly * ly * ly;
      const double series = sinh_scaling_series(x, y, 30);
      const double rel = static_cast<double>(std::abs((series - direct) / direct));
      c.max_relative_error = std::max(c.max_relative_error, rel);
      ++c.points;
    }
  }
  return c;
}

SeriesCheck check_coth_poly_series(std::size_t n) {
  SeriesCheck c{"coth_poly_series", 0.0, 0};
  const GridAxis ax{"x", 0.25, 4.0, n, "linear"};
  for (double x : ax.values()) {
    const long double lx = x;
    const long double w = lx * std::cosh(lx) - std::sinh(lx);
    const long double direct = lx * lx * lx * (std::sinh(2.0L * lx) / 2.0L - lx) - 6.0L * w * w;
    const double series = coth_poly_series(x, 40);
    c.max_relative_error =
        std::max(c.max_relative_error, static_cast<double>(std::abs((series - direct) / direct)));
    ++c.points;
  }
  return c;
}

}  // namespace hypexpand
