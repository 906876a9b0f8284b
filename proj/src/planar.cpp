#include "hypexpand/planar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hypexpand {

double signed_area(std::span<const Vec2> loop) {
  double acc = 0.0;
  for (std::size_t i = 0, n = loop.size(); i < n; ++i) {
    acc += cross(loop[i], loop[(i + 1) % n]);
  }
  return 0.5 * acc;
}

namespace {

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const int o1 = sign(orient(a, b, c));
  const int o2 = sign(orient(a, b, d));
  const int o3 = sign(orient(c, d, a));
  const int o4 = sign(orient(c, d, b));
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

}  // namespace

bool is_simple_polygon(std::span<const Vec2> loop) {
  const std::size_t n = loop.size();
  if (n < 3) return false;
  struct Box {
    double x0, x1, y0, y1;
  };
  std::vector<Box> boxes(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = loop[i];
    const Vec2 b = loop[(i + 1) % n];
    boxes[i] = {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) {
        // Adjacent edges share a vertex; they only conflict if they fold back.
        const std::size_t shared = (j == i + 1) ? j : i;
        const Vec2 p = loop[(shared + n - 1) % n];
        const Vec2 q = loop[shared];
        const Vec2 r = loop[(shared + 1) % n];
        if (orient(p, q, r) == 0.0 && dot(p - q, r - q) > 0.0) return false;
        continue;
      }
      const Box& bi = boxes[i];
      const Box& bj = boxes[j];
      if (bi.x1 < bj.x0 || bj.x1 < bi.x0 || bi.y1 < bj.y0 || bj.y1 < bi.y0) continue;
      if (segments_intersect(loop[i], loop[(i + 1) % n], loop[j], loop[(j + 1) % n])) return false;
    }
  }
  return true;
}

int winding_number(std::span<const Vec2> loop, Vec2 p) {
  int wn = 0;
  for (std::size_t i = 0, n = loop.size(); i < n; ++i) {
    const Vec2 a = loop[i];
    const Vec2 b = loop[(i + 1) % n];
    if (a.y <= p.y) {
      if (b.y > p.y && orient(a, b, p) > 0.0) ++wn;
    } else if (b.y <= p.y && orient(a, b, p) < 0.0) {
      --wn;
    }
  }
  return wn;
}

double distance_to_segment(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const Vec2 d = p - (a + t * ab);
  return std::hypot(d.x, d.y);
}

double distance_to_loop(std::span<const Vec2> loop, Vec2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0, n = loop.size(); i < n; ++i) {
    best = std::min(best, distance_to_segment(p, loop[i], loop[(i + 1) % n]));
  }
  return best;
}

std::vector<std::size_t> convex_hull_indices(std::span<const Vec2> pts) {
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return pts[a].x < pts[b].x || (pts[a].x == pts[b].x && pts[a].y < pts[b].y);
  });
  if (idx.size() < 3) return idx;
  // Andrew's monotone chain.
  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i : idx) {
    while (k >= 2 && orient(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0.0) --k;
    hull[k++] = i;
  }
  for (std::size_t j = idx.size() - 1, lower = k + 1; j-- > 0;) {
    const std::size_t i = idx[j];
    while (k >= lower && orient(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0.0) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

bool is_convex_ccw(std::span<const Vec2> loop, double tol) {
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = loop[i];
    const Vec2 b = loop[(i + 1) % n];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (orient(a, b, loop[j]) < -tol) return false;
    }
  }
  return true;
}

double outside_distance(std::span<const Vec2> loop, Vec2 p, double boundary_tol) {
  if (winding_number(loop, p) != 0) return 0.0;
  const double d = distance_to_loop(loop, p);
  return d < boundary_tol ? 0.0 : d;
}

double chord_defect(std::span<const Vec2> loop, std::span<const std::size_t> corners,
                    std::size_t pair_samples, std::size_t segment_samples, double boundary_tol) {
  const std::size_t n = loop.size();
  double defect = 0.0;
  auto probe = [&](std::size_t i, std::size_t j) {
    const Vec2 a = loop[i];
    const Vec2 b = loop[j];
    for (unsigned m = 1; m <= segment_samples; ++m) {
      const double t = radical_inverse(m, 2);
      defect = std::max(defect, outside_distance(loop, a + t * (b - a), boundary_tol));
    }
  };
  for (std::size_t a = 0; a < corners.size(); ++a) {
    for (std::size_t b = a + 1; b < corners.size(); ++b) probe(corners[a], corners[b]);
  }
  for (unsigned k = 1; k <= pair_samples; ++k) {
    const auto i = static_cast<std::size_t>(radical_inverse(k, 2) * static_cast<double>(n)) % n;
    const auto j = static_cast<std::size_t>(radical_inverse(k, 3) * static_cast<double>(n)) % n;
    if (i != j) probe(i, j);
  }
  return defect;
}

double radical_inverse(unsigned n, unsigned base) {
  double inv = 1.0 / base;
  double f = inv;
  double v = 0.0;
  while (n > 0) {
    v += f * static_cast<double>(n % base);
    n /= base;
    f *= inv;
  }
  return v;
}

}  // namespace hypexpand
