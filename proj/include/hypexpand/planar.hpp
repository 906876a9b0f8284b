#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hypexpand {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
/// Twice the signed area of (o, a, b); positive for a left turn.
inline double orient(Vec2 o, Vec2 a, Vec2 b) { return cross(a - o, b - o); }

// Loops below are open: the closing edge from back() to front() is implicit.

double signed_area(std::span<const Vec2> loop);
bool is_simple_polygon(std::span<const Vec2> loop);
int winding_number(std::span<const Vec2> loop, Vec2 p);
double distance_to_segment(Vec2 p, Vec2 a, Vec2 b);
double distance_to_loop(std::span<const Vec2> loop, Vec2 p);
/// Counterclockwise strict convex hull (collinear points dropped), as indices
/// into pts.
std::vector<std::size_t> convex_hull_indices(std::span<const Vec2> pts);
/// Vertex cross-product test; tolerance applies to orient() values.
bool is_convex_ccw(std::span<const Vec2> loop, double tol);

/// Largest distance by which straight chords between loop samples leave the
/// loop's interior. Chords join every pair of corner indices plus
/// pair_samples Halton-stratified pairs; each chord is probed at the first
/// segment_samples points of the base-2 van der Corput sequence. Points
/// within boundary_tol of the loop count as inside.
double chord_defect(std::span<const Vec2> loop, std::span<const std::size_t> corners,
                    std::size_t pair_samples, std::size_t segment_samples, double boundary_tol);
/// 0 inside (or within boundary_tol of the loop), else distance to the loop.
double outside_distance(std::span<const Vec2> loop, Vec2 p, double boundary_tol);

/// Van der Corput radical inverse of n in the given base; n >= 1 lies in (0, 1).
double radical_inverse(unsigned n, unsigned base);

}  // namespace hypexpand
