#pragma once

#include "hypexpand/disk.hpp"

namespace hypexpand {

/// Radius past which tanh(r/2) is numerically indistinguishable from 1 for
/// practical purposes; dilation results beyond it are flagged as saturated.
inline constexpr double kSaturationRadius = 50.0;

/// Center and axis factors of an asymmetric dilation. Factors must be
/// positive; values below 1 (contraction) are allowed.
class DilationParams {
 public:
  /// Throws DomainError unless k1, k2 > 0 and finite.
  DilationParams(DiskPoint center, double k1, double k2);
  static DilationParams about_origin(double k1, double k2) { return {DiskPoint{}, k1, k2}; }

  const DiskPoint& center() const { return center_; }
  double k1() const { return k1_; }
  double k2() const { return k2_; }
  /// Reciprocal of k1, the contraction factor of the inverse map.
  double s() const { return 1.0 / k1_; }
  bool is_expansion() const { return k1_ >= 1.0 && k2_ >= 1.0; }
  DilationParams inverse() const { return {center_, 1.0 / k1_, 1.0 / k2_}; }

 private:
  DiskPoint center_;
  double k1_;
  double k2_;
};

/// X(r, theta) -> X(r sqrt(k1^2 cos^2 + k2^2 sin^2), atan2(k2 sin, k1 cos)).
DiskPoint dilate_origin(double k1, double k2, const DiskPoint& p);

/// Dilation about params.center(), by conjugating dilate_origin with the
/// translation that carries 0 to the center.
DiskPoint dilate(const DilationParams& params, const DiskPoint& p);

DiskPoint dilate_inverse(const DilationParams& params, const DiskPoint& p);

inline bool is_saturated(const DiskPoint& p) { return p.r() > kSaturationRadius; }

}  // namespace hypexpand
