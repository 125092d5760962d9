#pragma once

#include "geosub/error.hpp"
#include "geosub/vec.hpp"

namespace geosub {

/// A point on the unit sphere. Construction renormalizes inputs within
/// 1e-6 of unit norm and rejects anything further off.
class UnitVector {
public:
  UnitVector() : v_{1.0, 0.0, 0.0} {}
  explicit UnitVector(const Vec3& v);
  UnitVector(double x, double y, double z) : UnitVector(Vec3{x, y, z}) {}

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

  UnitVector antipode() const { return unchecked(-v_); }

  /// Wraps an already-unit vector without the norm check.
  static UnitVector unchecked(const Vec3& v) {
    UnitVector u;
    u.v_ = v;
    return u;
  }

private:
  Vec3 v_;
};

/// A unit direction in the tangent plane of its base point.
struct TangentVector {
  UnitVector base;
  Vec3 dir;  // unit length, orthogonal to base

  static TangentVector make(const UnitVector& base, const Vec3& dir);
};

/// Great-circle angle in [0, pi], stable near 0 and pi.
double geodesic_distance(const UnitVector& p, const UnitVector& q);

/// Rodrigues rotation of v about a unit axis.
Vec3 rotate_about_axis(const Vec3& v, const Vec3& axis, double angle);

/// Walks from p along the tangent vector v; ||v|| is the arc length.
UnitVector exp_map(const UnitVector& p, const Vec3& v);

/// Inverse of exp_map; undefined at the cut locus (q near -p).
Vec3 log_map(const UnitVector& p, const UnitVector& q);

/// Angle from u.dir to v.dir in the common tangent plane, oriented by the
/// outward normal (the base point itself). Result in (-pi, pi].
double signed_angle(const TangentVector& u, const TangentVector& v);

/// Spherical linear interpolation; t=0 gives p, t=1 gives q.
UnitVector geodesic_point(const UnitVector& p, const UnitVector& q, double t);

/// Unit tangent at p pointing toward q.
TangentVector direction_towards(const UnitVector& p, const UnitVector& q);

}  // namespace geosub
