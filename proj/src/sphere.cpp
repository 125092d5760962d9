#include "geosub/sphere.hpp"

#include <cmath>
#include <cstdlib>

namespace geosub {

namespace {
constexpr double kUnitNormTol = 1e-6;
constexpr double kCutLocusTol = 1e-8;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

double degeneracy_eps() {
  static const double eps = [] {
    if (const char* s = std::getenv("GEOSUB_EPS")) {
      const double v = std::atof(s);
      if (v > 0.0) return v;
    }
    return 1e-12;
  }();
  return eps;
}

UnitVector::UnitVector(const Vec3& v) {
  const double n = norm(v);
  if (std::abs(n - 1.0) > kUnitNormTol) {
    throw invalid_input("point is not on the unit sphere (norm " + std::to_string(n) + ")");
  }
  v_ = v * (1.0 / n);
}

TangentVector TangentVector::make(const UnitVector& base, const Vec3& dir) {
  if (std::abs(norm(dir) - 1.0) > 1e-10) {
    throw invalid_input("tangent direction is not unit length");
  }
  if (std::abs(dot(base.vec(), dir)) > 1e-8) {
    throw invalid_input("direction is not tangent to the sphere at its base point");
  }
  return TangentVector{base, dir};
}

double geodesic_distance(const UnitVector& p, const UnitVector& q) {
  return std::atan2(norm(cross(p.vec(), q.vec())), dot(p.vec(), q.vec()));
}

Vec3 rotate_about_axis(const Vec3& v, const Vec3& axis, double angle) {
  if (std::abs(norm(axis) - 1.0) > 1e-8) {
    throw invalid_input("rotation axis must be unit length");
  }
  const double c = std::cos(angle), s = std::sin(angle);
  return v * c + cross(axis, v) * s + axis * (dot(axis, v) * (1.0 - c));
}

UnitVector exp_map(const UnitVector& p, const Vec3& v) {
  const double n = norm(v);
  if (n == 0.0) return p;
  if (std::abs(dot(p.vec(), v)) > 1e-8 * std::max(1.0, n)) {
    throw invalid_input("exp_map argument is not tangent at p");
  }
  return UnitVector::unchecked(normalized(p.vec() * std::cos(n) + v * (std::sin(n) / n)));
}

Vec3 log_map(const UnitVector& p, const UnitVector& q) {
  const double d = geodesic_distance(p, q);
  if (d > kPi - kCutLocusTol) {
    throw domain_error("log_map undefined near the cut locus (antipodal points)");
  }
  if (d == 0.0) return Vec3{0.0, 0.0, 0.0};
  // Component of q orthogonal to p carries the direction.
  const Vec3 w = q.vec() - p.vec() * dot(p.vec(), q.vec());
  return normalized(w) * d;
}

double signed_angle(const TangentVector& u, const TangentVector& v) {
  if (norm(u.base.vec() - v.base.vec()) > 1e-10) {
    throw invalid_input("signed_angle requires a common base point");
  }
  return std::atan2(dot(u.base.vec(), cross(u.dir, v.dir)), dot(u.dir, v.dir));
}

UnitVector geodesic_point(const UnitVector& p, const UnitVector& q, double t) {
  const double d = geodesic_distance(p, q);
  if (d > kPi - kCutLocusTol) {
    throw domain_error("geodesic interpolation undefined for antipodal endpoints");
  }
  if (d == 0.0) return p;
  const double s = std::sin(d);
  const Vec3 r = p.vec() * (std::sin((1.0 - t) * d) / s) + q.vec() * (std::sin(t * d) / s);
  return UnitVector::unchecked(normalized(r));
}

TangentVector direction_towards(const UnitVector& p, const UnitVector& q) {
  const Vec3 l = log_map(p, q);
  const double n = norm(l);
  if (n < degeneracy_eps()) {
    throw degenerate_configuration("direction_towards of coincident points");
  }
  return TangentVector{p, l * (1.0 / n)};
}

}  // namespace geosub
