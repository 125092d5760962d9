#pragma once

#include <vector>

#include "geosub/sphere.hpp"

namespace geosub {

struct SpherePolygon;
struct PlanarPolygon;

/// Signed turn angle at q from the direction q1->q to the direction q->q2,
/// counterclockwise positive.
double planar_turn_angle(const Vec2& q1, const Vec2& q, const Vec2& q2);

/// Discrete curvature of a planar V-line: 2*defect / (|q q1| + |q q2|).
double planar_vline_curvature(const Vec2& q1, const Vec2& q, const Vec2& q2);

/// Discrete geodesic curvature of a geodesic V-line: 2*delta / (l1 + l2).
double geodesic_vline_curvature(const UnitVector& p1, const UnitVector& p,
                                const UnitVector& p2);

/// Chord variant: 2*sin(delta) / d(p1, p2).
double chord_curvature(const UnitVector& p1, const UnitVector& p, const UnitVector& p2);

/// Signed inverse circumradius of three planar points; 0 when collinear.
double circumcircle_curvature_planar(const Vec2& q1, const Vec2& q, const Vec2& q2);

/// Geodesic curvature cot(rho) of the small circle through three points,
/// rho its spherical radius; signed by turn direction, 0 on a great circle.
double spherical_circumcircle_curvature(const UnitVector& p1, const UnitVector& p,
                                        const UnitVector& p2);

enum class CurvatureEstimator { Defect, Chord, Circumcircle };

/// Arc-length-indexed curvature samples along a polygon.
struct CurvatureSeries {
  struct Sample {
    double s;      // cumulative geodesic arc length
    double kappa;  // 1/radians
  };
  std::vector<Sample> samples;
  bool skipped_degenerate = false;
};

/// One sample per interior vertex (every vertex if closed); s of vertex i is
/// the summed edge length up to i. Degenerate vertices are skipped and
/// flagged.
CurvatureSeries polygon_curvature_series(const SpherePolygon& P, CurvatureEstimator est);

/// Planar counterpart; the Chord estimator uses 2*sin(defect)/|chord|.
CurvatureSeries polygon_curvature_series(const PlanarPolygon& P, CurvatureEstimator est);

struct NormalSegment {
  UnitVector point;
  Vec3 direction;  // tangent-plane vector, length scale*|kappa|; zero if flat
};

/// Discrete normals: at each interior vertex, the tangent direction toward
/// the center of the local circumscribed small circle, scaled by the local
/// circumcircle curvature magnitude.
std::vector<NormalSegment> discrete_normals(const SpherePolygon& P, double scale);

}  // namespace geosub
