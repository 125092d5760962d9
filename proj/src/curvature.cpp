#include "geosub/curvature.hpp"

#include <cmath>

#include "geosub/polygon.hpp"
#include "geosub/triangle.hpp"

namespace geosub {

double planar_turn_angle(const Vec2& q1, const Vec2& q, const Vec2& q2) {
  const Vec2 in = q - q1;
  const Vec2 out = q2 - q;
  if (norm(in) < degeneracy_eps() || norm(out) < degeneracy_eps()) {
    throw degenerate_configuration("turn angle of coincident points");
  }
  return std::atan2(cross(in, out), dot(in, out));
}

double planar_vline_curvature(const Vec2& q1, const Vec2& q, const Vec2& q2) {
  const double defect = planar_turn_angle(q1, q, q2);
  return 2.0 * defect / (norm(q - q1) + norm(q2 - q));
}

double geodesic_vline_curvature(const UnitVector& p1, const UnitVector& p,
                                const UnitVector& p2) {
  const TriangleFrame f = frame_at_vertex(p1, p, p2);
  return 2.0 * f.delta / (f.l_prev + f.l_next);
}

double chord_curvature(const UnitVector& p1, const UnitVector& p, const UnitVector& p2) {
  const TriangleFrame f = frame_at_vertex(p1, p, p2);
  return 2.0 * std::sin(f.delta) / f.l_chord;
}

double circumcircle_curvature_planar(const Vec2& q1, const Vec2& q, const Vec2& q2) {
  const Vec2 a = q - q1;
  const Vec2 b = q2 - q;
  const Vec2 c = q2 - q1;
  if (norm(a) < degeneracy_eps() || norm(b) < degeneracy_eps()) {
    throw degenerate_configuration("circumcircle of coincident points");
  }
  // 1/R = 2*cross(a,b) / (|a||b||c|); the cross sign carries the turn
  // direction, collinear triples give 0.
  return 2.0 * cross(a, b) / (norm(a) * norm(b) * norm(c));
}

double spherical_circumcircle_curvature(const UnitVector& p1, const UnitVector& p,
                                        const UnitVector& p2) {
  const Vec3 n = cross(p.vec() - p1.vec(), p2.vec() - p.vec());
  const double nn = norm(n);
  if (nn < degeneracy_eps()) {
    throw degenerate_configuration("circumscribed circle of a degenerate spherical triple");
  }
  // The plane through the three points has unit normal n/|n|; that normal is
  // the spherical center on the turn side, and rho is the angle from it to
  // any of the vertices. cot(rho) is then signed by the turn direction; a
  // great-circle triple has its plane through the origin and yields 0.
  const Vec3 center = n * (1.0 / nn);
  const double c = dot(center, p.vec());
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  return c / s;
}

namespace {

double estimate(CurvatureEstimator est, const UnitVector& a, const UnitVector& b,
                const UnitVector& c) {
  switch (est) {
    case CurvatureEstimator::Defect:
      return geodesic_vline_curvature(a, b, c);
    case CurvatureEstimator::Chord:
      return chord_curvature(a, b, c);
    case CurvatureEstimator::Circumcircle:
      return spherical_circumcircle_curvature(a, b, c);
  }
  throw invalid_input("unknown curvature estimator");
}

}  // namespace

CurvatureSeries polygon_curvature_series(const SpherePolygon& P, CurvatureEstimator est) {
  if (P.size() < 3) throw invalid_input("curvature series needs at least three vertices");
  CurvatureSeries series;
  const long n = static_cast<long>(P.size());
  const long first = P.closed ? 0 : 1;
  const long last = P.closed ? n - 1 : n - 2;
  const std::vector<double> e = edge_lengths(P);
  double s = 0.0;
  for (long i = 0; i <= last; ++i) {
    if (i >= first) {
      try {
        series.samples.push_back(
            {s, estimate(est, P.at_wrapped(i - 1), P.at_wrapped(i), P.at_wrapped(i + 1))});
      } catch (const degenerate_configuration&) {
        series.skipped_degenerate = true;
      }
    }
    if (i < static_cast<long>(e.size())) s += e[static_cast<std::size_t>(i)];
  }
  return series;
}

CurvatureSeries polygon_curvature_series(const PlanarPolygon& P, CurvatureEstimator est) {
  if (P.size() < 3) throw invalid_input("curvature series needs at least three vertices");
  CurvatureSeries series;
  const long n = static_cast<long>(P.size());
  const long first = P.closed ? 0 : 1;
  const long last = P.closed ? n - 1 : n - 2;
  const std::vector<double> e = edge_lengths(P);
  double s = 0.0;
  for (long i = 0; i <= last; ++i) {
    if (i >= first) {
      const Vec2& a = P.at_wrapped(i - 1);
      const Vec2& p = P.at_wrapped(i);
      const Vec2& b = P.at_wrapped(i + 1);
      try {
        double kappa = 0.0;
        switch (est) {
          case CurvatureEstimator::Defect:
            kappa = planar_vline_curvature(a, p, b);
            break;
          case CurvatureEstimator::Chord:
            kappa = 2.0 * std::sin(planar_turn_angle(a, p, b)) / norm(b - a);
            break;
          case CurvatureEstimator::Circumcircle:
            kappa = circumcircle_curvature_planar(a, p, b);
            break;
        }
        series.samples.push_back({s, kappa});
      } catch (const degenerate_configuration&) {
        series.skipped_degenerate = true;
      }
    }
    if (i < static_cast<long>(e.size())) s += e[static_cast<std::size_t>(i)];
  }
  return series;
}

std::vector<NormalSegment> discrete_normals(const SpherePolygon& P, double scale) {
  if (P.size() < 3) throw invalid_input("discrete normals need at least three vertices");
  std::vector<NormalSegment> out;
  const long n = static_cast<long>(P.size());
  const long first = P.closed ? 0 : 1;
  const long last = P.closed ? n - 1 : n - 2;
  for (long i = first; i <= last; ++i) {
    const UnitVector& a = P.at_wrapped(i - 1);
    const UnitVector& p = P.at_wrapped(i);
    const UnitVector& b = P.at_wrapped(i + 1);
    const double kappa = spherical_circumcircle_curvature(a, p, b);
    NormalSegment seg{p, Vec3{0.0, 0.0, 0.0}};
    if (std::abs(kappa) > degeneracy_eps()) {
      const Vec3 center = normalized(cross(p.vec() - a.vec(), b.vec() - p.vec()));
      const Vec3 tangent = center - p.vec() * dot(center, p.vec());
      const double tn = norm(tangent);
      if (tn > degeneracy_eps()) {
        seg.direction = tangent * (scale * std::abs(kappa) / tn);
      }
    }
    out.push_back(seg);
  }
  return out;
}

}  // namespace geosub
