#pragma once

#include <array>
#include <utility>

#include "geosub/sphere.hpp"

namespace geosub {

/// Per-vertex triangle quantities of a spherical triple (p_prev, p0, p_next).
///
/// Signs: the sphere is oriented by the outward normal. delta is the turn
/// at p0 from the arriving edge direction to the departing one; alpha and
/// beta are the base angles against the chord geodesic, signed the same
/// way, so that the Girard area alpha + beta - delta is positive for a
/// counterclockwise triple (seen from outside).
struct TriangleFrame {
  UnitVector p_prev, p0, p_next;
  double l_prev = 0.0;   // d(p_prev, p0)
  double l_next = 0.0;   // d(p0, p_next)
  double l_chord = 0.0;  // d(p_prev, p_next)
  TangentVector out_dir;  // U: tangent at p0 toward p_next
  TangentVector in_dir;   // V: arriving direction at p0 of the geodesic from p_prev
  double alpha = 0.0;  // base angle at p_prev
  double beta = 0.0;   // base angle at p_next
  double delta = 0.0;  // signed angular defect at p0
  double area = 0.0;   // Girard: alpha + beta - delta
};

TriangleFrame frame_at_vertex(const UnitVector& p_prev, const UnitVector& p0,
                              const UnitVector& p_next);

/// ASA solution of the insertion triangle over a base of length l with base
/// angles alpha (at the first endpoint) and beta (at the second). Returns the
/// two new edge lengths (first-endpoint-to-apex, apex-to-second-endpoint).
std::pair<double, double> asa_new_edges(double l, double alpha, double beta);

/// Isoceles special case: arctan(tan(l/2)/cos(alpha)). Requires |alpha| < pi/2.
double bisector_edge(double l, double alpha);

/// Residual of the spherical Darboux identity
///   cos((alpha-beta)/2)/sin(gamma/2) - sin((l_prev+l_next)/2)/sin(l_chord/2),
/// gamma = pi - delta. Vanishes on every valid frame.
double darboux_residual(const TriangleFrame& frame);

/// Signed area of the isoceles triangle with equal legs e, apex defect delta
/// and base chord: 2*arcsin(sin^2(e/2)*sin(delta)/cos(chord/2)).
double area_from_sides(double e, double delta, double chord);

/// Predicted planar angles (at p_prev, p0, p_next) of the Euclidean triangle
/// with the same side lengths: each spherical angle minus a third of the area.
std::array<double, 3> legendre_flatten(const TriangleFrame& frame);

/// Base angle of the isoceles insertion triangle whose apex defect is
/// delta_new, over a half edge of length half_edge:
///   sin(alpha) = cos((pi - delta_new)/2) / cos(half_edge).
double right_triangle_alpha(double delta_new, double half_edge);

}  // namespace geosub
