#include "geosub/triangle.hpp"

#include <cmath>

namespace geosub {

namespace {
constexpr double kPi = 3.14159265358979323846;

double clamp_unit(double v) {
  if (v > 1.0) return 1.0;
  if (v < -1.0) return -1.0;
  return v;
}
}  // namespace

TriangleFrame frame_at_vertex(const UnitVector& p_prev, const UnitVector& p0,
                              const UnitVector& p_next) {
  TriangleFrame f;
  f.p_prev = p_prev;
  f.p0 = p0;
  f.p_next = p_next;
  f.l_prev = geodesic_distance(p_prev, p0);
  f.l_next = geodesic_distance(p0, p_next);
  f.l_chord = geodesic_distance(p_prev, p_next);

  const double eps = degeneracy_eps();
  if (f.l_prev < eps || f.l_next < eps || f.l_chord < eps) {
    throw degenerate_configuration("triangle frame of (near-)coincident points");
  }

  f.out_dir = direction_towards(p0, p_next);
  // Arriving direction of the geodesic p_prev -> p0.
  f.in_dir = TangentVector{p0, -direction_towards(p0, p_prev).dir};
  f.delta = signed_angle(f.in_dir, f.out_dir);

  // Base angle at p_prev: from the edge direction (toward p0) to the chord
  // direction (toward p_next).
  f.alpha = signed_angle(direction_towards(p_prev, p0), direction_towards(p_prev, p_next));

  // Base angle at p_next: from the chord arrival to the edge arrival.
  const TangentVector chord_arr{p_next, -direction_towards(p_next, p_prev).dir};
  const TangentVector edge_arr{p_next, -direction_towards(p_next, p0).dir};
  f.beta = signed_angle(chord_arr, edge_arr);

  f.area = f.alpha + f.beta - f.delta;
  return f;
}

std::pair<double, double> asa_new_edges(double l, double alpha, double beta) {
  if (alpha == 0.0 || beta == 0.0) {
    throw degenerate_configuration("ASA formulas require nonzero base angles");
  }
  if (std::abs(alpha) + std::abs(beta) >= kPi || l <= 0.0 || l >= kPi) {
    throw domain_error("ASA configuration out of range");
  }
  // Mirror through the chord great circle: edge lengths are invariant.
  if (alpha + beta < 0.0 || (alpha + beta == 0.0 && alpha < 0.0)) {
    alpha = -alpha;
    beta = -beta;
  }
  const double ch = 1.0 / std::tan(l / 2.0);  // cot(l/2)
  const double th = std::tan(l / 2.0);
  const double den_even = ch * std::sin(alpha + beta) + th * std::sin(alpha - beta);
  const double den_odd = ch * std::sin(alpha + beta) + th * std::sin(beta - alpha);
  const double num_even = 2.0 * std::sin(beta);
  const double num_odd = 2.0 * std::sin(alpha);
  if (std::hypot(num_even, den_even) < degeneracy_eps() ||
      std::hypot(num_odd, den_odd) < degeneracy_eps()) {
    throw degenerate_configuration("ASA formulas degenerate (vanishing denominator)");
  }
  // Two-argument arctangent keeps obtuse configurations in (0, pi).
  double e_even = std::atan2(num_even, den_even);
  double e_odd = std::atan2(num_odd, den_odd);
  if (e_even <= 0.0) e_even += kPi;
  if (e_odd <= 0.0) e_odd += kPi;
  return {e_even, e_odd};
}

double bisector_edge(double l, double alpha) {
  if (std::abs(alpha) >= kPi / 2.0) {
    throw domain_error("bisector formula requires |alpha| < pi/2");
  }
  if (l <= 0.0 || l >= kPi) {
    throw domain_error("bisector formula requires l in (0, pi)");
  }
  return std::atan(std::tan(l / 2.0) / std::cos(alpha));
}

double darboux_residual(const TriangleFrame& f) {
  const double gamma = kPi - f.delta;
  return std::cos((f.alpha - f.beta) / 2.0) / std::sin(gamma / 2.0) -
         std::sin((f.l_prev + f.l_next) / 2.0) / std::sin(f.l_chord / 2.0);
}

double area_from_sides(double e, double delta, double chord) {
  if (chord >= kPi - 1e-12) {
    throw domain_error("area_from_sides undefined for an antipodal chord");
  }
  const double half = std::sin(e / 2.0);
  const double arg = half * half * std::sin(delta) / std::cos(chord / 2.0);
  if (std::abs(arg) > 1.0 + 1e-12) {
    throw domain_error("area_from_sides: inconsistent side data");
  }
  return 2.0 * std::asin(clamp_unit(arg));
}

std::array<double, 3> legendre_flatten(const TriangleFrame& f) {
  const double third = f.area / 3.0;
  const double gamma = kPi - f.delta;  // interior angle at p0
  return {f.alpha - third, gamma - third, f.beta - third};
}

double right_triangle_alpha(double delta_new, double half_edge) {
  if (half_edge <= 0.0 || half_edge >= kPi / 2.0) {
    throw domain_error("right_triangle_alpha requires half_edge in (0, pi/2)");
  }
  // cos((pi - delta)/2) = sin(delta/2)
  const double arg = std::sin(delta_new / 2.0) / std::cos(half_edge);
  if (std::abs(arg) > 1.0) {
    throw degenerate_configuration("prescribed defect too large for this edge");
  }
  return std::asin(arg);
}

}  // namespace geosub
