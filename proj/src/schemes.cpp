#include "geosub/schemes.hpp"

#include <cmath>
#include <string>

#include "geosub/curvature.hpp"

namespace geosub {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Def-3.1 bisector insertion over the edge (p, q). A zero angle degenerates
// to the geodesic midpoint, which is the continuous limit of the formula.
UnitVector bisector_insert(const UnitVector& p, const UnitVector& q, double alpha) {
  if (alpha == 0.0) return geodesic_point(p, q, 0.5);
  const double l = geodesic_distance(p, q);
  const double e = bisector_edge(l, alpha);
  const Vec3 w = rotate_about_axis(direction_towards(p, q).dir, p.vec(), -alpha);
  return exp_map(p, w * e);
}

std::vector<double> fill_open_ends(std::vector<double> d, BoundaryRule boundary) {
  const std::size_t n = d.size();
  if (n < 3) return d;
  switch (boundary) {
    case BoundaryRule::FixedEndpoints:
      d[0] = d[1];
      d[n - 1] = d[n - 2];
      break;
    case BoundaryRule::MirrorDefects:
      d[0] = n >= 4 ? 2.0 * d[1] - d[2] : d[1];
      d[n - 1] = n >= 4 ? 2.0 * d[n - 2] - d[n - 3] : d[n - 2];
      break;
  }
  return d;
}
}  // namespace

void SchemeConfig::validate() const {
  if (iterations < 0) throw invalid_input("iterations must be nonnegative");
  if (presmooth_iterations < 0) throw invalid_input("presmooth iterations must be nonnegative");
  if (!(solvability_margin > 0.0 && solvability_margin < 1.0)) {
    throw invalid_input("solvability margin must lie in (0, 1)");
  }
}

std::vector<double> stencil_defects(const SpherePolygon& P, BoundaryRule boundary) {
  std::vector<double> d = polygon_defects(P);
  return P.closed ? d : fill_open_ends(std::move(d), boundary);
}

std::vector<double> stencil_defects(const PlanarPolygon& P, BoundaryRule boundary) {
  std::vector<double> d = polygon_defects(P);
  return P.closed ? d : fill_open_ends(std::move(d), boundary);
}

UnitVector sbigs_insert(const UnitVector& p_i, const UnitVector& p_ip1,
                        const TangentVector& u_i, double alpha, double beta) {
  if (norm(u_i.base.vec() - p_i.vec()) > 1e-10) {
    throw invalid_input("sbigs_insert: tangent is not based at p_i");
  }
  const TangentVector towards = direction_towards(p_i, p_ip1);
  if (norm(u_i.dir - towards.dir) > 1e-8) {
    throw invalid_input("sbigs_insert: tangent does not point toward p_ip1");
  }
  const double l = geodesic_distance(p_i, p_ip1);
  const auto [e_even, e_odd] = asa_new_edges(l, alpha, beta);
  (void)e_odd;
  const Vec3 w = rotate_about_axis(u_i.dir, p_i.vec(), -alpha);
  return exp_map(p_i, w * e_even);
}

UnitVector sbigs_insert_symmetric(const UnitVector& p_i, const UnitVector& p_ip1,
                                  double alpha, double beta) {
  const double l = geodesic_distance(p_i, p_ip1);
  const auto [e_even, e_odd] = asa_new_edges(l, alpha, beta);
  (void)e_even;
  const Vec3 back = direction_towards(p_ip1, p_i).dir;
  const Vec3 w = rotate_about_axis(back, p_ip1.vec(), beta);
  return exp_map(p_ip1, w * e_odd);
}

double angle4_new_angles(double delta_i, double delta_ip1) {
  return (delta_i + delta_ip1) / 8.0;
}

SpherePolygon angle4_step(const SpherePolygon& P, BoundaryRule boundary) {
  const std::size_t n = P.size();
  if ((P.closed && n < 3) || (!P.closed && n < 4)) {
    throw invalid_input("angle-4pt step needs at least 4 vertices (3 if closed)");
  }
  const std::vector<double> d = stencil_defects(P, boundary);
  SpherePolygon out;
  out.closed = P.closed;
  out.name = P.name;
  const std::size_t edges = P.closed ? n : n - 1;
  out.vertices.reserve(n + edges);
  for (std::size_t i = 0; i < edges; ++i) {
    const UnitVector& a = P.vertices[i];
    const UnitVector& b = P.vertices[(i + 1) % n];
    const double alpha = angle4_new_angles(d[i], d[(i + 1) % n]);
    out.vertices.push_back(a);
    try {
      out.vertices.push_back(bisector_insert(a, b, alpha));
    } catch (const domain_error& err) {
      throw degenerate_configuration("angle-4pt insertion failed at vertex " +
                                     std::to_string(i) + ": " + err.what());
    }
  }
  if (!P.closed) out.vertices.push_back(P.vertices[n - 1]);
  return out;
}

double curvature6_new_kappa(double k_im1, double k_i, double k_ip1, double k_ip2) {
  return (-3.0 * k_im1 + 19.0 * k_i + 19.0 * k_ip1 - 3.0 * k_ip2) / 32.0;
}

SpherePolygon curvature6_step(const SpherePolygon& P, double margin, BoundaryRule boundary) {
  const std::size_t n = P.size();
  if ((P.closed && n < 4) || (!P.closed && n < 4)) {
    throw invalid_input("curvature-6pt step needs at least 4 vertices");
  }
  (void)boundary;  // endpoints are fixed either way; the stencil shrinks below

  // Chord-based discrete geodesic curvature at every vertex where a V-line
  // exists; open-polygon endpoints stay unset.
  const long nl = static_cast<long>(n);
  std::vector<double> kappa(n, 0.0);
  std::vector<bool> has(n, false);
  const long first = P.closed ? 0 : 1;
  const long last = P.closed ? nl - 1 : nl - 2;
  for (long i = first; i <= last; ++i) {
    kappa[static_cast<std::size_t>(i)] =
        chord_curvature(P.at_wrapped(i - 1), P.at_wrapped(i), P.at_wrapped(i + 1));
    has[static_cast<std::size_t>(i)] = true;
  }

  auto stencil_kappa = [&](long i) -> double {
    auto get = [&](long k, bool& ok) {
      const long w = P.closed ? (k % nl + nl) % nl : k;
      if (!P.closed && (w < 0 || w >= nl)) {
        ok = false;
        return 0.0;
      }
      ok = has[static_cast<std::size_t>(w)];
      return ok ? kappa[static_cast<std::size_t>(w)] : 0.0;
    };
    bool ok0, ok1, ok2, ok3;
    const double k0 = get(i - 1, ok0);
    const double k1 = get(i, ok1);
    const double k2 = get(i + 1, ok2);
    const double k3 = get(i + 2, ok3);
    if (ok0 && ok1 && ok2 && ok3) return curvature6_new_kappa(k0, k1, k2, k3);
    // Boundary shrink: fall back to the 2-point average, then to whichever
    // central value exists.
    if (ok1 && ok2) return 0.5 * (k1 + k2);
    if (ok1) return k1;
    if (ok2) return k2;
    return 0.0;
  };

  SpherePolygon out;
  out.closed = P.closed;
  out.name = P.name;
  const std::size_t edges = P.closed ? n : n - 1;
  out.vertices.reserve(n + edges);
  for (std::size_t i = 0; i < edges; ++i) {
    const UnitVector& a = P.vertices[i];
    const UnitVector& b = P.vertices[(i + 1) % n];
    const double e = geodesic_distance(a, b);
    const double k_new = stencil_kappa(static_cast<long>(i));
    const double s = k_new * e / 2.0;
    if (std::abs(s) > 1.0 - margin) {
      throw degenerate_configuration(
          "curvature-6pt insertion unsolvable at edge " + std::to_string(i) +
          " (|sin(defect)| = " + std::to_string(std::abs(s)) +
          "); presmooth the polygon with the angle-4pt scheme first");
    }
    const double delta_new = std::asin(s);
    out.vertices.push_back(a);
    if (std::abs(delta_new) < degeneracy_eps()) {
      out.vertices.push_back(geodesic_point(a, b, 0.5));
    } else {
      const double alpha = right_triangle_alpha(delta_new, e / 2.0);
      out.vertices.push_back(bisector_insert(a, b, alpha));
    }
  }
  if (!P.closed) out.vertices.push_back(P.vertices[n - 1]);
  return out;
}

PlanarPolygon planar_angle4_step(const PlanarPolygon& P, BoundaryRule boundary) {
  const std::size_t n = P.size();
  if ((P.closed && n < 3) || (!P.closed && n < 4)) {
    throw invalid_input("planar angle-4pt step needs at least 4 vertices (3 if closed)");
  }
  const std::vector<double> d = stencil_defects(P, boundary);
  PlanarPolygon out;
  out.closed = P.closed;
  out.name = P.name;
  const std::size_t edges = P.closed ? n : n - 1;
  out.vertices.reserve(n + edges);
  for (std::size_t i = 0; i < edges; ++i) {
    const Vec2& a = P.vertices[i];
    const Vec2& b = P.vertices[(i + 1) % n];
    const double alpha = angle4_new_angles(d[i], d[(i + 1) % n]);
    if (std::abs(alpha) >= kPi / 2.0) {
      throw degenerate_configuration("planar angle-4pt insertion angle >= pi/2 at vertex " +
                                     std::to_string(i));
    }
    out.vertices.push_back(a);
    out.vertices.push_back(a + rotate(b - a, -alpha) * (1.0 / (2.0 * std::cos(alpha))));
  }
  if (!P.closed) out.vertices.push_back(P.vertices[n - 1]);
  return out;
}

std::vector<SpherePolygon> subdivide(const SpherePolygon& P, const SchemeConfig& cfg) {
  cfg.validate();
  P.validate();
  if (cfg.scheme == Scheme::PlanarAngle4) {
    throw invalid_input("planar scheme applied to a spherical polygon");
  }
  std::vector<SpherePolygon> out;
  out.reserve(static_cast<std::size_t>(cfg.iterations) + 1);
  out.push_back(P);
  for (int j = 1; j <= cfg.iterations; ++j) {
    try {
      const SpherePolygon& prev = out.back();
      if (cfg.scheme == Scheme::SphericalCurvature6 && j > cfg.presmooth_iterations) {
        out.push_back(curvature6_step(prev, cfg.solvability_margin, cfg.boundary));
      } else {
        out.push_back(angle4_step(prev, cfg.boundary));
      }
    } catch (const domain_error& err) {
      throw degenerate_configuration("iteration " + std::to_string(j) + ": " + err.what());
    }
  }
  return out;
}

std::vector<PlanarPolygon> subdivide(const PlanarPolygon& P, const SchemeConfig& cfg) {
  cfg.validate();
  P.validate();
  if (cfg.scheme != Scheme::PlanarAngle4) {
    throw invalid_input("spherical scheme applied to a planar polygon");
  }
  std::vector<PlanarPolygon> out;
  out.reserve(static_cast<std::size_t>(cfg.iterations) + 1);
  out.push_back(P);
  for (int j = 1; j <= cfg.iterations; ++j) {
    try {
      out.push_back(planar_angle4_step(out.back(), cfg.boundary));
    } catch (const domain_error& err) {
      throw degenerate_configuration("iteration " + std::to_string(j) + ": " + err.what());
    }
  }
  return out;
}

}  // namespace geosub
