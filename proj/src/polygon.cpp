#include "geosub/polygon.hpp"

#include <cmath>

#include "geosub/curvature.hpp"
#include "geosub/triangle.hpp"

namespace geosub {

namespace {
constexpr double kPi = 3.14159265358979323846;

long wrap_index(long i, long n) {
  long r = i % n;
  if (r < 0) r += n;
  return r;
}
}  // namespace

const UnitVector& SpherePolygon::at_wrapped(long i) const {
  return vertices[static_cast<std::size_t>(wrap_index(i, static_cast<long>(vertices.size())))];
}

const Vec2& PlanarPolygon::at_wrapped(long i) const {
  return vertices[static_cast<std::size_t>(wrap_index(i, static_cast<long>(vertices.size())))];
}

void SpherePolygon::validate() const {
  const std::size_t n = vertices.size();
  if (n < 2) throw invalid_input("polygon needs at least two vertices");
  const std::size_t edges = closed ? n : n - 1;
  for (std::size_t i = 0; i < edges; ++i) {
    const double d = geodesic_distance(vertices[i], vertices[(i + 1) % n]);
    if (d < degeneracy_eps()) {
      throw invalid_input("duplicate consecutive vertices at index " + std::to_string(i));
    }
    if (d > kPi - 1e-8) {
      throw invalid_input("antipodal consecutive vertices at index " + std::to_string(i));
    }
  }
}

void PlanarPolygon::validate() const {
  const std::size_t n = vertices.size();
  if (n < 2) throw invalid_input("polygon needs at least two vertices");
  const std::size_t edges = closed ? n : n - 1;
  for (std::size_t i = 0; i < edges; ++i) {
    if (norm(vertices[(i + 1) % n] - vertices[i]) < degeneracy_eps()) {
      throw invalid_input("duplicate consecutive vertices at index " + std::to_string(i));
    }
  }
}

std::vector<double> polygon_defects(const SpherePolygon& P) {
  const long n = static_cast<long>(P.size());
  std::vector<double> d(P.size(), 0.0);
  const long first = P.closed ? 0 : 1;
  const long last = P.closed ? n - 1 : n - 2;
  for (long i = first; i <= last; ++i) {
    d[static_cast<std::size_t>(i)] =
        frame_at_vertex(P.at_wrapped(i - 1), P.at_wrapped(i), P.at_wrapped(i + 1)).delta;
  }
  return d;
}

std::vector<double> polygon_defects(const PlanarPolygon& P) {
  const long n = static_cast<long>(P.size());
  std::vector<double> d(P.size(), 0.0);
  const long first = P.closed ? 0 : 1;
  const long last = P.closed ? n - 1 : n - 2;
  for (long i = first; i <= last; ++i) {
    d[static_cast<std::size_t>(i)] =
        planar_turn_angle(P.at_wrapped(i - 1), P.at_wrapped(i), P.at_wrapped(i + 1));
  }
  return d;
}

std::vector<double> edge_lengths(const SpherePolygon& P) {
  const std::size_t n = P.size();
  const std::size_t edges = P.closed ? n : n - 1;
  std::vector<double> e(edges);
  for (std::size_t i = 0; i < edges; ++i) {
    e[i] = geodesic_distance(P.vertices[i], P.vertices[(i + 1) % n]);
  }
  return e;
}

std::vector<double> edge_lengths(const PlanarPolygon& P) {
  const std::size_t n = P.size();
  const std::size_t edges = P.closed ? n : n - 1;
  std::vector<double> e(edges);
  for (std::size_t i = 0; i < edges; ++i) {
    e[i] = norm(P.vertices[(i + 1) % n] - P.vertices[i]);
  }
  return e;
}

}  // namespace geosub
