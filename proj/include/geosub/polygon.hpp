#pragma once

#include <string>
#include <vector>

#include "geosub/sphere.hpp"

namespace geosub {

/// Ordered vertices joined by minimal geodesic arcs. For closed polygons the
/// wrap from the last vertex back to the first is implied (first != last).
struct SpherePolygon {
  std::vector<UnitVector> vertices;
  bool closed = false;
  std::string name;

  std::size_t size() const { return vertices.size(); }
  const UnitVector& at_wrapped(long i) const;
  void validate() const;
};

struct PlanarPolygon {
  std::vector<Vec2> vertices;
  bool closed = false;
  std::string name;

  std::size_t size() const { return vertices.size(); }
  const Vec2& at_wrapped(long i) const;
  void validate() const;
};

/// Signed angular defects, one per vertex. Endpoint entries of an open
/// polygon are zero (no defect is defined there).
std::vector<double> polygon_defects(const SpherePolygon& P);
std::vector<double> polygon_defects(const PlanarPolygon& P);

/// Geodesic / Euclidean edge lengths (n-1 entries open, n closed).
std::vector<double> edge_lengths(const SpherePolygon& P);
std::vector<double> edge_lengths(const PlanarPolygon& P);

}  // namespace geosub
