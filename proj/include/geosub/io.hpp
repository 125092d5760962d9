#pragma once

#include <string>
#include <variant>
#include <vector>

#include "geosub/analysis.hpp"
#include "geosub/curvature.hpp"
#include "geosub/polygon.hpp"

namespace geosub {

using AnyPolygon = std::variant<SpherePolygon, PlanarPolygon>;

/// Parses a polygon document:
///   {"format": "unit-xyz" | "lon-lat-degrees" | "planar-xy",
///    "closed": bool, "points": [[...], ...], "name": "optional"}
/// Rejects NaN/Inf coordinates, off-sphere points and duplicate consecutive
/// vertices; error messages carry the byte offset or point index.
AnyPolygon parse_polygon(const std::string& text);

std::string emit_polygon_json(const AnyPolygon& poly);

/// CSV with a fixed header, one row per sample, 12 significant digits.
std::string emit_csv(const CurvatureSeries& series);
std::string emit_csv(const AnalysisReport& report);

struct PlotSeries {
  std::string label;
  std::string color;  // SVG color, e.g. "red", "black"
  std::vector<CurvatureSeries::Sample> samples;
};

/// Standalone SVG with axes, one polyline per series and a legend.
std::string emit_svg_plot(const std::vector<PlotSeries>& series);

/// OBJ-style vertex/line records of the unit-sphere polyline.
std::string emit_polyline3d(const SpherePolygon& P);

/// Deterministic 12-significant-digit decimal rendering.
std::string format_double(double v);

/// Write-temp-then-rename.
void atomic_write(const std::string& path, const std::string& data);

}  // namespace geosub
