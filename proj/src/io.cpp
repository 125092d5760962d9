#include "geosub/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace geosub {

namespace {
constexpr double kPi = 3.14159265358979323846;

double checked_number(const nlohmann::json& j, std::size_t point_index) {
  if (!j.is_number()) {
    throw invalid_input("point " + std::to_string(point_index) + ": coordinate is not a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw invalid_input("point " + std::to_string(point_index) + ": non-finite coordinate");
  }
  return v;
}
}  // namespace

AnyPolygon parse_polygon(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw invalid_input(std::string("malformed polygon document: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("format") || !doc.contains("closed") ||
      !doc.contains("points")) {
    throw invalid_input("polygon document needs format, closed and points fields");
  }
  const std::string format = doc["format"].get<std::string>();
  const bool closed = doc["closed"].get<bool>();
  const std::string name = doc.value("name", std::string{});
  const nlohmann::json& pts = doc["points"];
  if (!pts.is_array() || pts.size() < 2) {
    throw invalid_input("points must be an array of at least two points");
  }

  if (format == "planar-xy") {
    PlanarPolygon P;
    P.closed = closed;
    P.name = name;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!pts[i].is_array() || pts[i].size() != 2) {
        throw invalid_input("point " + std::to_string(i) + ": expected [x, y]");
      }
      P.vertices.push_back({checked_number(pts[i][0], i), checked_number(pts[i][1], i)});
    }
    P.validate();
    return P;
  }

  SpherePolygon P;
  P.closed = closed;
  P.name = name;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (format == "unit-xyz") {
      if (!pts[i].is_array() || pts[i].size() != 3) {
        throw invalid_input("point " + std::to_string(i) + ": expected [x, y, z]");
      }
      try {
        P.vertices.emplace_back(checked_number(pts[i][0], i), checked_number(pts[i][1], i),
                                checked_number(pts[i][2], i));
      } catch (const invalid_input& err) {
        throw invalid_input("point " + std::to_string(i) + ": " + err.what());
      }
    } else if (format == "lon-lat-degrees") {
      if (!pts[i].is_array() || pts[i].size() != 2) {
        throw invalid_input("point " + std::to_string(i) + ": expected [lon, lat]");
      }
      const double lon = checked_number(pts[i][0], i);
      const double lat = checked_number(pts[i][1], i);
      if (lon < -180.0 || lon > 180.0 || lat < -90.0 || lat > 90.0) {
        throw invalid_input("point " + std::to_string(i) + ": lon/lat out of range");
      }
      const double lo = lon * kPi / 180.0, la = lat * kPi / 180.0;
      P.vertices.push_back(UnitVector::unchecked(
          {std::cos(la) * std::cos(lo), std::cos(la) * std::sin(lo), std::sin(la)}));
    } else {
      throw invalid_input("unknown polygon format: " + format);
    }
  }
  P.validate();
  return P;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string emit_polygon_json(const AnyPolygon& poly) {
  std::ostringstream out;
  const bool planar = std::holds_alternative<PlanarPolygon>(poly);
  const std::string& name =
      planar ? std::get<PlanarPolygon>(poly).name : std::get<SpherePolygon>(poly).name;
  const bool closed =
      planar ? std::get<PlanarPolygon>(poly).closed : std::get<SpherePolygon>(poly).closed;
  out << "{\"format\":\"" << (planar ? "planar-xy" : "unit-xyz") << "\",";
  if (!name.empty()) out << "\"name\":" << nlohmann::json(name).dump() << ",";
  out << "\"closed\":" << (closed ? "true" : "false") << ",\"points\":[";
  if (planar) {
    const auto& v = std::get<PlanarPolygon>(poly).vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out << (i ? "," : "") << "[" << format_double(v[i].x) << "," << format_double(v[i].y)
          << "]";
    }
  } else {
    const auto& v = std::get<SpherePolygon>(poly).vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out << (i ? "," : "") << "[" << format_double(v[i].x()) << "," << format_double(v[i].y())
          << "," << format_double(v[i].z()) << "]";
    }
  }
  out << "]}\n";
  return out.str();
}

std::string emit_csv(const CurvatureSeries& series) {
  std::string out = "s,kappa\n";
  for (const auto& sample : series.samples) {
    out += format_double(sample.s);
    out += ',';
    out += format_double(sample.kappa);
    out += '\n';
  }
  return out;
}

std::string emit_csv(const AnalysisReport& report) {
  std::string out =
      "j,sup_defect,sup_edge,sup_area,max_curv_diff,defect_ratio,two_step_ratio,"
      "curv_diff_ratio,center_curvature\n";
  auto cell = [](const std::vector<double>& v, std::size_t j) {
    return j < v.size() ? format_double(v[j]) : std::string{};
  };
  for (std::size_t j = 0; j < report.iterations.size(); ++j) {
    const IterationMetrics& m = report.iterations[j];
    out += std::to_string(j);
    out += ',' + format_double(m.sup_defect);
    out += ',' + format_double(m.sup_edge);
    out += ',' + format_double(m.sup_area);
    out += ',' + format_double(m.max_curv_diff);
    out += ',' + cell(report.defect_ratios, j);
    out += ',' + cell(report.two_step_ratios, j);
    out += ',' + cell(report.curv_diff_ratios, j);
    out += ',' + cell(report.center_curvature, j);
    out += '\n';
  }
  return out;
}

std::string emit_svg_plot(const std::vector<PlotSeries>& series) {
  if (series.empty()) throw invalid_input("plot needs at least one series");
  double smin = 0.0, smax = 1.0, kmin = 0.0, kmax = 1.0;
  bool any = false;
  for (const PlotSeries& ser : series) {
    for (const auto& sample : ser.samples) {
      if (!any) {
        smin = smax = sample.s;
        kmin = kmax = sample.kappa;
        any = true;
      }
      smin = std::min(smin, sample.s);
      smax = std::max(smax, sample.s);
      kmin = std::min(kmin, sample.kappa);
      kmax = std::max(kmax, sample.kappa);
    }
  }
  if (!any) throw invalid_input("plot needs at least one sample");
  if (smax == smin) smax = smin + 1.0;
  if (kmax == kmin) {
    kmax += 0.5;
    kmin -= 0.5;
  }

  const double width = 800.0, height = 500.0, margin = 60.0;
  auto sx = [&](double s) { return margin + (s - smin) / (smax - smin) * (width - 2 * margin); };
  auto sy = [&](double k) {
    return height - margin - (k - kmin) / (kmax - kmin) * (height - 2 * margin);
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
      << "\" y2=\"" << height - margin << "\" stroke=\"gray\"/>\n"
      << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
      << height - margin << "\" stroke=\"gray\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - margin / 4
      << "\" font-size=\"14\" text-anchor=\"middle\">arc length</text>\n";
  out << "<text x=\"" << margin / 4 << "\" y=\"" << height / 2 << "\" font-size=\"14\" "
      << "text-anchor=\"middle\" transform=\"rotate(-90 " << margin / 4 << " " << height / 2
      << ")\">curvature</text>\n";
  // axis extremes
  out << "<text x=\"" << margin << "\" y=\"" << height - margin + 18
      << "\" font-size=\"12\">" << format_double(smin) << "</text>\n"
      << "<text x=\"" << width - margin << "\" y=\"" << height - margin + 18
      << "\" font-size=\"12\" text-anchor=\"end\">" << format_double(smax) << "</text>\n"
      << "<text x=\"" << margin - 6 << "\" y=\"" << height - margin
      << "\" font-size=\"12\" text-anchor=\"end\">" << format_double(kmin) << "</text>\n"
      << "<text x=\"" << margin - 6 << "\" y=\"" << margin + 4
      << "\" font-size=\"12\" text-anchor=\"end\">" << format_double(kmax) << "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const PlotSeries& ser = series[k];
    out << "<polyline fill=\"none\" stroke=\"" << ser.color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < ser.samples.size(); ++i) {
      out << (i ? " " : "") << sx(ser.samples[i].s) << "," << sy(ser.samples[i].kappa);
    }
    out << "\"/>\n";
    // legend entry
    const double ly = margin + 18.0 * static_cast<double>(k);
    out << "<line x1=\"" << width - margin - 120 << "\" y1=\"" << ly << "\" x2=\""
        << width - margin - 90 << "\" y2=\"" << ly << "\" stroke=\"" << ser.color
        << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << width - margin - 84 << "\" y=\"" << ly + 4
        << "\" font-size=\"12\">" << ser.label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string emit_polyline3d(const SpherePolygon& P) {
  std::string out;
  const std::size_t n = P.size();
  for (const UnitVector& v : P.vertices) {
    out += "v " + format_double(v.x()) + " " + format_double(v.y()) + " " +
           format_double(v.z()) + "\n";
  }
  const std::size_t segments = P.closed ? n : n - 1;
  for (std::size_t i = 0; i < segments; ++i) {
    out += "l " + std::to_string(i + 1) + " " + std::to_string((i + 1) % n + 1) + "\n";
  }
  return out;
}

void atomic_write(const std::string& path, const std::string& data) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw invalid_input("cannot open " + tmp.string() + " for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw invalid_input("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace geosub
