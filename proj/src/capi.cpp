#include "geosub/geosub.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "geosub/analysis.hpp"
#include "geosub/io.hpp"
#include "geosub/schemes.hpp"

struct geosub_polygon {
  geosub::AnyPolygon value;
};

struct geosub_run {
  std::vector<geosub::AnyPolygon> polygons;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& message) {
  g_last_error = message;
  return code;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating the library's exception taxonomy into status codes.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const geosub::invalid_input& err) {
    return fail(GEOSUB_ERR_INPUT, err.what());
  } catch (const geosub::domain_error& err) {
    return fail(GEOSUB_ERR_NUMERIC, err.what());
  } catch (const std::exception& err) {
    return fail(GEOSUB_ERR_NUMERIC, err.what());
  }
}

int to_scheme(int scheme, geosub::Scheme& out) {
  switch (scheme) {
    case GEOSUB_SCHEME_ANGLE4: out = geosub::Scheme::SphericalAngle4; return GEOSUB_OK;
    case GEOSUB_SCHEME_CURVATURE6: out = geosub::Scheme::SphericalCurvature6; return GEOSUB_OK;
    case GEOSUB_SCHEME_PLANAR4: out = geosub::Scheme::PlanarAngle4; return GEOSUB_OK;
  }
  return fail(GEOSUB_ERR_INPUT, "unknown scheme id " + std::to_string(scheme));
}

int to_estimator(int estimator, geosub::CurvatureEstimator& out) {
  switch (estimator) {
    case GEOSUB_ESTIMATOR_DEFECT: out = geosub::CurvatureEstimator::Defect; return GEOSUB_OK;
    case GEOSUB_ESTIMATOR_CHORD: out = geosub::CurvatureEstimator::Chord; return GEOSUB_OK;
    case GEOSUB_ESTIMATOR_CIRCUMCIRCLE:
      out = geosub::CurvatureEstimator::Circumcircle;
      return GEOSUB_OK;
  }
  return fail(GEOSUB_ERR_INPUT, "unknown estimator id " + std::to_string(estimator));
}

geosub::SchemeConfig make_config(geosub::Scheme scheme, int iterations, int boundary,
                                 int presmooth, double margin) {
  geosub::SchemeConfig cfg;
  cfg.scheme = scheme;
  cfg.iterations = iterations;
  cfg.boundary = boundary == GEOSUB_BOUNDARY_MIRROR ? geosub::BoundaryRule::MirrorDefects
                                                    : geosub::BoundaryRule::FixedEndpoints;
  cfg.presmooth_iterations = presmooth;
  cfg.solvability_margin = margin;
  return cfg;
}

std::vector<geosub::AnyPolygon> run_subdivision(const geosub::AnyPolygon& poly,
                                                const geosub::SchemeConfig& cfg) {
  std::vector<geosub::AnyPolygon> out;
  if (std::holds_alternative<geosub::SpherePolygon>(poly)) {
    for (auto& P : geosub::subdivide(std::get<geosub::SpherePolygon>(poly), cfg)) {
      out.emplace_back(std::move(P));
    }
  } else {
    for (auto& P : geosub::subdivide(std::get<geosub::PlanarPolygon>(poly), cfg)) {
      out.emplace_back(std::move(P));
    }
  }
  return out;
}

}  // namespace

extern "C" {

const char* geosub_last_error(void) { return g_last_error.c_str(); }

void geosub_string_free(char* s) { std::free(s); }

int geosub_polygon_parse(const char* json_text, geosub_polygon** out) {
  if (!json_text || !out) return fail(GEOSUB_ERR_INPUT, "null argument");
  return guarded([&] {
    *out = new geosub_polygon{geosub::parse_polygon(json_text)};
    return GEOSUB_OK;
  });
}

void geosub_polygon_free(geosub_polygon* p) { delete p; }

int geosub_polygon_is_planar(const geosub_polygon* p, int* out) {
  if (!p || !out) return fail(GEOSUB_ERR_INPUT, "null argument");
  *out = std::holds_alternative<geosub::PlanarPolygon>(p->value) ? 1 : 0;
  return GEOSUB_OK;
}

int geosub_polygon_size(const geosub_polygon* p, int* out) {
  if (!p || !out) return fail(GEOSUB_ERR_INPUT, "null argument");
  *out = static_cast<int>(std::visit([](const auto& poly) { return poly.size(); }, p->value));
  return GEOSUB_OK;
}

int geosub_polygon_to_json(const geosub_polygon* p, char** out) {
  if (!p || !out) return fail(GEOSUB_ERR_INPUT, "null argument");
  return guarded([&] {
    *out = dup_string(geosub::emit_polygon_json(p->value));
    return GEOSUB_OK;
  });
}

int geosub_polygon_to_obj(const geosub_polygon* p, char** out) {
  if (!p || !out) return fail(GEOSUB_ERR_INPUT, "null argument");
  return guarded([&] {
    if (!std::holds_alternative<geosub::SpherePolygon>(p->value)) {
      return fail(GEOSUB_ERR_INPUT, "OBJ export is defined for spherical polygons only");
    }
    *out = dup_string(geosub::emit_polyline3d(std::get<geosub::SpherePolygon>(p->value)));
    return GEOSUB_OK;
  });
}

int geosub_subdivide(const geosub_polygon* p, int scheme, int iterations, int boundary,
                     int presmooth, double margin, geosub_run** out) {
  if (!p || !out) return fail(GEOSUB_ERR_INPUT, "null argument");
  geosub::Scheme s;
  if (int rc = to_scheme(scheme, s); rc != GEOSUB_OK) return rc;
  return guarded([&] {
    auto run = run_subdivision(p->value, make_config(s, iterations, boundary, presmooth, margin));
    *out = new geosub_run{std::move(run)};
    return GEOSUB_OK;
  });
}

int geosub_run_size(const geosub_run* r, int* out) {
  if (!r || !out) return fail(GEOSUB_ERR_INPUT, "null argument");
  *out = static_cast<int>(r->polygons.size());
  return GEOSUB_OK;
}

int geosub_run_polygon(const geosub_run* r, int index, geosub_polygon** out) {
  if (!r || !out) return fail(GEOSUB_ERR_INPUT, "null argument");
  if (index < 0 || index >= static_cast<int>(r->polygons.size())) {
    return fail(GEOSUB_ERR_INPUT, "run index out of range");
  }
  *out = new geosub_polygon{r->polygons[static_cast<std::size_t>(index)]};
  return GEOSUB_OK;
}

void geosub_run_free(geosub_run* r) { delete r; }

int geosub_curvature_csv(const geosub_polygon* p, int estimator, char** out) {
  if (!p || !out) return fail(GEOSUB_ERR_INPUT, "null argument");
  geosub::CurvatureEstimator est;
  if (int rc = to_estimator(estimator, est); rc != GEOSUB_OK) return rc;
  return guarded([&] {
    const geosub::CurvatureSeries series = std::visit(
        [&](const auto& poly) { return geosub::polygon_curvature_series(poly, est); }, p->value);
    *out = dup_string(geosub::emit_csv(series));
    return GEOSUB_OK;
  });
}

int geosub_curvature_svg(const geosub_polygon* p, char** out) {
  if (!p || !out) return fail(GEOSUB_ERR_INPUT, "null argument");
  return guarded([&] {
    std::vector<geosub::PlotSeries> plot;
    auto series = [&](geosub::CurvatureEstimator est) {
      return std::visit(
          [&](const auto& poly) { return geosub::polygon_curvature_series(poly, est); },
          p->value);
    };
    plot.push_back({"geodesic defect", "red",
                    series(geosub::CurvatureEstimator::Defect).samples});
    plot.push_back({"circumscribed circle", "black",
                    series(geosub::CurvatureEstimator::Circumcircle).samples});
    *out = dup_string(geosub::emit_svg_plot(plot));
    return GEOSUB_OK;
  });
}

int geosub_analyze_csv(const geosub_polygon* p, int scheme, int iterations, int boundary,
                       int presmooth, double margin, int* decay_verdict, char** out) {
  if (!p || !out) return fail(GEOSUB_ERR_INPUT, "null argument");
  geosub::Scheme s;
  if (int rc = to_scheme(scheme, s); rc != GEOSUB_OK) return rc;
  return guarded([&] {
    const auto cfg = make_config(s, iterations, boundary, presmooth, margin);
    geosub::AnalysisReport report;
    if (std::holds_alternative<geosub::SpherePolygon>(p->value)) {
      report = geosub::build_report(geosub::subdivide(std::get<geosub::SpherePolygon>(p->value), cfg));
    } else {
      report = geosub::build_report(geosub::subdivide(std::get<geosub::PlanarPolygon>(p->value), cfg));
    }
    if (decay_verdict) {
      std::vector<double> defects;
      for (const auto& m : report.iterations) defects.push_back(m.sup_defect);
      if (defects.size() >= 3) {
        switch (geosub::summability_diagnostic(defects).verdict) {
          case geosub::DecayVerdict::GeometricDecay:
            *decay_verdict = GEOSUB_DECAY_GEOMETRIC;
            break;
          case geosub::DecayVerdict::ExactlyGeodesic:
            *decay_verdict = GEOSUB_DECAY_EXACTLY_GEODESIC;
            break;
          case geosub::DecayVerdict::Inconclusive:
            *decay_verdict = GEOSUB_DECAY_INCONCLUSIVE;
            break;
        }
      } else {
        *decay_verdict = GEOSUB_DECAY_INCONCLUSIVE;
      }
    }
    *out = dup_string(geosub::emit_csv(report));
    return GEOSUB_OK;
  });
}

int geosub_diverge(double delta0, double delta1, double edge, int iterations, int planar,
                   int* verdict, char** csv) {
  return guarded([&] {
    const geosub::DivergenceResult result =
        geosub::divergence_experiment(delta0, delta1, edge, iterations, planar != 0);
    if (verdict) {
      switch (result.verdict) {
        case geosub::DivergenceVerdict::Bounded: *verdict = GEOSUB_VERDICT_BOUNDED; break;
        case geosub::DivergenceVerdict::DivergentPlus:
          *verdict = GEOSUB_VERDICT_DIVERGENT_PLUS;
          break;
        case geosub::DivergenceVerdict::DivergentMinus:
          *verdict = GEOSUB_VERDICT_DIVERGENT_MINUS;
          break;
        case geosub::DivergenceVerdict::Inconclusive:
          *verdict = GEOSUB_VERDICT_INCONCLUSIVE;
          break;
      }
    }
    if (csv) {
      std::string out = "j,center_curvature,closed_form\n";
      for (std::size_t j = 0; j < result.center_curvature.size(); ++j) {
        out += std::to_string(j) + ',' + geosub::format_double(result.center_curvature[j]);
        out += ',';
        if (planar) {
          out += geosub::format_double(geosub::planar_center_curvature_closed_form(
              delta0, delta1, edge, static_cast<int>(j)));
        }
        out += '\n';
      }
      *csv = dup_string(out);
    }
    return GEOSUB_OK;
  });
}

int geosub_write_file(const char* path, const char* data) {
  if (!path || !data) return fail(GEOSUB_ERR_INPUT, "null argument");
  return guarded([&] {
    geosub::atomic_write(path, data);
    return GEOSUB_OK;
  });
}

}  // extern "C"
