// Command-line front end; talks to the library exclusively through the C API.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "geosub/geosub.h"

namespace {

struct PolygonDeleter {
  void operator()(geosub_polygon* p) const { geosub_polygon_free(p); }
};
struct RunDeleter {
  void operator()(geosub_run* r) const { geosub_run_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { geosub_string_free(s); }
};
using PolygonPtr = std::unique_ptr<geosub_polygon, PolygonDeleter>;
using RunPtr = std::unique_ptr<geosub_run, RunDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int report_error(int rc) {
  std::fprintf(stderr, "error: %s\n", geosub_last_error());
  return rc;
}

int load_polygon(const std::string& path, PolygonPtr& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
    return GEOSUB_ERR_INPUT;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  geosub_polygon* p = nullptr;
  if (int rc = geosub_polygon_parse(buf.str().c_str(), &p); rc != GEOSUB_OK) {
    return report_error(rc);
  }
  out.reset(p);
  return GEOSUB_OK;
}

int write_file(const std::string& path, const char* data) {
  if (int rc = geosub_write_file(path.c_str(), data); rc != GEOSUB_OK) {
    return report_error(rc);
  }
  return GEOSUB_OK;
}

int scheme_id(const std::string& name) {
  if (name == "angle4") return GEOSUB_SCHEME_ANGLE4;
  if (name == "curvature6") return GEOSUB_SCHEME_CURVATURE6;
  if (name == "planar4") return GEOSUB_SCHEME_PLANAR4;
  return -1;
}

int estimator_id(const std::string& name) {
  if (name == "defect") return GEOSUB_ESTIMATOR_DEFECT;
  if (name == "chord") return GEOSUB_ESTIMATOR_CHORD;
  if (name == "circumcircle") return GEOSUB_ESTIMATOR_CIRCUMCIRCLE;
  return -1;
}

const char* verdict_name(int verdict) {
  switch (verdict) {
    case GEOSUB_VERDICT_BOUNDED: return "bounded";
    case GEOSUB_VERDICT_DIVERGENT_PLUS: return "divergent (+inf)";
    case GEOSUB_VERDICT_DIVERGENT_MINUS: return "divergent (-inf)";
    default: return "inconclusive";
  }
}

const char* decay_name(int verdict) {
  switch (verdict) {
    case GEOSUB_DECAY_GEOMETRIC: return "geometric-decay";
    case GEOSUB_DECAY_EXACTLY_GEODESIC: return "exactly-geodesic";
    default: return "inconclusive";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical and planar interpolatory geometric subdivision with "
               "discrete geodesic curvature diagnostics"};
  app.require_subcommand(1);

  std::string in_path, out_dir, csv_path, svg_path, report_path;
  std::string scheme = "angle4", boundary = "fixed-endpoints", estimator = "defect";
  int iterations = 5, presmooth = 2;
  double margin = 1e-3;
  double delta0 = 0.3, delta1 = 0.1, edge = 0.5;
  bool planar_flag = false, spherical_flag = false;

  CLI::App* sub = app.add_subcommand("subdivide", "Refine a polygon and export every iterate");
  sub->add_option("--scheme", scheme, "angle4 | curvature6 | planar4");
  sub->add_option("--iterations", iterations, "number of refinement steps")->required();
  sub->add_option("--boundary", boundary, "fixed-endpoints | mirror-defects");
  sub->add_option("--presmooth", presmooth, "angle4 bootstrap steps (curvature6 only)");
  sub->add_option("--margin", margin, "solvability margin in (0,1)");
  sub->add_option("--in", in_path, "polygon JSON file")->required();
  sub->add_option("--out-dir", out_dir, "output directory")->required();

  CLI::App* cur = app.add_subcommand("curvature", "Curvature series of a polygon");
  cur->add_option("--estimator", estimator, "defect | chord | circumcircle");
  cur->add_option("--in", in_path, "polygon JSON file")->required();
  cur->add_option("--csv", csv_path, "CSV output path");
  cur->add_option("--svg", svg_path, "SVG plot output path");

  CLI::App* ana = app.add_subcommand("analyze", "Convergence report of a subdivision run");
  ana->add_option("--scheme", scheme, "angle4 | curvature6 | planar4");
  ana->add_option("--iterations", iterations, "number of refinement steps")->required();
  ana->add_option("--boundary", boundary, "fixed-endpoints | mirror-defects");
  ana->add_option("--presmooth", presmooth, "angle4 bootstrap steps (curvature6 only)");
  ana->add_option("--margin", margin, "solvability margin in (0,1)");
  ana->add_option("--in", in_path, "polygon JSON file")->required();
  ana->add_option("--report", report_path, "CSV report path")->required();

  CLI::App* div = app.add_subcommand("diverge", "Center-curvature divergence experiment");
  div->add_option("--delta0", delta0, "central defect");
  div->add_option("--delta1", delta1, "outer defect (= mirrored defect)");
  div->add_option("--edge", edge, "initial edge length");
  div->add_option("--iterations", iterations, "number of refinement steps");
  div->add_flag("--planar", planar_flag, "run the planar variant");
  div->add_flag("--spherical", spherical_flag, "run the spherical variant (default)");
  div->add_option("--report", report_path, "CSV report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return GEOSUB_ERR_INPUT;
  }

  const int boundary_id =
      boundary == "mirror-defects" ? GEOSUB_BOUNDARY_MIRROR : GEOSUB_BOUNDARY_FIXED;

  if (sub->parsed()) {
    const int sid = scheme_id(scheme);
    if (sid < 0) {
      std::fprintf(stderr, "error: unknown scheme '%s'\n", scheme.c_str());
      return GEOSUB_ERR_INPUT;
    }
    PolygonPtr poly;
    if (int rc = load_polygon(in_path, poly); rc != GEOSUB_OK) return rc;
    geosub_run* raw = nullptr;
    if (int rc = geosub_subdivide(poly.get(), sid, iterations, boundary_id, presmooth, margin,
                                  &raw);
        rc != GEOSUB_OK) {
      return report_error(rc);
    }
    RunPtr run(raw);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    int count = 0;
    geosub_run_size(run.get(), &count);
    for (int j = 0; j < count; ++j) {
      geosub_polygon* iter_raw = nullptr;
      if (int rc = geosub_run_polygon(run.get(), j, &iter_raw); rc != GEOSUB_OK) {
        return report_error(rc);
      }
      PolygonPtr iter(iter_raw);
      char buf[32];
      std::snprintf(buf, sizeof(buf), "iter_%03d", j);
      char* json = nullptr;
      if (int rc = geosub_polygon_to_json(iter.get(), &json); rc != GEOSUB_OK) {
        return report_error(rc);
      }
      StringPtr json_owner(json);
      if (int rc = write_file(out_dir + "/" + buf + ".json", json); rc != GEOSUB_OK) return rc;
      int planar = 0;
      geosub_polygon_is_planar(iter.get(), &planar);
      if (!planar) {
        char* obj = nullptr;
        if (int rc = geosub_polygon_to_obj(iter.get(), &obj); rc != GEOSUB_OK) {
          return report_error(rc);
        }
        StringPtr obj_owner(obj);
        if (int rc = write_file(out_dir + "/" + buf + ".obj", obj); rc != GEOSUB_OK) return rc;
      }
    }
    std::printf("wrote %d iterates to %s\n", count, out_dir.c_str());
    return 0;
  }

  if (cur->parsed()) {
    const int eid = estimator_id(estimator);
    if (eid < 0) {
      std::fprintf(stderr, "error: unknown estimator '%s'\n", estimator.c_str());
      return GEOSUB_ERR_INPUT;
    }
    PolygonPtr poly;
    if (int rc = load_polygon(in_path, poly); rc != GEOSUB_OK) return rc;
    if (!csv_path.empty()) {
      char* csv = nullptr;
      if (int rc = geosub_curvature_csv(poly.get(), eid, &csv); rc != GEOSUB_OK) {
        return report_error(rc);
      }
      StringPtr owner(csv);
      if (int rc = write_file(csv_path, csv); rc != GEOSUB_OK) return rc;
    }
    if (!svg_path.empty()) {
      char* svg = nullptr;
      if (int rc = geosub_curvature_svg(poly.get(), &svg); rc != GEOSUB_OK) {
        return report_error(rc);
      }
      StringPtr owner(svg);
      if (int rc = write_file(svg_path, svg); rc != GEOSUB_OK) return rc;
    }
    if (csv_path.empty() && svg_path.empty()) {
      std::fprintf(stderr, "error: nothing to do; pass --csv and/or --svg\n");
      return GEOSUB_ERR_INPUT;
    }
    return 0;
  }

  if (ana->parsed()) {
    const int sid = scheme_id(scheme);
    if (sid < 0) {
      std::fprintf(stderr, "error: unknown scheme '%s'\n", scheme.c_str());
      return GEOSUB_ERR_INPUT;
    }
    PolygonPtr poly;
    if (int rc = load_polygon(in_path, poly); rc != GEOSUB_OK) return rc;
    int decay = GEOSUB_DECAY_INCONCLUSIVE;
    char* csv = nullptr;
    if (int rc = geosub_analyze_csv(poly.get(), sid, iterations, boundary_id, presmooth, margin,
                                    &decay, &csv);
        rc != GEOSUB_OK) {
      return report_error(rc);
    }
    StringPtr owner(csv);
    if (int rc = write_file(report_path, csv); rc != GEOSUB_OK) return rc;
    std::printf("decay verdict: %s\n", decay_name(decay));
    return 0;
  }

  if (div->parsed()) {
    if (planar_flag && spherical_flag) {
      std::fprintf(stderr, "error: pass at most one of --planar/--spherical\n");
      return GEOSUB_ERR_INPUT;
    }
    int verdict = GEOSUB_VERDICT_INCONCLUSIVE;
    char* csv = nullptr;
    if (int rc = geosub_diverge(delta0, delta1, edge, iterations, planar_flag ? 1 : 0, &verdict,
                                &csv);
        rc != GEOSUB_OK) {
      return report_error(rc);
    }
    StringPtr owner(csv);
    if (!report_path.empty()) {
      if (int rc = write_file(report_path, csv); rc != GEOSUB_OK) return rc;
    }
    std::printf("verdict: %s\n", verdict_name(verdict));
    return 0;
  }

  return GEOSUB_ERR_INPUT;
}
