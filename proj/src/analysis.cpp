#include "geosub/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "geosub/curvature.hpp"
#include "geosub/schemes.hpp"
#include "geosub/triangle.hpp"

namespace geosub {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<double> ratio_series(const std::vector<double>& v, int step) {
  std::vector<double> r;
  for (std::size_t j = 0; j + static_cast<std::size_t>(step) < v.size(); ++j) {
    if (v[j] > 0.0) r.push_back(v[j + static_cast<std::size_t>(step)] / v[j]);
  }
  return r;
}

template <typename Poly>
AnalysisReport build_report_impl(const std::vector<Poly>& run) {
  AnalysisReport rep;
  rep.iterations.reserve(run.size());
  for (const Poly& P : run) rep.iterations.push_back(iteration_metrics(P));
  std::vector<double> defects, diffs;
  for (const IterationMetrics& m : rep.iterations) {
    defects.push_back(m.sup_defect);
    diffs.push_back(m.max_curv_diff);
  }
  rep.defect_ratios = ratio_series(defects, 1);
  rep.two_step_ratios = ratio_series(defects, 2);
  rep.curv_diff_ratios = ratio_series(diffs, 1);
  return rep;
}
}  // namespace

IterationMetrics iteration_metrics(const SpherePolygon& P) {
  IterationMetrics m;
  for (double e : edge_lengths(P)) m.sup_edge = std::max(m.sup_edge, e);
  const long n = static_cast<long>(P.size());
  const long first = P.closed ? 0 : 1;
  const long last = P.closed ? n - 1 : n - 2;
  double prev_kappa = 0.0;
  bool have_prev = false;
  for (long i = first; i <= last; ++i) {
    const TriangleFrame f =
        frame_at_vertex(P.at_wrapped(i - 1), P.at_wrapped(i), P.at_wrapped(i + 1));
    m.sup_defect = std::max(m.sup_defect, std::abs(f.delta));
    m.sup_area = std::max(m.sup_area, std::abs(f.area));
    const double kappa = 2.0 * f.delta / (f.l_prev + f.l_next);
    if (have_prev) m.max_curv_diff = std::max(m.max_curv_diff, std::abs(kappa - prev_kappa));
    prev_kappa = kappa;
    have_prev = true;
  }
  // Closed polygons also jump across the wrap between the last and first vertex.
  if (P.closed && n >= 3) {
    const TriangleFrame f0 = frame_at_vertex(P.at_wrapped(-1), P.at_wrapped(0), P.at_wrapped(1));
    const double kappa0 = 2.0 * f0.delta / (f0.l_prev + f0.l_next);
    m.max_curv_diff = std::max(m.max_curv_diff, std::abs(kappa0 - prev_kappa));
  }
  return m;
}

IterationMetrics iteration_metrics(const PlanarPolygon& P) {
  IterationMetrics m;
  for (double e : edge_lengths(P)) m.sup_edge = std::max(m.sup_edge, e);
  const long n = static_cast<long>(P.size());
  const long first = P.closed ? 0 : 1;
  const long last = P.closed ? n - 1 : n - 2;
  double prev_kappa = 0.0;
  bool have_prev = false;
  for (long i = first; i <= last; ++i) {
    const Vec2& a = P.at_wrapped(i - 1);
    const Vec2& p = P.at_wrapped(i);
    const Vec2& b = P.at_wrapped(i + 1);
    m.sup_defect = std::max(m.sup_defect, std::abs(planar_turn_angle(a, p, b)));
    const double kappa = planar_vline_curvature(a, p, b);
    if (have_prev) m.max_curv_diff = std::max(m.max_curv_diff, std::abs(kappa - prev_kappa));
    prev_kappa = kappa;
    have_prev = true;
  }
  if (P.closed && n >= 3) {
    const double kappa0 =
        planar_vline_curvature(P.at_wrapped(-1), P.at_wrapped(0), P.at_wrapped(1));
    m.max_curv_diff = std::max(m.max_curv_diff, std::abs(kappa0 - prev_kappa));
  }
  return m;
}

AnalysisReport build_report(const std::vector<SpherePolygon>& run) {
  return build_report_impl(run);
}

AnalysisReport build_report(const std::vector<PlanarPolygon>& run) {
  return build_report_impl(run);
}

SummabilityDiagnostic summability_diagnostic(const std::vector<double>& sup_defects,
                                             double epsilon) {
  if (sup_defects.size() < 3) throw invalid_input("need at least three iterations");
  SummabilityDiagnostic diag;
  bool all_zero = true;
  for (double d : sup_defects) all_zero = all_zero && d == 0.0;
  if (all_zero) {
    diag.verdict = DecayVerdict::ExactlyGeodesic;
    return diag;
  }
  diag.ratios = ratio_series(sup_defects, 1);
  // Judge the tail (second half) so start-up transients do not dominate.
  const std::size_t tail_start = diag.ratios.size() / 2;
  bool decaying = !diag.ratios.empty();
  for (std::size_t j = tail_start; j < diag.ratios.size(); ++j) {
    decaying = decaying && diag.ratios[j] < 1.0 - epsilon;
  }
  diag.verdict = decaying ? DecayVerdict::GeometricDecay : DecayVerdict::Inconclusive;
  return diag;
}

std::array<double, 3> closed_form_defects(double dm1, double d0, double d1, int j) {
  if (j < 0) throw invalid_input("closed form needs j >= 0");
  // Jordan solution of the (1/8)*[[2,2,0],[-1,6,-1],[0,2,2]] recursion:
  // eigenvalue 1/4 carries the antisymmetric part, a 1/2 Jordan block the rest.
  const double p2 = std::ldexp(1.0, -(j + 2));       // 2^-(j+2)
  const double q2 = std::ldexp(1.0, -(2 * j + 1));   // 2^-(2j+1)
  const double shared = (j * (2.0 * d0 - d1 - dm1) + 2.0 * (d1 + dm1)) * p2;
  return {
      (dm1 - d1) * q2 + shared,
      ((2.0 * j + 4.0) * d0 - j * (d1 + dm1)) * p2,
      (d1 - dm1) * q2 + shared,
  };
}

double closed_form_alpha(double d0, double d1, int j) {
  if (j < 0) throw invalid_input("closed form needs j >= 0");
  return (j * (d0 - d1) + 2.0 * d1) * std::ldexp(1.0, -(j + 2));
}

double planar_center_curvature_closed_form(double d0, double d1, double edge, int j) {
  if (edge <= 0.0) throw invalid_input("edge length must be positive");
  double inv_cos_product = 1.0;
  for (int k = 1; k <= j; ++k) {
    inv_cos_product /= std::cos(closed_form_alpha(d0, d1, k));
  }
  return (j * (d0 - d1) + 2.0 * d0) / (2.0 * edge * inv_cos_product);
}

namespace {

SpherePolygon build_symmetric_sphere_polygon(const std::array<double, 3>& defects,
                                             double edge) {
  // Walk from a pole-adjacent start: place each vertex with exp_map and turn
  // the heading by the prescribed defect, so the hypotheses hold exactly.
  SpherePolygon P;
  P.closed = false;
  UnitVector point(0.0, 0.0, 1.0);
  Vec3 heading{1.0, 0.0, 0.0};
  P.vertices.push_back(point);
  for (int k = 0; k < 4; ++k) {
    const UnitVector next = exp_map(point, heading * edge);
    const Vec3 arrival = normalized(-log_map(next, point));
    P.vertices.push_back(next);
    if (k < 3) {
      heading = rotate_about_axis(arrival, next.vec(), defects[static_cast<std::size_t>(k)]);
    }
    point = next;
  }
  return P;
}

PlanarPolygon build_symmetric_planar_polygon(const std::array<double, 3>& defects,
                                             double edge) {
  PlanarPolygon P;
  P.closed = false;
  Vec2 point{0.0, 0.0};
  Vec2 heading{1.0, 0.0};
  P.vertices.push_back(point);
  for (int k = 0; k < 4; ++k) {
    point = point + heading * edge;
    P.vertices.push_back(point);
    if (k < 3) heading = rotate(heading, defects[static_cast<std::size_t>(k)]);
  }
  return P;
}

// Intrinsic (edge lengths + defects) view of an open polygon under the
// angle-4pt scheme. Once edges shrink below ~1e-6 the extrinsic positions lose
// the turn angles to cancellation, while the intrinsic update stays exact:
// both half-edges equal the bisector edge and the inserted defect follows from
// the Napier analogy tan(delta/2) = tan(alpha) * cos(half_edge).
struct IntrinsicOpen {
  std::vector<double> edge;    // size n-1
  std::vector<double> defect;  // size n; endpoint entries per boundary rule
};

IntrinsicOpen measure_intrinsic(const SpherePolygon& P, BoundaryRule boundary) {
  IntrinsicOpen I;
  I.edge = edge_lengths(P);
  I.defect = stencil_defects(P, boundary);
  return I;
}

IntrinsicOpen measure_intrinsic(const PlanarPolygon& P, BoundaryRule boundary) {
  IntrinsicOpen I;
  I.edge = edge_lengths(P);
  I.defect = stencil_defects(P, boundary);
  return I;
}

IntrinsicOpen intrinsic_planar4_step(const IntrinsicOpen& I, BoundaryRule boundary) {
  const std::size_t n = I.defect.size();
  std::vector<double> d = I.defect;
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
  IntrinsicOpen out;
  out.edge.resize(2 * (n - 1));
  out.defect.assign(2 * n - 1, 0.0);
  std::vector<double> alpha(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    alpha[i] = angle4_new_angles(d[i], d[i + 1]);
    const double h = I.edge[i] / (2.0 * std::cos(alpha[i]));
    out.edge[2 * i] = h;
    out.edge[2 * i + 1] = h;
    out.defect[2 * i + 1] = 2.0 * alpha[i];
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out.defect[2 * i] = I.defect[i] - alpha[i - 1] - alpha[i];
  }
  return out;
}

IntrinsicOpen intrinsic_angle4_step(const IntrinsicOpen& I, BoundaryRule boundary) {
  const std::size_t n = I.defect.size();
  std::vector<double> d = I.defect;
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
  IntrinsicOpen out;
  out.edge.resize(2 * (n - 1));
  out.defect.assign(2 * n - 1, 0.0);
  std::vector<double> alpha(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    alpha[i] = angle4_new_angles(d[i], d[i + 1]);
    const double h = bisector_edge(I.edge[i], alpha[i]);
    out.edge[2 * i] = h;
    out.edge[2 * i + 1] = h;
    out.defect[2 * i + 1] = 2.0 * std::atan(std::tan(alpha[i]) * std::cos(h));
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out.defect[2 * i] = I.defect[i] - alpha[i - 1] - alpha[i];
  }
  return out;
}

DivergenceVerdict classify_divergence(const std::vector<double>& kappa, double d0, double d1) {
  if (d0 == d1) return DivergenceVerdict::Bounded;
  if (kappa.size() < 7) return DivergenceVerdict::Inconclusive;
  // Finite-iteration proxy for the +-infinity claim: five consecutive
  // increases of |kappa| at the tail and a 10x escape over the start value.
  bool increasing = true;
  for (std::size_t j = kappa.size() - 5; j < kappa.size(); ++j) {
    increasing = increasing && std::abs(kappa[j]) > std::abs(kappa[j - 1]);
  }
  const bool escaped = std::abs(kappa.back()) > 10.0 * std::abs(kappa.front());
  if (!(increasing && escaped)) return DivergenceVerdict::Inconclusive;
  return kappa.back() > 0.0 ? DivergenceVerdict::DivergentPlus
                            : DivergenceVerdict::DivergentMinus;
}

}  // namespace

DivergenceResult divergence_experiment(double d0, double d1, double edge, int iterations,
                                       bool planar) {
  if (iterations < 0) throw invalid_input("iterations must be nonnegative");
  if (std::abs(d0) >= kPi || std::abs(d1) >= kPi) {
    throw invalid_input("divergence experiment needs defects in (-pi, pi)");
  }
  if (edge <= 0.0 || (!planar && edge >= kPi / 2.0)) {
    throw invalid_input("divergence experiment edge length out of range");
  }
  const std::array<double, 3> defects{d1, d0, d1};  // delta_-1^0 = delta_1^0

  SchemeConfig cfg;
  cfg.scheme = planar ? Scheme::PlanarAngle4 : Scheme::SphericalAngle4;
  cfg.iterations = iterations;
  cfg.boundary = BoundaryRule::FixedEndpoints;

  // The 4-point stencil only pulls values from two index positions away, so
  // boundary (or trim) effects creep towards the middle by two indices per
  // step while the center index doubles. Keeping a window of half-width
  // 2*(remaining steps) + 8 around the center therefore reproduces the center
  // vertex and its neighbours exactly at every iteration, at O(iterations^2)
  // total cost instead of an exponentially growing polygon.
  const auto window = [&](long center, long size, int j) {
    const long needed = 2L * (iterations - j) + 8;
    const long lo = std::max(0L, center - needed);
    const long hi = std::min(size - 1, center + needed);
    return std::pair<long, long>{lo, hi};
  };

  DivergenceResult result;
  if (planar) {
    // Angles are scale invariant, so recentering on the middle vertex and
    // doubling the coordinates each step keeps neighbour differences at full
    // precision no matter how small the true edges get.
    PlanarPolygon P = build_symmetric_planar_polygon(defects, edge);
    long center = 2;
    double scale = 1.0;
    int j = 0;
    bool intrinsic_phase = false;
    IntrinsicOpen I;
    for (;; ++j) {
      if (!intrinsic_phase) {
        result.center_curvature.push_back(
            planar_vline_curvature(P.at_wrapped(center - 1), P.at_wrapped(center),
                                   P.at_wrapped(center + 1)) *
            scale);
      } else {
        const std::size_t c = static_cast<std::size_t>(center);
        result.center_curvature.push_back(2.0 * I.defect[c] / (I.edge[c - 1] + I.edge[c]) *
                                          scale);
      }
      if (j == iterations) break;
      if (!intrinsic_phase) {
        const auto [lo, hi] = window(center, static_cast<long>(P.size()), j);
        P.vertices.assign(P.vertices.begin() + lo, P.vertices.begin() + hi + 1);
        center -= lo;
        // Once the turn angles near eps of the rescaled O(1) coordinates,
        // continue on intrinsic quantities where they stay fully resolved.
        if (std::abs(planar_turn_angle(P.at_wrapped(center - 1), P.at_wrapped(center),
                                       P.at_wrapped(center + 1))) < 1e-9) {
          I = measure_intrinsic(P, cfg.boundary);
          intrinsic_phase = true;
        } else {
          const Vec2 origin = P.vertices[static_cast<std::size_t>(center)];
          for (Vec2& v : P.vertices) v = (v - origin) * 2.0;
          scale *= 2.0;
          center *= 2;
          P = planar_angle4_step(P, cfg.boundary);
          continue;
        }
      } else {
        const auto [lo, hi] = window(center, static_cast<long>(I.defect.size()), j);
        I.defect.assign(I.defect.begin() + lo, I.defect.begin() + hi + 1);
        I.edge.assign(I.edge.begin() + lo, I.edge.begin() + hi);
        center -= lo;
      }
      center *= 2;
      I = intrinsic_planar4_step(I, cfg.boundary);
    }
  } else {
    SpherePolygon P = build_symmetric_sphere_polygon(defects, edge);
    long center = 2;
    int j = 0;
    bool intrinsic_phase = false;
    IntrinsicOpen I;
    for (;; ++j) {
      if (!intrinsic_phase) {
        result.center_curvature.push_back(geodesic_vline_curvature(
            P.at_wrapped(center - 1), P.at_wrapped(center), P.at_wrapped(center + 1)));
      } else {
        const std::size_t c = static_cast<std::size_t>(center);
        result.center_curvature.push_back(2.0 * I.defect[c] / (I.edge[c - 1] + I.edge[c]));
      }
      if (j == iterations) break;
      if (!intrinsic_phase) {
        const auto [lo, hi] = window(center, static_cast<long>(P.size()), j);
        P.vertices.assign(P.vertices.begin() + lo, P.vertices.begin() + hi + 1);
        center -= lo;
        if (geodesic_distance(P.vertices[static_cast<std::size_t>(center)],
                              P.at_wrapped(center + 1)) < 1e-6) {
          I = measure_intrinsic(P, cfg.boundary);
          intrinsic_phase = true;
        } else {
          center *= 2;
          P = angle4_step(P, cfg.boundary);
          continue;
        }
      } else {
        const auto [lo, hi] = window(center, static_cast<long>(I.defect.size()), j);
        I.defect.assign(I.defect.begin() + lo, I.defect.begin() + hi + 1);
        I.edge.assign(I.edge.begin() + lo, I.edge.begin() + hi);
        center -= lo;
      }
      center *= 2;
      I = intrinsic_angle4_step(I, cfg.boundary);
    }
  }
  result.verdict = classify_divergence(result.center_curvature, d0, d1);
  return result;
}

double legendre_transfer_check(const SpherePolygon& P) {
  const long n = static_cast<long>(P.size());
  const long first = P.closed ? 0 : 1;
  const long last = P.closed ? n - 1 : n - 2;
  double worst = 0.0;
  for (long i = first; i <= last; ++i) {
    const TriangleFrame f =
        frame_at_vertex(P.at_wrapped(i - 1), P.at_wrapped(i), P.at_wrapped(i + 1));
    // Planar defect of the Euclidean triangle with the same side lengths.
    const double cos_gamma = (f.l_prev * f.l_prev + f.l_next * f.l_next -
                              f.l_chord * f.l_chord) /
                             (2.0 * f.l_prev * f.l_next);
    const double gamma_flat = std::acos(std::clamp(cos_gamma, -1.0, 1.0));
    const double flat_defect = (f.delta >= 0.0 ? 1.0 : -1.0) * (kPi - gamma_flat);
    worst = std::max(worst, std::abs(flat_defect - (f.delta + f.area / 3.0)));
  }
  return worst;
}

}  // namespace geosub
