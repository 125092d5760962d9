#pragma once

#include <array>
#include <vector>

#include "geosub/polygon.hpp"

namespace geosub {

struct IterationMetrics {
  double sup_defect = 0.0;     // sup |delta_i|
  double sup_edge = 0.0;       // sup e_i
  double sup_area = 0.0;       // sup |A_i|
  double max_curv_diff = 0.0;  // sup |kappa_{i+1} - kappa_i|
};

IterationMetrics iteration_metrics(const SpherePolygon& P);
IterationMetrics iteration_metrics(const PlanarPolygon& P);

/// Per-iteration scalars for a subdivision run plus the derived decay ratios.
struct AnalysisReport {
  std::vector<IterationMetrics> iterations;
  std::vector<double> defect_ratios;      // delta^{j+1}/delta^j
  std::vector<double> two_step_ratios;    // delta^{j+2}/delta^j
  std::vector<double> curv_diff_ratios;   // grad kappa^{j+1}/grad kappa^j
  std::vector<double> center_curvature;   // filled by divergence experiments
};

AnalysisReport build_report(const std::vector<SpherePolygon>& run);
AnalysisReport build_report(const std::vector<PlanarPolygon>& run);

enum class DecayVerdict { GeometricDecay, Inconclusive, ExactlyGeodesic };

struct SummabilityDiagnostic {
  std::vector<double> ratios;
  DecayVerdict verdict = DecayVerdict::Inconclusive;
};

/// Numeric evidence only: "geometric-decay" when the tail ratios stay
/// uniformly below 1 - epsilon.
SummabilityDiagnostic summability_diagnostic(const std::vector<double>& sup_defects,
                                             double epsilon = 0.01);

/// Closed form of the central defect triple after j planar angle-4pt steps
/// (matrix-power solution of the three-term recursion).
std::array<double, 3> closed_form_defects(double delta_m1_0, double delta_0_0,
                                          double delta_1_0, int j);

/// Closed form of the first inserted angle alpha_1^j under the symmetric
/// hypotheses (equal edges, delta_-1^0 = delta_1^0).
double closed_form_alpha(double delta_0_0, double delta_1_0, int j);

/// Direct evaluation of the planar center-curvature closed form
/// (j(d0 - d1) + 2 d0) / (2 e0 prod_k 1/cos(alpha_1^k)).
double planar_center_curvature_closed_form(double delta_0_0, double delta_1_0,
                                           double edge, int j);

enum class DivergenceVerdict { Bounded, DivergentPlus, DivergentMinus, Inconclusive };

struct DivergenceResult {
  std::vector<double> center_curvature;  // kappa_0^j, j = 0..iterations
  DivergenceVerdict verdict = DivergenceVerdict::Inconclusive;
};

/// Builds the symmetric 5-point polygon with equal edges and prescribed
/// central defects (delta_-1^0 = delta_1_0), runs the angle-4pt scheme and
/// tracks the discrete geodesic curvature at the center vertex.
DivergenceResult divergence_experiment(double delta_0_0, double delta_1_0, double edge,
                                       int iterations, bool planar);

/// Max residual of the small-triangle defect transfer: the planar defect of
/// the same-side-lengths Euclidean triangle minus (delta + A/3), per vertex.
double legendre_transfer_check(const SpherePolygon& P);

}  // namespace geosub
