#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "geosub/analysis.hpp"
#include "geosub/curvature.hpp"
#include "geosub/polygon.hpp"
#include "geosub/schemes.hpp"
#include "geosub/sphere.hpp"
#include "helpers.hpp"

using namespace geosub;
using geosub::test::kPi;

namespace {

SpherePolygon small_circle_polygon(double colatitude, int n) {
  SpherePolygon P;
  P.closed = true;
  for (int i = 0; i < n; ++i) {
    const double phi = 2.0 * kPi * i / n;
    P.vertices.emplace_back(std::sin(colatitude) * std::cos(phi),
                            std::sin(colatitude) * std::sin(phi), std::cos(colatitude));
  }
  return P;
}

SpherePolygon great_circle_polygon(int n) { return small_circle_polygon(kPi / 2.0, n); }

SpherePolygon rotated(const SpherePolygon& P, const Vec3& axis, double angle) {
  SpherePolygon Q;
  Q.closed = P.closed;
  for (const UnitVector& v : P.vertices) {
    Q.vertices.push_back(UnitVector(rotate_about_axis(v.vec(), axis, angle)));
  }
  return Q;
}

// Direct matrix-power evaluation of the three-defect recursion
// d' = (1/8) [[2,2,0],[-1,6,-1],[0,2,2]] d.
std::array<double, 3> defect_recursion(std::array<double, 3> d, int j) {
  for (int k = 0; k < j; ++k) {
    const std::array<double, 3> n = {
        (2.0 * d[0] + 2.0 * d[1]) / 8.0,
        (-d[0] + 6.0 * d[1] - d[2]) / 8.0,
        (2.0 * d[1] + 2.0 * d[2]) / 8.0,
    };
    d = n;
  }
  return d;
}

}  // namespace

TEST_CASE("iteration_metrics: great circle polygon has zero defect, area, curvature jump") {
  const IterationMetrics m = iteration_metrics(great_circle_polygon(16));
  CHECK(m.sup_defect < 1e-12);
  CHECK(m.sup_area < 1e-12);
  CHECK(m.max_curv_diff < 1e-12);
  // Edge of a regular 16-gon on the equator: 2 pi / 16 of arc.
  CHECK(m.sup_edge == doctest::Approx(2.0 * kPi / 16.0).epsilon(1e-12));
}

TEST_CASE("iteration_metrics: regular small circle polygon is curvature-constant") {
  const SpherePolygon P = small_circle_polygon(0.7, 20);
  const IterationMetrics m = iteration_metrics(P);
  // All vertices share one defect, one edge, one area by symmetry.
  const std::vector<double> defects = polygon_defects(P);
  CHECK(m.sup_defect == doctest::Approx(defects[0]).epsilon(1e-12));
  CHECK(m.sup_defect > 0.0);
  CHECK(m.max_curv_diff < 1e-10);
  const std::vector<double> edges = edge_lengths(P);
  CHECK(m.sup_edge == doctest::Approx(edges[0]).epsilon(1e-12));
}

TEST_CASE("iteration_metrics is rotation invariant") {
  SpherePolygon P;
  P.closed = true;
  for (int i = 0; i < 9; ++i) {
    const double phi = 2.0 * kPi * i / 9;
    const double r = 1.0 + 0.2 * std::cos(3.0 * phi);
    P.vertices.emplace_back(std::sin(r) * std::cos(phi), std::sin(r) * std::sin(phi),
                            std::cos(r));
  }
  const IterationMetrics m0 = iteration_metrics(P);
  const IterationMetrics m1 =
      iteration_metrics(rotated(P, normalized(Vec3{1.0, 2.0, -1.0}), 0.83));
  CHECK(m1.sup_defect == doctest::Approx(m0.sup_defect).epsilon(1e-10));
  CHECK(m1.sup_edge == doctest::Approx(m0.sup_edge).epsilon(1e-10));
  CHECK(m1.sup_area == doctest::Approx(m0.sup_area).epsilon(1e-10));
  CHECK(m1.max_curv_diff == doctest::Approx(m0.max_curv_diff).epsilon(1e-8));
}

TEST_CASE("iteration_metrics: planar square sees the quarter-turn defect") {
  PlanarPolygon P;
  P.closed = true;
  P.vertices = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
  const IterationMetrics m = iteration_metrics(P);
  CHECK(m.sup_defect == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  CHECK(m.sup_edge == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.max_curv_diff < 1e-12);
}

TEST_CASE("build_report ratios match the recomputed quotients") {
  SchemeConfig cfg;
  cfg.scheme = Scheme::SphericalAngle4;
  cfg.iterations = 6;
  const std::vector<SpherePolygon> run = subdivide(small_circle_polygon(0.9, 7), cfg);
  const AnalysisReport rep = build_report(run);
  REQUIRE(rep.iterations.size() == 7);
  REQUIRE(rep.defect_ratios.size() == 6);
  REQUIRE(rep.two_step_ratios.size() == 5);
  for (std::size_t j = 0; j < rep.defect_ratios.size(); ++j) {
    CHECK(rep.defect_ratios[j] ==
          doctest::Approx(rep.iterations[j + 1].sup_defect / rep.iterations[j].sup_defect)
              .epsilon(1e-12));
  }
  for (std::size_t j = 0; j < rep.two_step_ratios.size(); ++j) {
    CHECK(rep.two_step_ratios[j] ==
          doctest::Approx(rep.iterations[j + 2].sup_defect / rep.iterations[j].sup_defect)
              .epsilon(1e-12));
  }
}

TEST_CASE("summability_diagnostic verdicts") {
  SUBCASE("all-zero defects are exactly geodesic") {
    const SummabilityDiagnostic d = summability_diagnostic({0.0, 0.0, 0.0, 0.0});
    CHECK(d.verdict == DecayVerdict::ExactlyGeodesic);
    CHECK(d.ratios.empty());
  }
  SUBCASE("geometric sequence decays") {
    std::vector<double> v;
    double x = 1.0;
    for (int j = 0; j < 10; ++j, x *= 0.5) v.push_back(x);
    const SummabilityDiagnostic d = summability_diagnostic(v);
    CHECK(d.verdict == DecayVerdict::GeometricDecay);
    for (double r : d.ratios) CHECK(r == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("non-decaying tail is inconclusive") {
    const SummabilityDiagnostic d =
        summability_diagnostic({1.0, 0.5, 0.25, 0.25, 0.25, 0.26, 0.27});
    CHECK(d.verdict == DecayVerdict::Inconclusive);
  }
  SUBCASE("too few iterations throw") {
    CHECK_THROWS_AS((void)summability_diagnostic({1.0, 0.5}), invalid_input);
  }
}

TEST_CASE("summability_diagnostic flags geometric decay on an actual run") {
  SchemeConfig cfg;
  cfg.scheme = Scheme::SphericalAngle4;
  cfg.iterations = 10;
  const std::vector<SpherePolygon> run = subdivide(small_circle_polygon(0.8, 6), cfg);
  std::vector<double> sup;
  for (const SpherePolygon& P : run) sup.push_back(iteration_metrics(P).sup_defect);
  CHECK(summability_diagnostic(sup).verdict == DecayVerdict::GeometricDecay);
}

TEST_CASE("closed_form_defects: j = 0 is the identity") {
  const std::array<double, 3> d = closed_form_defects(0.2, -0.3, 0.45, 0);
  CHECK(d[0] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(d[1] == doctest::Approx(-0.3).epsilon(1e-15));
  CHECK(d[2] == doctest::Approx(0.45).epsilon(1e-15));
}

TEST_CASE("closed_form_defects: j = 1 matches one hand-computed step") {
  const double dm1 = 0.12, d0 = 0.31, d1 = -0.07;
  const std::array<double, 3> got = closed_form_defects(dm1, d0, d1, 1);
  CHECK(got[0] == doctest::Approx((2.0 * dm1 + 2.0 * d0) / 8.0).epsilon(1e-14));
  CHECK(got[1] == doctest::Approx((-dm1 + 6.0 * d0 - d1) / 8.0).epsilon(1e-14));
  CHECK(got[2] == doctest::Approx((2.0 * d0 + 2.0 * d1) / 8.0).epsilon(1e-14));
}

TEST_CASE("closed_form_defects matches the matrix-power recursion for j <= 25") {
  for (int trial = 0; trial < 50; ++trial) {
    const std::array<double, 3> d0 = {test::uniform(-0.5, 0.5), test::uniform(-0.5, 0.5),
                                      test::uniform(-0.5, 0.5)};
    for (int j = 0; j <= 25; ++j) {
      const std::array<double, 3> want = defect_recursion(d0, j);
      const std::array<double, 3> got = closed_form_defects(d0[0], d0[1], d0[2], j);
      for (int k = 0; k < 3; ++k) {
        CHECK(std::abs(got[static_cast<std::size_t>(k)] -
                       want[static_cast<std::size_t>(k)]) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS((void)closed_form_defects(0.1, 0.1, 0.1, -1), invalid_input);
}

TEST_CASE("closed_form_alpha: equal defects give delta / 2^(j+1)") {
  const double d = 0.37;
  for (int j = 0; j <= 20; ++j) {
    CHECK(closed_form_alpha(d, d, j) ==
          doctest::Approx(d * std::ldexp(1.0, -(j + 1))).epsilon(1e-13));
  }
}

TEST_CASE("closed_form_alpha equals (d0^{j-1} + d1^{j-1}) / 8 under symmetric defects") {
  // The first inserted angle of step j averages the two center defects of the
  // previous iterate; feed those from the symmetric defect closed form.
  for (int trial = 0; trial < 20; ++trial) {
    const double d0 = test::uniform(-0.5, 0.5);
    const double d1 = test::uniform(-0.5, 0.5);
    for (int j = 1; j <= 25; ++j) {
      const std::array<double, 3> prev = closed_form_defects(d1, d0, d1, j - 1);
      CHECK(std::abs(closed_form_alpha(d0, d1, j) - (prev[1] + prev[2]) / 8.0) < 1e-14);
    }
  }
}

TEST_CASE("closed_form_alpha terms are summable: the cosine product stabilizes") {
  double prod = 1.0;
  double prev = 0.0;
  for (int k = 1; k <= 200; ++k) {
    prod *= std::cos(closed_form_alpha(0.3, 0.1, k));
    if (k == 60) prev = prod;
  }
  CHECK(std::abs(prod - prev) < 1e-14);
  CHECK(prod > 0.9);
}

TEST_CASE("planar divergence experiment reproduces the center-curvature closed form") {
  const double d0 = 0.3, d1 = 0.1, e = 0.5;
  const DivergenceResult r = divergence_experiment(d0, d1, e, 20, /*planar=*/true);
  REQUIRE(r.center_curvature.size() == 21);
  for (int j = 0; j <= 20; ++j) {
    const double want = planar_center_curvature_closed_form(d0, d1, e, j);
    CHECK(r.center_curvature[static_cast<std::size_t>(j)] ==
          doctest::Approx(want).epsilon(1e-9));
  }
  // kappa_0^0 = 2 d0 / (2 e).
  CHECK(r.center_curvature[0] == doctest::Approx(d0 / e).epsilon(1e-12));
}

TEST_CASE("divergence verdicts: growth, sign flip, boundedness") {
  SUBCASE("d0 > d1 diverges to +inf, planar and spherical") {
    for (bool planar : {true, false}) {
      const DivergenceResult r = divergence_experiment(0.3, 0.1, 0.5, 40, planar);
      CHECK(r.verdict == DivergenceVerdict::DivergentPlus);
      // Strict growth once the linear term dominates.
      for (std::size_t j = 5; j + 1 < r.center_curvature.size(); ++j) {
        CHECK(std::abs(r.center_curvature[j + 1]) > std::abs(r.center_curvature[j]));
      }
    }
  }
  SUBCASE("d0 < d1 diverges to -inf") {
    const DivergenceResult r = divergence_experiment(0.1, 0.3, 0.5, 40, /*planar=*/false);
    CHECK(r.verdict == DivergenceVerdict::DivergentMinus);
    CHECK(r.center_curvature.back() < 0.0);
  }
  SUBCASE("equal defects stay bounded") {
    for (bool planar : {true, false}) {
      const DivergenceResult r = divergence_experiment(0.2, 0.2, 0.5, 40, planar);
      CHECK(r.verdict == DivergenceVerdict::Bounded);
      for (double k : r.center_curvature) CHECK(std::abs(k) < 10.0 * 0.4);
    }
  }
  SUBCASE("too few iterations are inconclusive") {
    const DivergenceResult r = divergence_experiment(0.3, 0.1, 0.5, 5, /*planar=*/true);
    CHECK(r.verdict == DivergenceVerdict::Inconclusive);
  }
  SUBCASE("invalid edge throws") {
    CHECK_THROWS_AS((void)divergence_experiment(0.3, 0.1, 0.0, 10, true), invalid_input);
    CHECK_THROWS_AS((void)divergence_experiment(0.3, 0.1, 0.5, -1, true), invalid_input);
  }
}

TEST_CASE("legendre_transfer_check: geodesic polygons transfer exactly") {
  CHECK(legendre_transfer_check(great_circle_polygon(12)) < 1e-6);
}

TEST_CASE("legendre_transfer_check residual scales like the fourth power of the edge") {
  // Halving the edge (doubling the vertex count on the same circle) must
  // shrink the per-vertex residual by roughly 2^4.
  double prev = 0.0;
  for (int n : {10, 20, 40, 80}) {
    const double res = legendre_transfer_check(small_circle_polygon(0.7, n));
    if (prev > 0.0) {
      const double factor = prev / res;
      CHECK(factor > 8.0);
      CHECK(factor < 32.0);
    }
    prev = res;
  }
}

TEST_CASE("edge, area, and transfer residual all vanish along a subdivision run") {
  SchemeConfig cfg;
  cfg.scheme = Scheme::SphericalAngle4;
  cfg.iterations = 8;
  const std::vector<SpherePolygon> run = subdivide(small_circle_polygon(0.9, 8), cfg);
  const AnalysisReport rep = build_report(run);
  for (std::size_t j = 0; j + 1 < rep.iterations.size(); ++j) {
    CHECK(rep.iterations[j + 1].sup_edge < rep.iterations[j].sup_edge);
    CHECK(rep.iterations[j + 1].sup_area < rep.iterations[j].sup_area);
  }
  CHECK(rep.iterations.back().sup_edge < 1e-2);
  CHECK(rep.iterations.back().sup_area < 1e-5);
  CHECK(legendre_transfer_check(run.back()) < legendre_transfer_check(run.front()));
}
