#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "geosub/curvature.hpp"
#include "geosub/schemes.hpp"
#include "helpers.hpp"

using namespace geosub;
using namespace geosub::test;

namespace {

SpherePolygon small_circle_polygon(double r, int n) {
  SpherePolygon P;
  P.closed = true;
  for (int i = 0; i < n; ++i) {
    const double phi = 2.0 * kPi * i / n;
    P.vertices.emplace_back(std::sin(r) * std::cos(phi), std::sin(r) * std::sin(phi),
                            std::cos(r));
  }
  return P;
}

/// Closed star-shaped polygon around the north pole with bounded defects:
/// radii jitter around a base colatitude, regenerated until sup|defect| fits.
SpherePolygon random_star_polygon(int n, double max_defect) {
  for (;;) {
    SpherePolygon P;
    P.closed = true;
    for (int i = 0; i < n; ++i) {
      const double phi = 2.0 * kPi * i / n;
      const double r = 1.2 + uniform(-0.1, 0.1);
      P.vertices.emplace_back(std::sin(r) * std::cos(phi), std::sin(r) * std::sin(phi),
                              std::cos(r));
    }
    const std::vector<double> d = polygon_defects(P);
    const double sup = std::abs(*std::max_element(d.begin(), d.end(), [](double a, double b) {
      return std::abs(a) < std::abs(b);
    }));
    if (sup <= max_defect) return P;
  }
}

double sup_defect(const SpherePolygon& P) {
  double s = 0.0;
  for (double d : polygon_defects(P)) s = std::max(s, std::abs(d));
  return s;
}

UnitVector rotated(const UnitVector& p, const Vec3& axis, double angle) {
  return UnitVector::unchecked(rotate_about_axis(p.vec(), axis, angle));
}

}  // namespace

TEST_CASE("angle4_new_angles rule") {
  CHECK(angle4_new_angles(0.4, 0.4) == doctest::Approx(0.1));
  CHECK(angle4_new_angles(0.0, 0.0) == 0.0);
  CHECK(angle4_new_angles(0.3, -0.3) == doctest::Approx(0.0));
}

TEST_CASE("sbigs_insert: bisector symmetry and formula") {
  for (int i = 0; i < 200; ++i) {
    const UnitVector p = random_unit();
    const Vec3 u = random_tangent_dir(p);
    const double l = uniform(0.05, 2.0);
    const UnitVector q = exp_map(p, u * l);
    const double a = uniform(0.01, 1.3) * (uniform(0, 1) < 0.5 ? -1.0 : 1.0);
    const UnitVector apex = sbigs_insert(p, q, TangentVector::make(p, u), a, a);
    CHECK(geodesic_distance(apex, p) ==
          doctest::Approx(geodesic_distance(apex, q)).epsilon(1e-10));
    CHECK(geodesic_distance(apex, p) ==
          doctest::Approx(std::atan(std::tan(l / 2.0) / std::cos(a))).epsilon(1e-10));
  }
}

TEST_CASE("sbigs_insert dual constructions agree") {
  for (int i = 0; i < 1000; ++i) {
    const UnitVector p = random_unit();
    const Vec3 u = random_tangent_dir(p);
    const double l = uniform(0.05, 2.0);
    const UnitVector q = exp_map(p, u * l);
    const double a = uniform(0.01, 1.2) * (uniform(0, 1) < 0.5 ? -1.0 : 1.0);
    const double b = a * uniform(0.3, 1.7);
    const UnitVector from_p = sbigs_insert(p, q, TangentVector::make(p, u), a, b);
    const UnitVector from_q = sbigs_insert_symmetric(p, q, a, b);
    CHECK(norm(from_p.vec() - from_q.vec()) < 1e-9);
  }
}

TEST_CASE("sbigs_insert validates its tangent argument") {
  const UnitVector p(0.0, 0.0, 1.0);
  const UnitVector q(std::sin(0.5), 0.0, std::cos(0.5));
  const TangentVector wrong_base = TangentVector::make(q, {0.0, 1.0, 0.0});
  CHECK_THROWS_AS(sbigs_insert(p, q, wrong_base, 0.1, 0.1), invalid_input);
  const TangentVector wrong_dir = TangentVector::make(p, {0.0, 1.0, 0.0});
  CHECK_THROWS_AS(sbigs_insert(p, q, wrong_dir, 0.1, 0.1), invalid_input);
}

TEST_CASE("angle4_step preserves the dihedral symmetry of a small-circle polygon") {
  // The step commutes with the polygon's symmetry group, so kept and
  // inserted vertices each stay on one latitude circle with equal defects
  // within their orbit. (The two orbits only merge in the refinement limit:
  // the insertion rule is not exactly circle-preserving at finite n.)
  const SpherePolygon P = small_circle_polygon(0.5, 6);
  const SpherePolygon Q = angle4_step(P, BoundaryRule::FixedEndpoints);
  REQUIRE(Q.size() == 12);
  const double z_even = Q.vertices[0].z();
  const double z_odd = Q.vertices[1].z();
  const std::vector<double> d = polygon_defects(Q);
  for (std::size_t i = 0; i < Q.size(); ++i) {
    CHECK(Q.vertices[i].z() ==
          doctest::Approx(i % 2 == 0 ? z_even : z_odd).epsilon(1e-12));
    CHECK(d[i] == doctest::Approx(i % 2 == 0 ? d[0] : d[1]).epsilon(1e-10));
  }
  // Refining a finer sampling of the same circle brings the two latitude
  // orbits together (the scheme reproduces circles in the limit).
  const SpherePolygon P2 = small_circle_polygon(0.5, 24);
  const SpherePolygon Q2 = angle4_step(P2, BoundaryRule::FixedEndpoints);
  CHECK(std::abs(Q2.vertices[1].z() - Q2.vertices[0].z()) <
        0.05 * std::abs(z_odd - z_even));
}

TEST_CASE("angle4_step preserves old vertices exactly") {
  const SpherePolygon P = random_star_polygon(7, 0.6);
  const SpherePolygon Q = angle4_step(P, BoundaryRule::FixedEndpoints);
  REQUIRE(Q.size() == 14);
  for (std::size_t i = 0; i < P.size(); ++i) {
    CHECK(norm(Q.vertices[2 * i].vec() - P.vertices[i].vec()) < 1e-15);
  }
}

TEST_CASE("angle4_step: open polygon counting and endpoint preservation") {
  SpherePolygon P = random_star_polygon(7, 0.6);
  P.closed = false;
  const SpherePolygon Q = angle4_step(P, BoundaryRule::FixedEndpoints);
  CHECK(Q.size() == 13);
  CHECK(norm(Q.vertices.front().vec() - P.vertices.front().vec()) < 1e-15);
  CHECK(norm(Q.vertices.back().vec() - P.vertices.back().vec()) < 1e-15);
}

TEST_CASE("angle4_step even-defect recursion") {
  // After one step the defect at a kept interior vertex obeys
  // (-d_{i-1} + 6 d_i - d_{i+1})/8.
  const SpherePolygon P = random_star_polygon(9, 0.6);
  const std::vector<double> d = polygon_defects(P);
  const SpherePolygon Q = angle4_step(P, BoundaryRule::FixedEndpoints);
  const std::vector<double> dq = polygon_defects(Q);
  const long n = static_cast<long>(P.size());
  for (long i = 0; i < n; ++i) {
    const double expected =
        (-d[static_cast<std::size_t>((i - 1 + n) % n)] + 6.0 * d[static_cast<std::size_t>(i)] -
         d[static_cast<std::size_t>((i + 1) % n)]) /
        8.0;
    CHECK(dq[static_cast<std::size_t>(2 * i)] == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("two-step defect contraction by 7/8") {
  for (int trial = 0; trial < 5; ++trial) {
    SpherePolygon P = random_star_polygon(5 + trial, 0.6);
    std::vector<double> sups{sup_defect(P)};
    for (int j = 0; j < 8; ++j) {
      P = angle4_step(P, BoundaryRule::FixedEndpoints);
      sups.push_back(sup_defect(P));
    }
    for (std::size_t j = 0; j + 2 < sups.size(); ++j) {
      CHECK(sups[j + 2] <= 0.875 * sups[j] + 1e-12);
    }
  }
}

TEST_CASE("angle4 zero-angle edges insert geodesic midpoints") {
  // A great-circle polygon has all defects zero; every insertion degenerates
  // to the midpoint and the polygon stays on the equator.
  SpherePolygon P;
  P.closed = true;
  for (int i = 0; i < 6; ++i) {
    const double phi = 2.0 * kPi * i / 6;
    P.vertices.emplace_back(std::cos(phi), std::sin(phi), 0.0);
  }
  const SpherePolygon Q = angle4_step(P, BoundaryRule::FixedEndpoints);
  for (const UnitVector& v : Q.vertices) CHECK(std::abs(v.z()) < 1e-15);
  CHECK(sup_defect(Q) < 1e-12);
}

TEST_CASE("curvature6_new_kappa mask") {
  CHECK(curvature6_new_kappa(1.0, 1.0, 1.0, 1.0) == doctest::Approx(1.0));
  CHECK(curvature6_new_kappa(0.0, 0.0, 0.0, 0.0) == 0.0);
  CHECK(curvature6_new_kappa(-1.0, 0.0, 1.0, 2.0) == doctest::Approx(0.5));
  // Affine coefficients, read off the unit stencils.
  CHECK(curvature6_new_kappa(1, 0, 0, 0) == doctest::Approx(-3.0 / 32.0));
  CHECK(curvature6_new_kappa(0, 1, 0, 0) == doctest::Approx(19.0 / 32.0));
  CHECK(curvature6_new_kappa(0, 0, 1, 0) == doctest::Approx(19.0 / 32.0));
  CHECK(curvature6_new_kappa(0, 0, 0, 1) == doctest::Approx(-3.0 / 32.0));
}

TEST_CASE("curvature6_step keeps the symmetry of a regular small-circle polygon") {
  const SpherePolygon P = small_circle_polygon(0.5, 8);
  const SpherePolygon Q = curvature6_step(P, 1e-3);
  REQUIRE(Q.size() == 16);
  const double z = Q.vertices[1].z();
  for (std::size_t i = 1; i < Q.size(); i += 2) {
    CHECK(Q.vertices[i].z() == doctest::Approx(z).epsilon(1e-12));
  }
  // Old vertices preserved; curvature constant within each symmetry orbit
  // and close to the circle's cot(0.5) across the whole refined polygon.
  for (std::size_t i = 0; i < P.size(); ++i) {
    CHECK(norm(Q.vertices[2 * i].vec() - P.vertices[i].vec()) < 1e-15);
  }
  const CurvatureSeries s = polygon_curvature_series(Q, CurvatureEstimator::Chord);
  REQUIRE(s.samples.size() == 16);
  for (std::size_t i = 0; i < s.samples.size(); ++i) {
    CHECK(s.samples[i].kappa ==
          doctest::Approx(s.samples[i % 2].kappa).epsilon(1e-9));
    CHECK(s.samples[i].kappa ==
          doctest::Approx(1.0 / std::tan(0.5)).epsilon(0.03));
  }
}

TEST_CASE("curvature6_step realizes the prescribed defect") {
  const SpherePolygon P = random_star_polygon(8, 0.3);
  // Reproduce the scheme's own prescription to compare against measurement.
  const long n = static_cast<long>(P.size());
  std::vector<double> kappa(P.size());
  for (long i = 0; i < n; ++i) {
    kappa[static_cast<std::size_t>(i)] =
        chord_curvature(P.at_wrapped(i - 1), P.at_wrapped(i), P.at_wrapped(i + 1));
  }
  const SpherePolygon Q = curvature6_step(P, 1e-3);
  for (long i = 0; i < n; ++i) {
    const double k_new = curvature6_new_kappa(
        kappa[static_cast<std::size_t>((i - 1 + n) % n)], kappa[static_cast<std::size_t>(i)],
        kappa[static_cast<std::size_t>((i + 1) % n)],
        kappa[static_cast<std::size_t>((i + 2) % n)]);
    const double e = geodesic_distance(P.at_wrapped(i), P.at_wrapped(i + 1));
    const double delta_new = std::asin(k_new * e / 2.0);
    const TriangleFrame f =
        frame_at_vertex(Q.at_wrapped(2 * i), Q.at_wrapped(2 * i + 1), Q.at_wrapped(2 * i + 2));
    CHECK(f.delta == doctest::Approx(delta_new).epsilon(1e-9));
  }
}

TEST_CASE("curvature6_step reports unsolvable edges and asks for presmoothing") {
  // A sharp spike: huge curvature prescribed over a long edge.
  SpherePolygon P;
  P.closed = true;
  P.vertices = {UnitVector(1, 0, 0), UnitVector(0, 1, 0),
                UnitVector(normalized({std::cos(0.05), std::sin(0.05), 0.02})),
                UnitVector(0.0, 0.0, 1.0)};
  CHECK_THROWS_WITH_AS(curvature6_step(P, 1e-3),
                       doctest::Contains("presmooth"), degenerate_configuration);
}

TEST_CASE("planar_angle4_step keeps circles circular and midpoints flat") {
  PlanarPolygon P;
  P.closed = true;
  for (int i = 0; i < 8; ++i) {
    const double phi = 2.0 * kPi * i / 8;
    P.vertices.push_back({std::cos(phi), std::sin(phi)});
  }
  const PlanarPolygon Q = planar_angle4_step(P);
  REQUIRE(Q.size() == 16);
  for (const Vec2& v : Q.vertices) CHECK(norm(v) == doctest::Approx(norm(Q.vertices[1])));
  // Flat segments get Euclidean midpoints.
  PlanarPolygon L;
  L.closed = false;
  L.vertices = {{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  const PlanarPolygon M = planar_angle4_step(L);
  REQUIRE(M.size() == 7);
  for (std::size_t i = 0; i < M.size(); ++i) {
    CHECK(M.vertices[i].x == doctest::Approx(0.5 * i));
    CHECK(M.vertices[i].y == doctest::Approx(0.0));
  }
}

TEST_CASE("subdivide driver: iteration semantics and counting") {
  SpherePolygon P = random_star_polygon(7, 0.6);
  SchemeConfig cfg;
  cfg.scheme = Scheme::SphericalAngle4;
  cfg.iterations = 0;
  CHECK(subdivide(P, cfg).size() == 1);
  cfg.iterations = 4;
  const std::vector<SpherePolygon> run = subdivide(P, cfg);
  REQUIRE(run.size() == 5);
  std::size_t n = P.size();
  for (const SpherePolygon& Q : run) {
    CHECK(Q.size() == n);
    n *= 2;
  }
  // Open polygon: n_j = 2 n_{j-1} - 1.
  P.closed = false;
  const std::vector<SpherePolygon> open_run = subdivide(P, cfg);
  n = P.size();
  for (const SpherePolygon& Q : open_run) {
    CHECK(Q.size() == n);
    n = 2 * n - 1;
  }
}

TEST_CASE("subdivide validates configuration and polygon kind") {
  const SpherePolygon P = random_star_polygon(6, 0.6);
  SchemeConfig cfg;
  cfg.iterations = -1;
  CHECK_THROWS_AS(subdivide(P, cfg), invalid_input);
  cfg.iterations = 1;
  cfg.solvability_margin = 1.5;
  CHECK_THROWS_AS(subdivide(P, cfg), invalid_input);
  cfg.solvability_margin = 1e-3;
  cfg.scheme = Scheme::PlanarAngle4;
  CHECK_THROWS_AS(subdivide(P, cfg), invalid_input);
  PlanarPolygon Q;
  Q.closed = true;
  Q.vertices = {{0, 0}, {1, 0}, {0.5, 1}};
  cfg.scheme = Scheme::SphericalAngle4;
  CHECK_THROWS_AS(subdivide(Q, cfg), invalid_input);
}

TEST_CASE("subdivide with curvature6 presmooths with angle4 first") {
  const SpherePolygon P = random_star_polygon(8, 0.5);
  SchemeConfig cfg;
  cfg.scheme = Scheme::SphericalCurvature6;
  cfg.iterations = 4;
  cfg.presmooth_iterations = 2;
  const std::vector<SpherePolygon> run = subdivide(P, cfg);
  REQUIRE(run.size() == 5);
  // The presmoothing iterations coincide with plain angle4 steps.
  SpherePolygon A = P;
  for (int j = 0; j < 2; ++j) {
    A = angle4_step(A, cfg.boundary);
    for (std::size_t i = 0; i < A.size(); ++i) {
      CHECK(norm(run[static_cast<std::size_t>(j + 1)].vertices[i].vec() - A.vertices[i].vec()) <
            1e-15);
    }
  }
  // The later iterations do not (the 6-pt insertion differs).
  const SpherePolygon B = angle4_step(A, cfg.boundary);
  double diff = 0.0;
  for (std::size_t i = 0; i < B.size(); ++i) {
    diff = std::max(diff, norm(run[3].vertices[i].vec() - B.vertices[i].vec()));
  }
  CHECK(diff > 1e-12);
}

TEST_CASE("interpolation invariant across schemes and iterations") {
  const SpherePolygon P = random_star_polygon(7, 0.5);
  for (Scheme scheme : {Scheme::SphericalAngle4, Scheme::SphericalCurvature6}) {
    SchemeConfig cfg;
    cfg.scheme = scheme;
    cfg.iterations = 5;
    const std::vector<SpherePolygon> run = subdivide(P, cfg);
    for (std::size_t j = 0; j + 1 < run.size(); ++j) {
      for (std::size_t i = 0; i < run[j].size(); ++i) {
        CHECK(norm(run[j + 1].vertices[2 * i].vec() - run[j].vertices[i].vec()) <= 1e-15);
      }
    }
  }
}

TEST_CASE("rotational equivariance of subdivision") {
  const SpherePolygon P = random_star_polygon(6, 0.5);
  const Vec3 axis = random_unit().vec();
  const double angle = 1.1;
  SpherePolygon R = P;
  for (UnitVector& v : R.vertices) v = rotated(v, axis, angle);
  for (Scheme scheme : {Scheme::SphericalAngle4, Scheme::SphericalCurvature6}) {
    SchemeConfig cfg;
    cfg.scheme = scheme;
    cfg.iterations = 4;
    const std::vector<SpherePolygon> run_then_rot = subdivide(P, cfg);
    const std::vector<SpherePolygon> rot_then_run = subdivide(R, cfg);
    const SpherePolygon& a = run_then_rot.back();
    const SpherePolygon& b = rot_then_run.back();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(norm(rotated(a.vertices[i], axis, angle).vec() - b.vertices[i].vec()) < 1e-10);
    }
  }
}

TEST_CASE("edge lengths decay to zero under angle4 refinement") {
  SpherePolygon P = random_star_polygon(6, 0.6);
  double prev = 1e9;
  for (int j = 0; j < 8; ++j) {
    P = angle4_step(P, BoundaryRule::FixedEndpoints);
    double sup_e = 0.0;
    for (double e : edge_lengths(P)) sup_e = std::max(sup_e, e);
    if (j >= 2) CHECK(sup_e < prev);
    prev = sup_e;
  }
  CHECK(prev < 0.02);
}

TEST_CASE("deep angle4 runs keep unit norm") {
  SpherePolygon P = random_star_polygon(5, 0.5);
  for (int j = 0; j < 10; ++j) P = angle4_step(P, BoundaryRule::FixedEndpoints);
  for (const UnitVector& v : P.vertices) CHECK(std::abs(norm(v.vec()) - 1.0) < 1e-12);
}

TEST_CASE("star polygon smooths out: max defect small after 10 iterations") {
  SchemeConfig cfg;
  cfg.scheme = Scheme::SphericalAngle4;
  cfg.iterations = 10;
  // 5-pointed star traced by modulating the colatitude.
  SpherePolygon P;
  P.closed = true;
  for (int i = 0; i < 40; ++i) {
    const double phi = 2.0 * kPi * i / 40;
    const double r = 1.2 + 0.25 * std::cos(5.0 * phi);
    P.vertices.emplace_back(std::sin(r) * std::cos(phi), std::sin(r) * std::sin(phi),
                            std::cos(r));
  }
  CHECK(sup_defect(P) > 0.5);
  const std::vector<SpherePolygon> run = subdivide(P, cfg);
  CHECK(sup_defect(run.back()) < 1e-2);
}
