#pragma once

#include <vector>

#include "geosub/polygon.hpp"
#include "geosub/triangle.hpp"

namespace geosub {

enum class Scheme { SphericalAngle4, SphericalCurvature6, PlanarAngle4 };

/// Boundary handling for open polygons. Endpoints never move under either
/// rule; they differ in how the missing endpoint defects are fed to the
/// stencils: FixedEndpoints copies the adjacent interior defect,
/// MirrorDefects extrapolates it linearly from the two nearest ones.
enum class BoundaryRule { FixedEndpoints, MirrorDefects };

struct SchemeConfig {
  Scheme scheme = Scheme::SphericalAngle4;
  int iterations = 0;
  BoundaryRule boundary = BoundaryRule::FixedEndpoints;
  int presmooth_iterations = 2;     // curvature-6pt bootstrap
  double solvability_margin = 1e-3; // in (0,1)

  void validate() const;
};

/// New point of the insertion triangle over the edge (p_i, p_ip1) seen from
/// p_i under base angle alpha at the ASA edge length; u_i must be the unit
/// tangent at p_i toward p_ip1.
UnitVector sbigs_insert(const UnitVector& p_i, const UnitVector& p_ip1,
                        const TangentVector& u_i, double alpha, double beta);

/// The symmetric construction of the same point from p_ip1; agrees with
/// sbigs_insert up to roundoff and exists for cross-checks.
UnitVector sbigs_insert_symmetric(const UnitVector& p_i, const UnitVector& p_ip1,
                                  double alpha, double beta);

/// Angle rule of the 4-point scheme: (delta_i + delta_ip1)/8.
double angle4_new_angles(double delta_i, double delta_ip1);

/// One refinement step of the spherical angle-based 4-point scheme.
SpherePolygon angle4_step(const SpherePolygon& P, BoundaryRule boundary);

/// Odd sub-mask of the linear 6-point scheme: (-3 k0 + 19 k1 + 19 k2 - 3 k3)/32.
double curvature6_new_kappa(double k_im1, double k_i, double k_ip1, double k_ip2);

/// One refinement step of the curvature-based 6-point spherical scheme.
/// Throws degenerate_configuration (asking for presmoothing) whenever the
/// prescribed curvature is not realizable over some edge within the margin.
SpherePolygon curvature6_step(const SpherePolygon& P, double margin,
                              BoundaryRule boundary = BoundaryRule::FixedEndpoints);

/// One refinement step of the planar angle-based 4-point scheme.
PlanarPolygon planar_angle4_step(const PlanarPolygon& P,
                                 BoundaryRule boundary = BoundaryRule::FixedEndpoints);

/// Iteration driver; result holds one polygon per iteration, input included.
/// For the curvature-6pt scheme the first presmooth_iterations entries after
/// the input are angle-4pt steps.
std::vector<SpherePolygon> subdivide(const SpherePolygon& P, const SchemeConfig& cfg);
std::vector<PlanarPolygon> subdivide(const PlanarPolygon& P, const SchemeConfig& cfg);

/// Defects with boundary policy applied: endpoint entries of open polygons
/// are filled per the rule instead of being zero.
std::vector<double> stencil_defects(const SpherePolygon& P, BoundaryRule boundary);
std::vector<double> stencil_defects(const PlanarPolygon& P, BoundaryRule boundary);

}  // namespace geosub
