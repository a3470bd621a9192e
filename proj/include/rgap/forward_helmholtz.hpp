#pragma once

#include <vector>

#include "rgap/geometry.hpp"
#include "rgap/quadrature.hpp"
#include "rgap/reciprocity.hpp"
#include "rgap/types.hpp"

// Radiating volume potential of a piecewise-constant source on the disks D_j:
//   u^s(x)        = -sum_j rho_j int_{D_j} (i/4) H0(k|x-y|) dy
//   d_nu u^s(x)   =  sum_j rho_j int_{D_j} (ik/4) H1(k|x-y|) (1 - x.y)/|x-y| dy
// the second formula holding for x on the unit circle (normal = x).

namespace rgap::helmholtz {

/// u^s at a boundary point z (|z| = 1 within 1e-12).
Complex scattered_field(const Scene& scene, Vec2 z, const DiskRule& rule = default_disk_rule());

/// d_nu u^s at a boundary point z (|z| = 1 within 1e-12).
Complex scattered_neumann(const Scene& scene, Vec2 z,
                          const DiskRule& rule = default_disk_rule());

/// Cauchy pair (u^s, d_nu u^s) at every node of the grid.
CauchyData cauchy_data(const Scene& scene, const BoundaryGrid& grid,
                       const DiskRule& rule = default_disk_rule());

/// e^{ik z.d} for a unit direction d.
Complex plane_wave(double k, Vec2 direction, Vec2 z);

/// Normal derivative of the plane wave on the unit circle: ik (d.z) e^{ik z.d}.
Complex plane_wave_neumann(double k, Vec2 direction, Vec2 z);

/// Dirichlet and Neumann traces of the plane wave probe on a boundary grid.
std::vector<Complex> plane_wave_trace(double k, Vec2 direction, const BoundaryGrid& grid);
std::vector<Complex> plane_wave_neumann_trace(double k, Vec2 direction, const BoundaryGrid& grid);

/// sum_j rho_j int_{D_j} v dy for v = e^{ik y.d}: the value the reciprocity
/// gap takes on exact data (Green's second identity).
Complex source_moment(const Scene& scene, double k, Vec2 direction,
                      const DiskRule& rule = default_disk_rule());

namespace detail {

/// u^s at an arbitrary point outside the inclusions (no boundary check).
Complex scattered_field_at(const Scene& scene, Vec2 x, const DiskRule& rule = default_disk_rule());

}  // namespace detail

}  // namespace rgap::helmholtz
