#pragma once

#include <vector>

#include "rgap/geometry.hpp"
#include "rgap/quadrature.hpp"
#include "rgap/reciprocity.hpp"
#include "rgap/types.hpp"

// Born-type synthesis of diffuse optical tomography data on the unit disk.
//
// For Dirichlet data e^{in theta} the background solution is w^n with
// w = x1 + i x2; inside the small inclusions the unknown field is replaced by
// that background, so
//   d_nu u(z) = n e^{in theta_z} - sum_j rho_j * int_{D_j} w^n K(y, theta_z) dy
// where K is the outward normal derivative of the Dirichlet Green's function.

namespace rgap::diffusion {

/// w^n for w = x1 + i x2 (= |x|^n e^{i n theta}); 1 for n = 0 everywhere.
Complex harmonic_lifting(int n, Vec2 x);

/// Normal derivative of the lifting on the unit circle: n e^{i n theta}.
Complex lifting_neumann_trace(int n, double theta);

/// d_nu(z) G(x, z) for the Dirichlet Green's function of -Laplace on the
/// unit disk, z = (cos theta_z, sin theta_z):
///   -(1/2pi) (1 - |x|^2) / |x - z|^2.
/// This is the negative Poisson kernel, so -int f K ds reproduces the
/// harmonic extension of f.
double green_neumann_kernel(Vec2 x, double theta_z);

/// The volume correction -sum_j rho_j int_{D_j} w^n K dy at every node.
std::vector<Complex> neumann_correction(const Scene& scene, int n, const BoundaryGrid& grid,
                                        const DiskRule& rule = default_disk_rule());

/// Full Born Neumann data: lifting_neumann_trace + neumann_correction.
std::vector<Complex> neumann_data(const Scene& scene, int n, const BoundaryGrid& grid,
                                  const DiskRule& rule = default_disk_rule());

/// Leading-order point formula for the correction:
///   -epsilon^2 sum_j pi rho_j w_j^n K(x_j, theta_i).
std::vector<Complex> neumann_correction_point(const Scene& scene, int n,
                                              const BoundaryGrid& grid);

/// Cauchy pair (e^{in theta}, Neumann data) for excitation n.
CauchyData cauchy_data(const Scene& scene, int n, const BoundaryGrid& grid);

/// Dirichlet and Neumann traces of the probe u0(., e^{in theta}).
std::vector<Complex> lifting_trace(int n, const BoundaryGrid& grid);
std::vector<Complex> lifting_neumann(int n, const BoundaryGrid& grid);

}  // namespace rgap::diffusion
