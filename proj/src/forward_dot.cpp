#include "rgap/forward_dot.hpp"

#include <string>

#include "parallel.hpp"

namespace rgap::diffusion {

Complex harmonic_lifting(int n, Vec2 x) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "harmonic_lifting: negative mode");
  if (dot(x, x) > (1.0 + 1e-12) * (1.0 + 1e-12)) {
    throw Error(ErrorKind::Domain, "harmonic_lifting: point outside the unit disk");
  }
  // Binary powering keeps w^n exact at w = 0.
  Complex result = 1.0;
  Complex base(x.x, x.y);
  for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
    if (e & 1u) result *= base;
    base *= base;
  }
  return result;
}

Complex lifting_neumann_trace(int n, double theta) {
  const double phase = n * theta;
  return static_cast<double>(n) * Complex(std::cos(phase), std::sin(phase));
}

double green_neumann_kernel(Vec2 x, double theta_z) {
  const double r2 = dot(x, x);
  if (!(r2 < 1.0)) throw Error(ErrorKind::Domain, "green_neumann_kernel: |x| must be < 1");
  const Vec2 z{std::cos(theta_z), std::sin(theta_z)};
  const Vec2 d = x - z;
  return -(1.0 - r2) / (kTwoPi * dot(d, d));
}

std::vector<Complex> neumann_correction(const Scene& scene, int n, const BoundaryGrid& grid,
                                        const DiskRule& rule) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "neumann_correction: negative mode");
  std::vector<Complex> out(grid.size());
  detail::parallel_for(grid.size(), [&](std::size_t i) {
    const double theta = grid.angles[i];
    Complex sum = 0.0;
    for (const Inclusion& inc : scene.inclusions) {
      sum += inc.source_value * rule.integrate(inc.center, inc.radius, [&](Vec2 y) {
               return harmonic_lifting(n, y) * green_neumann_kernel(y, theta);
             });
    }
    out[i] = -sum;
  });
  return out;
}

std::vector<Complex> neumann_data(const Scene& scene, int n, const BoundaryGrid& grid,
                                  const DiskRule& rule) {
  std::vector<Complex> out = neumann_correction(scene, n, grid, rule);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += lifting_neumann_trace(n, grid.angles[i]);
  return out;
}

std::vector<Complex> neumann_correction_point(const Scene& scene, int n,
                                              const BoundaryGrid& grid) {
  std::vector<Complex> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Complex sum = 0.0;
    for (const Inclusion& inc : scene.inclusions) {
      const double area = kPi * inc.radius * inc.radius;
      sum += area * inc.source_value * harmonic_lifting(n, inc.center) *
             green_neumann_kernel(inc.center, grid.angles[i]);
    }
    out[i] = -sum;
  }
  return out;
}

std::vector<Complex> lifting_trace(int n, const BoundaryGrid& grid) {
  std::vector<Complex> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double phase = n * grid.angles[i];
    out[i] = {std::cos(phase), std::sin(phase)};
  }
  return out;
}

std::vector<Complex> lifting_neumann(int n, const BoundaryGrid& grid) {
  std::vector<Complex> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lifting_neumann_trace(n, grid.angles[i]);
  return out;
}

CauchyData cauchy_data(const Scene& scene, int n, const BoundaryGrid& grid) {
  return {grid, lifting_trace(n, grid), neumann_data(scene, n, grid),
          "dot mode " + std::to_string(n)};
}

}  // namespace rgap::diffusion
