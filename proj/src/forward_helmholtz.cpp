#include "rgap/forward_helmholtz.hpp"

#include "parallel.hpp"
#include "rgap/specfun.hpp"

namespace rgap::helmholtz {
namespace {

void check_scene(const Scene& scene) {
  if (!(scene.wavenumber > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "scattering model needs a positive wavenumber");
  }
}

void check_on_boundary(Vec2 z) {
  if (std::abs(norm(z) - 1.0) > 1e-12) {
    throw Error(ErrorKind::Domain, "evaluation point is not on the unit circle");
  }
}

void check_direction(Vec2 d) {
  if (std::abs(norm(d) - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidArgument, "plane wave direction must be a unit vector");
  }
}

}  // namespace

namespace detail {

Complex scattered_field_at(const Scene& scene, Vec2 x, const DiskRule& rule) {
  check_scene(scene);
  const double k = scene.wavenumber;
  Complex sum = 0.0;
  for (const Inclusion& inc : scene.inclusions) {
    sum += inc.source_value * rule.integrate(inc.center, inc.radius, [&](Vec2 y) {
             return specfun::hankel1(0, k * distance(x, y));
           });
  }
  return -Complex(0.0, 0.25) * sum;
}

}  // namespace detail

Complex scattered_field(const Scene& scene, Vec2 z, const DiskRule& rule) {
  check_on_boundary(z);
  return detail::scattered_field_at(scene, z, rule);
}

Complex scattered_neumann(const Scene& scene, Vec2 z, const DiskRule& rule) {
  check_scene(scene);
  check_on_boundary(z);
  const double k = scene.wavenumber;
  Complex sum = 0.0;
  for (const Inclusion& inc : scene.inclusions) {
    sum += inc.source_value * rule.integrate(inc.center, inc.radius, [&](Vec2 y) {
             const double r = distance(z, y);
             return specfun::hankel1(1, k * r) * ((1.0 - dot(z, y)) / r);
           });
  }
  return Complex(0.0, 0.25 * k) * sum;
}

CauchyData cauchy_data(const Scene& scene, const BoundaryGrid& grid, const DiskRule& rule) {
  CauchyData data{grid, std::vector<Complex>(grid.size()), std::vector<Complex>(grid.size()),
                  "scattering"};
  rgap::detail::parallel_for(grid.size(), [&](std::size_t i) {
    data.dirichlet[i] = scattered_field(scene, grid.points[i], rule);
    data.neumann[i] = scattered_neumann(scene, grid.points[i], rule);
  });
  return data;
}

Complex plane_wave(double k, Vec2 direction, Vec2 z) {
  check_direction(direction);
  const double phase = k * dot(z, direction);
  return {std::cos(phase), std::sin(phase)};
}

Complex plane_wave_neumann(double k, Vec2 direction, Vec2 z) {
  return Complex(0.0, k * dot(direction, z)) * plane_wave(k, direction, z);
}

std::vector<Complex> plane_wave_trace(double k, Vec2 direction, const BoundaryGrid& grid) {
  std::vector<Complex> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = plane_wave(k, direction, grid.points[i]);
  return out;
}

std::vector<Complex> plane_wave_neumann_trace(double k, Vec2 direction, const BoundaryGrid& grid) {
  std::vector<Complex> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = plane_wave_neumann(k, direction, grid.points[i]);
  }
  return out;
}

Complex source_moment(const Scene& scene, double k, Vec2 direction, const DiskRule& rule) {
  check_direction(direction);
  Complex sum = 0.0;
  for (const Inclusion& inc : scene.inclusions) {
    sum += inc.source_value *
           rule.integrate(inc.center, inc.radius, [&](Vec2 y) { return plane_wave(k, direction, y); });
  }
  return sum;
}

}  // namespace rgap::helmholtz
