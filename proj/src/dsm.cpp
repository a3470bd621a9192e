#include "rgap/dsm.hpp"

#include <algorithm>
#include <string>

#include "parallel.hpp"
#include "rgap/forward_helmholtz.hpp"
#include "rgap/quadrature.hpp"
#include "rgap/specfun.hpp"

namespace rgap::dsm {

Vec2 direction(int l, int count) {
  const double angle = kTwoPi * l / count;
  return {std::cos(angle), std::sin(angle)};
}

std::vector<Complex> rgf_direction_profile(const CauchyData& data, double k, int directions) {
  if (!(k > 0.0)) throw Error(ErrorKind::InvalidArgument, "direct sampling needs k > 0");
  if (directions < 4) {
    throw Error(ErrorKind::InvalidArgument,
                "direct sampling needs at least 4 directions, got " + std::to_string(directions));
  }
  check_cauchy_data(data);
  std::vector<Complex> profile(static_cast<std::size_t>(directions));
  rgap::detail::parallel_for(profile.size(), [&](std::size_t l) {
    const Vec2 d = direction(static_cast<int>(l), directions);
    profile[l] = reciprocity_gap(data, helmholtz::plane_wave_trace(k, d, data.grid),
                                 helmholtz::plane_wave_neumann_trace(k, d, data.grid));
  });
  return profile;
}

Complex dsm_pairing(std::span<const Complex> profile, double k, Vec2 z) {
  const int count = static_cast<int>(profile.size());
  std::vector<Complex> terms(profile.size());
  for (int l = 0; l < count; ++l) {
    const double phase = -k * dot(z, direction(l, count));
    terms[static_cast<std::size_t>(l)] =
        profile[static_cast<std::size_t>(l)] * Complex(std::cos(phase), std::sin(phase));
  }
  return (kTwoPi / count) * pairwise_sum(terms);
}

double dsm_raw(std::span<const Complex> profile, double k, Vec2 z) {
  return std::abs(dsm_pairing(profile, k, z));
}

ImagingField dsm_raw_field(std::span<const Complex> profile, double k, const SamplingGrid& grid) {
  ImagingField field{grid, std::vector<double>(grid.size(), 0.0), Method::ScatterDsm, {}};
  field.params.wavenumber = k;
  field.params.directions = static_cast<int>(profile.size());
  rgap::detail::parallel_for(grid.size(), [&](std::size_t n) {
    if (grid.inside(n)) field.values[n] = dsm_raw(profile, k, grid.node(n));
  });
  return field;
}

ImagingField dsm_field(const CauchyData& data, double k, const SamplingGrid& grid, double power,
                       int directions) {
  if (!(power > 0.0)) throw Error(ErrorKind::InvalidArgument, "power p must be positive");
  const std::vector<Complex> profile = rgf_direction_profile(data, k, directions);
  ImagingField field = dsm_raw_field(profile, k, grid);
  const double peak = field.max_value();
  if (!(peak > 0.0)) throw Error(ErrorKind::Numerical, "degenerate data (raw indicator is zero)");
  for (double& v : field.values) v = std::pow(v / peak, power);
  field.params.power = power;
  return field;
}

double funk_hecke_reference(double k, double r) { return kTwoPi * specfun::bessel_j(0, k * r); }

}  // namespace rgap::dsm
