#pragma once

#include <span>
#include <vector>

#include "rgap/field.hpp"
#include "rgap/reciprocity.hpp"
#include "rgap/types.hpp"

// Direct sampling from a single Cauchy pair: probe the data with plane waves
// e^{ik x.y_l} over equally spaced directions y_l, then pair the resulting
// profile back against e^{ik z.y_l} for every sampling point z.

namespace rgap::dsm {

inline constexpr int kDefaultDirections = 64;
inline constexpr double kDefaultPower = 4.0;

/// y_l = (cos(2 pi l / count), sin(2 pi l / count)).
Vec2 direction(int l, int count);

/// Entry l = R[e^{ik x.y_l}].
std::vector<Complex> rgf_direction_profile(const CauchyData& data, double k, int directions);

/// |(2pi/L) sum_l profile_l e^{-ik z.y_l}|, L = profile.size().
double dsm_raw(std::span<const Complex> profile, double k, Vec2 z);

/// The complex pairing inside dsm_raw, before the modulus.
Complex dsm_pairing(std::span<const Complex> profile, double k, Vec2 z);

/// Raw indicator at every node inside the disk (0 outside).
ImagingField dsm_raw_field(std::span<const Complex> profile, double k, const SamplingGrid& grid);

/// Raw field divided by its maximum and raised to `power`; the maximum is
/// exactly 1. Throws Numerical("degenerate data") when the raw field is 0.
ImagingField dsm_field(const CauchyData& data, double k, const SamplingGrid& grid,
                       double power = kDefaultPower, int directions = kDefaultDirections);

/// 2 pi J0(k r): the integral of e^{ik r d.y} over the unit circle of directions.
double funk_hecke_reference(double k, double r);

}  // namespace rgap::dsm
