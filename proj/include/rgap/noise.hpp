#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rgap/types.hpp"

namespace rgap {

/// Relative multiplicative noise of level delta. The realization is a pure
/// function of (seed, stream): equal specs give bit-identical noise.
struct NoiseSpec {
  double level = 0.0;
  std::uint64_t seed = 1;
  std::uint64_t stream = 0;

  friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;
};

/// values[i] * (1 + level * eta_i), eta_i uniform on [-1, 1] drawn in index
/// order. level == 0 returns the input unchanged.
std::vector<Complex> add_noise(std::span<const Complex> values, const NoiseSpec& spec);

/// The eta_i sequence used by add_noise.
std::vector<double> noise_factors(std::size_t count, const NoiseSpec& spec);

}  // namespace rgap
