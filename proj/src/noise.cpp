#include "rgap/noise.hpp"

#include <random>
#include <string>

namespace rgap {

std::vector<double> noise_factors(std::size_t count, const NoiseSpec& spec) {
  // mt19937_64 is fully specified by the standard; the uniform mapping is
  // done by hand because std::uniform_real_distribution is not.
  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                    static_cast<std::uint32_t>(spec.stream),
                    static_cast<std::uint32_t>(spec.stream >> 32)};
  std::mt19937_64 engine(seq);
  std::vector<double> eta(count);
  for (double& e : eta) {
    const double unit = static_cast<double>(engine() >> 11) * 0x1.0p-53;  // [0, 1)
    e = 2.0 * unit - 1.0;
  }
  return eta;
}

std::vector<Complex> add_noise(std::span<const Complex> values, const NoiseSpec& spec) {
  if (!(spec.level >= 0.0 && spec.level < 1.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "noise level must lie in [0, 1), got " + std::to_string(spec.level));
  }
  std::vector<Complex> out(values.begin(), values.end());
  if (spec.level == 0.0) return out;
  const std::vector<double> eta = noise_factors(values.size(), spec);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= 1.0 + spec.level * eta[i];
  return out;
}

}  // namespace rgap
