#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rgap/geometry.hpp"

namespace rgap {

enum class Method { DotMusic, ScatterDsm };

const char* method_name(Method method);

/// Run metadata carried with an imaging field.
struct RunParameters {
  int modes = 0;            // MUSIC order N
  double wavenumber = 0.0;  // DSM k
  double power = 0.0;       // DSM p
  int directions = 0;       // DSM probe directions
  double noise_level = 0.0;
  std::uint64_t seed = 0;
};

/// One nonnegative indicator value per sampling node; nodes outside the
/// unit disk hold 0.
struct ImagingField {
  SamplingGrid grid{2};
  std::vector<double> values;
  Method method = Method::DotMusic;
  RunParameters params;

  double max_value() const;
};

}  // namespace rgap
