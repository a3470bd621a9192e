#pragma once

#include <span>
#include <vector>

#include "rgap/field.hpp"
#include "rgap/geometry.hpp"
#include "rgap/music.hpp"
#include "rgap/noise.hpp"
#include "rgap/reciprocity.hpp"

namespace rgap {

struct Peak {
  Vec2 location;
  double value = 0.0;

  friend bool operator==(const Peak&, const Peak&) = default;
};

struct PeakReport {
  std::vector<Peak> peaks;     // descending by value
  std::vector<double> matches; // per true center: distance to the nearest peak
  bool complete = true;        // false when fewer than the requested peaks exist

  /// Largest entry of matches (0 when there is no truth).
  double worst_match() const;
};

inline constexpr double kDefaultMinSeparation = 0.05;

/// Strict local maxima over the 8-neighbourhood among in-disk nodes, picked
/// greedily by descending value with suppression radius min_sep.
PeakReport find_peaks(const ImagingField& field, int count, double min_sep,
                      std::span<const Vec2> truth = {});

std::vector<Vec2> centers_of(const Scene& scene);

struct DotExperimentConfig {
  Scene scene;
  int modes = 20;
  int boundary_points = 64;
  NoiseSpec noise;
  int grid_nodes = 399;
  int peak_count = 0;  // 0: use the estimated rank
  double min_separation = kDefaultMinSeparation;
};

struct DotRun {
  music::ResponseMatrix response;
  music::SubspaceDecomposition decomposition;
  ImagingField field;
  PeakReport peaks;
};

/// forward data -> noise -> F -> F F^* eigen-decomposition -> W_MUSIC -> peaks.
/// Errors are rethrown as StageError naming the failing stage.
DotRun run_dot_experiment(const DotExperimentConfig& config);

struct ScatterExperimentConfig {
  Scene scene;
  int boundary_points = 64;
  int directions = 64;
  double power = 4.0;
  NoiseSpec noise;
  int grid_nodes = 199;
  int peak_count = 0;  // 0: number of inclusions
  double min_separation = kDefaultMinSeparation;
};

struct ScatterRun {
  CauchyData data;  // noisy data actually imaged
  ImagingField field;
  PeakReport peaks;
};

/// One Cauchy pair -> independent noise on both traces -> W_DIRECT -> peaks.
ScatterRun run_scatter_experiment(const ScatterExperimentConfig& config);

/// Noisy scattering data: Dirichlet trace on stream 0, Neumann on stream 1.
CauchyData noisy_scattering_data(const CauchyData& clean, const NoiseSpec& noise);

}  // namespace rgap
