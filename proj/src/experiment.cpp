#include "rgap/experiment.hpp"

#include "rgap/dsm.hpp"
#include "rgap/forward_helmholtz.hpp"

namespace rgap {
namespace {

template <class F>
auto stage(const char* name, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(name, e.kind(), e.what());
  }
}

}  // namespace

DotRun run_dot_experiment(const DotExperimentConfig& config) {
  const Scene scene = stage("validate", [&] { return validate_scene(config.scene); });
  const BoundaryGrid grid = stage("grid", [&] { return make_boundary_grid(config.boundary_points); });
  if (config.noise.level >= 1.0 || config.noise.level < 0.0) {
    throw StageError("noise", ErrorKind::InvalidArgument, "noise level must lie in [0, 1)");
  }
  DotRun run;
  run.response = stage("forward", [&] {
    return music::assemble_response(scene, config.modes, grid, config.noise);
  });
  run.decomposition = stage("decompose", [&] { return music::decompose(run.response); });
  run.field = stage("imaging", [&] {
    return music::music_field(run.decomposition, SamplingGrid(config.grid_nodes));
  });
  run.field.params.modes = config.modes;
  run.field.params.noise_level = config.noise.level;
  run.field.params.seed = config.noise.seed;
  const std::vector<Vec2> truth = centers_of(scene);
  run.peaks = stage("peaks", [&] {
    const int count = config.peak_count > 0 ? config.peak_count : run.decomposition.rank;
    return find_peaks(run.field, count, config.min_separation, truth);
  });
  return run;
}

CauchyData noisy_scattering_data(const CauchyData& clean, const NoiseSpec& noise) {
  CauchyData noisy = clean;
  NoiseSpec dirichlet = noise;
  dirichlet.stream = 0;
  NoiseSpec neumann = noise;
  neumann.stream = 1;
  noisy.dirichlet = add_noise(clean.dirichlet, dirichlet);
  noisy.neumann = add_noise(clean.neumann, neumann);
  return noisy;
}

ScatterRun run_scatter_experiment(const ScatterExperimentConfig& config) {
  const Scene scene = stage("validate", [&] { return validate_scene(config.scene); });
  if (!(scene.wavenumber > 0.0)) {
    throw StageError("validate", ErrorKind::InvalidArgument, "scattering run needs wavenumber > 0");
  }
  const BoundaryGrid grid = stage("grid", [&] { return make_boundary_grid(config.boundary_points); });
  ScatterRun run;
  const CauchyData clean = stage("forward", [&] { return helmholtz::cauchy_data(scene, grid); });
  run.data = stage("noise", [&] { return noisy_scattering_data(clean, config.noise); });
  run.field = stage("imaging", [&] {
    return dsm::dsm_field(run.data, scene.wavenumber, SamplingGrid(config.grid_nodes), config.power,
                          config.directions);
  });
  run.field.params.noise_level = config.noise.level;
  run.field.params.seed = config.noise.seed;
  const std::vector<Vec2> truth = centers_of(scene);
  run.peaks = stage("peaks", [&] {
    const int count =
        config.peak_count > 0 ? config.peak_count : std::max<int>(1, static_cast<int>(truth.size()));
    return find_peaks(run.field, count, config.min_separation, truth);
  });
  return run;
}

}  // namespace rgap
