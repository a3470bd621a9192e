#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rgap/experiment.hpp"
#include "rgap/field.hpp"

// Run configuration: a flat text file of `key = value` lines followed by
// repeated `[inclusion]` blocks. `#` starts a comment.
//
//   method = scatter-dsm
//   epsilon = 0.01
//   wavenumber = 25
//   noise_level = 0.01
//   [inclusion]
//   center_x = 0
//   center_y = 0.75
//   rho = 1

namespace rgap {

struct InclusionSpec {
  double center_x = 0.0;
  double center_y = 0.0;
  double rho = 1.0;

  friend bool operator==(const InclusionSpec&, const InclusionSpec&) = default;
};

struct RunConfig {
  Method method = Method::DotMusic;
  double epsilon = 0.01;
  double wavenumber = 25.0;
  int modes = 20;
  int boundary_points = 64;
  int directions = 64;
  double power = 4.0;
  double noise_level = 0.0;
  std::uint64_t seed = 1;
  int grid_nodes = 0;  // resolved per method when 0
  std::string output_dir = "out";
  int peak_count = 0;
  double min_separation = kDefaultMinSeparation;
  std::vector<InclusionSpec> inclusions;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

std::optional<Method> parse_method(std::string_view name);

/// Parses config text. `expected` (from the CLI subcommand) supplies the
/// method when the file has none and must agree with it otherwise.
/// Throws Error(Config) naming the offending line.
RunConfig parse_config(std::string_view text, std::optional<Method> expected = std::nullopt);

RunConfig load_config(const std::filesystem::path& path,
                      std::optional<Method> expected = std::nullopt);

/// Fills method-dependent defaults (grid_nodes) and checks value ranges.
RunConfig resolve(RunConfig config);

Scene scene_of(const RunConfig& config);
DotExperimentConfig dot_config(const RunConfig& config);
ScatterExperimentConfig scatter_config(const RunConfig& config);

/// Every resolved value, for the `params` block of the peak report.
nlohmann::json config_to_params(const RunConfig& config);
RunConfig config_from_params(const nlohmann::json& params);

struct RunOutput {
  RunConfig config;
  ImagingField field;
  PeakReport peaks;
  std::vector<double> eigenvalues;  // MUSIC only
  int rank = -1;                    // MUSIC only
};

RunOutput execute(const RunConfig& config);

/// `x,y,value` header, row-major over the grid, %.17g, LF endings.
void write_field_csv(std::ostream& out, const ImagingField& field);
nlohmann::json peaks_json(const RunOutput& output);
/// Binary P5 8-bit, 255 at the field maximum, row 0 at y = +1.
void write_pgm(std::ostream& out, const ImagingField& field);

struct OutputPaths {
  std::filesystem::path field_csv;
  std::filesystem::path peaks_json;
  std::filesystem::path heatmap;
};

OutputPaths write_outputs(const RunOutput& output, const std::filesystem::path& directory);

}  // namespace rgap
