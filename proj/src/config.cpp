#include "rgap/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace rgap {
namespace {

[[noreturn]] void config_error(int line, const std::string& what) {
  throw Error(ErrorKind::Config, line > 0 ? "line " + std::to_string(line) + ": " + what : what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(std::string_view text, int line, std::string_view key) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    config_error(line, "key '" + std::string(key) + "': '" + std::string(text) + "' is not a number");
  }
  return value;
}

template <class Int>
Int to_integer(std::string_view text, int line, std::string_view key) {
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    config_error(line, "key '" + std::string(key) + "': '" + std::string(text) + "' is not an integer");
  }
  return value;
}

const std::set<std::string, std::less<>> kGlobalKeys = {
    "method", "epsilon", "wavenumber", "modes", "boundary_points", "directions", "power",
    "noise_level", "seed", "grid_nodes", "output_dir", "peak_count", "min_separation"};
const std::set<std::string, std::less<>> kInclusionKeys = {"center_x", "center_y", "rho"};

void set_global(RunConfig& c, std::string_view key, std::string_view value, int line,
                std::optional<Method> expected) {
  if (key == "method") {
    const auto m = parse_method(value);
    if (!m) config_error(line, "unknown method '" + std::string(value) + "'");
    if (expected && *expected != *m) {
      config_error(line, "config method '" + std::string(value) + "' does not match subcommand '" +
                             method_name(*expected) + "'");
    }
    c.method = *m;
  } else if (key == "epsilon") {
    c.epsilon = to_double(value, line, key);
  } else if (key == "wavenumber") {
    c.wavenumber = to_double(value, line, key);
  } else if (key == "modes") {
    c.modes = to_integer<int>(value, line, key);
  } else if (key == "boundary_points") {
    c.boundary_points = to_integer<int>(value, line, key);
  } else if (key == "directions") {
    c.directions = to_integer<int>(value, line, key);
  } else if (key == "power") {
    c.power = to_double(value, line, key);
  } else if (key == "noise_level") {
    c.noise_level = to_double(value, line, key);
  } else if (key == "seed") {
    c.seed = to_integer<std::uint64_t>(value, line, key);
  } else if (key == "grid_nodes") {
    c.grid_nodes = to_integer<int>(value, line, key);
  } else if (key == "output_dir") {
    if (value.empty()) config_error(line, "output_dir is empty");
    c.output_dir = std::string(value);
  } else if (key == "peak_count") {
    c.peak_count = to_integer<int>(value, line, key);
  } else if (key == "min_separation") {
    c.min_separation = to_double(value, line, key);
  }
}

void check_ranges(const RunConfig& c) {
  if (!(c.epsilon > 0.0)) config_error(0, "epsilon must be positive");
  if (c.method == Method::ScatterDsm && !(c.wavenumber > 0.0)) {
    config_error(0, "wavenumber must be positive for scatter-dsm");
  }
  if (c.modes < 1) config_error(0, "modes must be >= 1");
  if (c.boundary_points < 4) config_error(0, "boundary_points must be >= 4");
  if (c.directions < 4) config_error(0, "directions must be >= 4");
  if (!(c.power > 0.0)) config_error(0, "power must be positive");
  if (!(c.noise_level >= 0.0 && c.noise_level < 1.0)) config_error(0, "noise_level must lie in [0, 1)");
  if (c.grid_nodes < 3) config_error(0, "grid_nodes must be >= 3");
  if (c.peak_count < 0) config_error(0, "peak_count must be >= 0");
  if (!(c.min_separation > 0.0)) config_error(0, "min_separation must be positive");
}

}  // namespace

std::optional<Method> parse_method(std::string_view name) {
  if (name == "dot-music") return Method::DotMusic;
  if (name == "scatter-dsm") return Method::ScatterDsm;
  return std::nullopt;
}

RunConfig parse_config(std::string_view text, std::optional<Method> expected) {
  RunConfig config;
  if (expected) config.method = *expected;
  bool method_seen = expected.has_value();
  std::set<std::string, std::less<>> seen_global;
  std::set<std::string, std::less<>> seen_inclusion;
  bool in_inclusion = false;
  int block_line = 0;
  const auto close_block = [&] {
    if (!in_inclusion) return;
    for (const char* required : {"center_x", "center_y"}) {
      if (!seen_inclusion.contains(required)) {
        config_error(block_line, "[inclusion] block lacks '" + std::string(required) + "'");
      }
    }
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '[') {
      if (line != "[inclusion]") config_error(line_no, "unknown section '" + std::string(line) + "'");
      close_block();
      block_line = line_no;
      config.inclusions.push_back({});
      seen_inclusion.clear();
      in_inclusion = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) config_error(line_no, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (value.empty()) config_error(line_no, "key '" + std::string(key) + "' has no value");

    if (kInclusionKeys.contains(key)) {
      if (!in_inclusion) config_error(line_no, "'" + std::string(key) + "' outside an [inclusion] block");
      if (!seen_inclusion.insert(std::string(key)).second) {
        config_error(line_no, "duplicate key '" + std::string(key) + "' in [inclusion] block");
      }
      InclusionSpec& inc = config.inclusions.back();
      const double v = to_double(value, line_no, key);
      if (key == "center_x") inc.center_x = v;
      else if (key == "center_y") inc.center_y = v;
      else inc.rho = v;
    } else if (kGlobalKeys.contains(key)) {
      if (in_inclusion) {
        config_error(line_no, "global key '" + std::string(key) + "' inside an [inclusion] block");
      }
      if (!seen_global.insert(std::string(key)).second) {
        config_error(line_no, "duplicate key '" + std::string(key) + "'");
      }
      set_global(config, key, value, line_no, expected);
      if (key == "method") method_seen = true;
    } else {
      config_error(line_no, "unknown key '" + std::string(key) + "'");
    }
    if (end == text.size()) break;
  }
  close_block();
  if (!method_seen) config_error(0, "no method given (set 'method' or use a subcommand)");
  return resolve(config);
}

RunConfig load_config(const std::filesystem::path& path, std::optional<Method> expected) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Config, "cannot open config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_config(buffer.str(), expected);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

RunConfig resolve(RunConfig config) {
  if (config.grid_nodes == 0) config.grid_nodes = config.method == Method::DotMusic ? 399 : 199;
  check_ranges(config);
  return config;
}

Scene scene_of(const RunConfig& config) {
  Scene scene;
  scene.epsilon = config.epsilon;
  scene.wavenumber = config.method == Method::ScatterDsm ? config.wavenumber : 0.0;
  for (const InclusionSpec& inc : config.inclusions) {
    scene.inclusions.push_back({{inc.center_x, inc.center_y}, config.epsilon, inc.rho});
  }
  return scene;
}

DotExperimentConfig dot_config(const RunConfig& c) {
  DotExperimentConfig d;
  d.scene = scene_of(c);
  d.modes = c.modes;
  d.boundary_points = c.boundary_points;
  d.noise = {c.noise_level, c.seed, 0};
  d.grid_nodes = c.grid_nodes;
  d.peak_count = c.peak_count;
  d.min_separation = c.min_separation;
  return d;
}

ScatterExperimentConfig scatter_config(const RunConfig& c) {
  ScatterExperimentConfig s;
  s.scene = scene_of(c);
  s.boundary_points = c.boundary_points;
  s.directions = c.directions;
  s.power = c.power;
  s.noise = {c.noise_level, c.seed, 0};
  s.grid_nodes = c.grid_nodes;
  s.peak_count = c.peak_count;
  s.min_separation = c.min_separation;
  return s;
}

nlohmann::json config_to_params(const RunConfig& c) {
  nlohmann::json j;
  j["method"] = method_name(c.method);
  j["epsilon"] = c.epsilon;
  j["wavenumber"] = c.wavenumber;
  j["modes"] = c.modes;
  j["boundary_points"] = c.boundary_points;
  j["directions"] = c.directions;
  j["power"] = c.power;
  j["noise_level"] = c.noise_level;
  j["seed"] = c.seed;
  j["grid_nodes"] = c.grid_nodes;
  j["output_dir"] = c.output_dir;
  j["peak_count"] = c.peak_count;
  j["min_separation"] = c.min_separation;
  j["inclusions"] = nlohmann::json::array();
  for (const InclusionSpec& inc : c.inclusions) {
    j["inclusions"].push_back({{"center_x", inc.center_x}, {"center_y", inc.center_y}, {"rho", inc.rho}});
  }
  return j;
}

RunConfig config_from_params(const nlohmann::json& j) {
  try {
    RunConfig c;
    const auto method = parse_method(j.at("method").get<std::string>());
    if (!method) config_error(0, "params: unknown method");
    c.method = *method;
    c.epsilon = j.at("epsilon").get<double>();
    c.wavenumber = j.at("wavenumber").get<double>();
    c.modes = j.at("modes").get<int>();
    c.boundary_points = j.at("boundary_points").get<int>();
    c.directions = j.at("directions").get<int>();
    c.power = j.at("power").get<double>();
    c.noise_level = j.at("noise_level").get<double>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.grid_nodes = j.at("grid_nodes").get<int>();
    c.output_dir = j.at("output_dir").get<std::string>();
    c.peak_count = j.at("peak_count").get<int>();
    c.min_separation = j.at("min_separation").get<double>();
    for (const auto& inc : j.at("inclusions")) {
      c.inclusions.push_back({inc.at("center_x").get<double>(), inc.at("center_y").get<double>(),
                              inc.at("rho").get<double>()});
    }
    return resolve(c);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Config, std::string("params: ") + e.what());
  }
}

RunOutput execute(const RunConfig& config) {
  RunOutput out;
  out.config = resolve(config);
  try {
    validate_scene(scene_of(out.config));
  } catch (const Error& e) {
    throw Error(ErrorKind::Config, std::string("scene: ") + e.what());
  }
  if (out.config.method == Method::DotMusic) {
    DotRun run = run_dot_experiment(dot_config(out.config));
    out.field = std::move(run.field);
    out.peaks = std::move(run.peaks);
    out.eigenvalues = run.decomposition.eigenvalues;
    out.rank = run.decomposition.rank;
  } else {
    ScatterRun run = run_scatter_experiment(scatter_config(out.config));
    out.field = std::move(run.field);
    out.peaks = std::move(run.peaks);
  }
  return out;
}

}  // namespace rgap
