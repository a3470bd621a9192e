#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "rgap/config.hpp"

namespace rgap {
namespace {

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "write failed for '" + path.string() + "'");
}

}  // namespace

void write_field_csv(std::ostream& out, const ImagingField& field) {
  const int n = field.grid.nodes_per_axis();
  out << "x,y,value\n";
  std::string line;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Vec2 z = field.grid.node(i, j);
      const std::size_t flat = static_cast<std::size_t>(j) * n + i;
      line = format17(z.x);
      line += ',';
      line += format17(z.y);
      line += ',';
      line += format17(field.values[flat]);
      line += '\n';
      out << line;
    }
  }
}

nlohmann::json peaks_json(const RunOutput& output) {
  nlohmann::json j;
  j["method"] = method_name(output.config.method);
  j["params"] = config_to_params(output.config);
  if (output.config.method == Method::DotMusic) {
    j["eigenvalues"] = output.eigenvalues;
    j["rank"] = output.rank;
  }
  nlohmann::json peaks = nlohmann::json::array();
  for (const Peak& p : output.peaks.peaks) {
    peaks.push_back({{"x", p.location.x}, {"y", p.location.y}, {"value", p.value}});
  }
  j["peaks"] = std::move(peaks);
  nlohmann::json truth = nlohmann::json::array();
  for (std::size_t t = 0; t < output.config.inclusions.size(); ++t) {
    const InclusionSpec& inc = output.config.inclusions[t];
    const double d = t < output.peaks.matches.size() ? output.peaks.matches[t] : INFINITY;
    truth.push_back({{"x", inc.center_x}, {"y", inc.center_y},
                     {"distance", std::isfinite(d) ? nlohmann::json(d) : nlohmann::json(nullptr)}});
  }
  j["truth_match"] = {{"centers", std::move(truth)},
                      {"worst", output.peaks.worst_match()},
                      {"complete", output.peaks.complete}};
  return j;
}

void write_pgm(std::ostream& out, const ImagingField& field) {
  const int n = field.grid.nodes_per_axis();
  const double max = field.max_value();
  out << "P5\n" << n << ' ' << n << "\n255\n";
  std::vector<unsigned char> row(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const int j = n - 1 - r;  // row 0 is y = +1
    for (int i = 0; i < n; ++i) {
      const double v = field.values[static_cast<std::size_t>(j) * n + i];
      const double scaled = max > 0.0 ? 255.0 * v / max : 0.0;
      row[static_cast<std::size_t>(i)] =
          static_cast<unsigned char>(std::clamp(std::lround(scaled), 0L, 255L));
    }
    out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
  }
}

OutputPaths write_outputs(const RunOutput& output, const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create '" + directory.string() + "': " + ec.message());
  OutputPaths paths{directory / "field.csv", directory / "peaks.json", directory / "heatmap.pgm"};

  auto csv = open_output(paths.field_csv);
  write_field_csv(csv, output.field);
  finish(csv, paths.field_csv);

  auto json = open_output(paths.peaks_json);
  json << peaks_json(output).dump(2) << '\n';
  finish(json, paths.peaks_json);

  auto pgm = open_output(paths.heatmap);
  write_pgm(pgm, output.field);
  finish(pgm, paths.heatmap);
  return paths;
}

}  // namespace rgap
