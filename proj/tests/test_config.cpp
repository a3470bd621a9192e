#include <doctest.h>

#include <fstream>
#include <sstream>

#include "rgap/config.hpp"

using namespace rgap;

namespace {

constexpr const char* kDsm = R"(# two sources
method = scatter-dsm
epsilon = 0.01
wavenumber = 25
noise_level = 0.01
seed = 7
grid_nodes = 41

[inclusion]
center_x = 0
center_y = 0.75

[inclusion]
center_x = 0.5   # trailing comment
center_y = 0
rho = 1.5
)";

std::string error_of(std::string_view text, std::optional<Method> m = std::nullopt) {
  try {
    parse_config(text, m);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Config);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse a complete config") {
  const RunConfig c = parse_config(kDsm);
  CHECK(c.method == Method::ScatterDsm);
  CHECK(c.seed == 7);
  CHECK(c.grid_nodes == 41);
  CHECK(c.boundary_points == 64);
  CHECK(c.directions == 64);
  CHECK(c.power == 4.0);
  REQUIRE(c.inclusions.size() == 2);
  CHECK(c.inclusions[0] == InclusionSpec{0.0, 0.75, 1.0});
  CHECK(c.inclusions[1] == InclusionSpec{0.5, 0.0, 1.5});
}

TEST_CASE("method-dependent grid default") {
  CHECK(parse_config("method = dot-music\n").grid_nodes == 399);
  CHECK(parse_config("method = scatter-dsm\n").grid_nodes == 199);
  CHECK(parse_config("", Method::DotMusic).grid_nodes == 399);
}

TEST_CASE("config errors name the line") {
  CHECK(error_of("method = dot-music\nepsilom = 0.1\n").find("line 2: unknown key 'epsilom'") != std::string::npos);
  CHECK(error_of("method = dot-music\nmodes = 4\nmodes = 5\n").find("line 3: duplicate") != std::string::npos);
  CHECK(error_of("method = dot-music\ncenter_x = 0\n").find("outside an [inclusion]") != std::string::npos);
  CHECK(error_of("method = dot-music\n[inclusion]\ncenter_x = 0\ncenter_y = 0\nseed = 3\n").find("inside an [inclusion]") != std::string::npos);
  CHECK(error_of("method = dot-music\n[inclusion]\ncenter_x = 0\n").find("lacks 'center_y'") != std::string::npos);
  CHECK(error_of("method = dot-music\n[inclusions]\n").find("unknown section") != std::string::npos);
  CHECK(error_of("method = dot-music\nepsilon = 1e-2x\n").find("not a number") != std::string::npos);
  CHECK(error_of("method = dot-music\nmodes = 2.5\n").find("not an integer") != std::string::npos);
  CHECK(error_of("method = dot-music\nmodes\n").find("key = value") != std::string::npos);
  CHECK(error_of("method = dot-music\nmodes = \n").find("no value") != std::string::npos);
  CHECK(error_of("method = music\n").find("unknown method") != std::string::npos);
  CHECK(error_of("epsilon = 0.1\n").find("no method") != std::string::npos);
  CHECK(error_of("method = dot-music\n", Method::ScatterDsm).find("does not match") != std::string::npos);
  CHECK(error_of("method = dot-music\nnoise_level = 1\n").find("noise_level") != std::string::npos);
  CHECK(error_of("method = dot-music\nepsilon = -1\n").find("epsilon") != std::string::npos);
}

TEST_CASE("missing file is named") {
  try {
    load_config("/nonexistent/run.cfg");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Config);
    CHECK(std::string(e.what()).find("/nonexistent/run.cfg") != std::string::npos);
  }
}

TEST_CASE("invalid scene is a config error at execution") {
  RunConfig c = parse_config("method = dot-music\n[inclusion]\ncenter_x = 0.999\ncenter_y = 0\n");
  try {
    execute(c);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Config);
    CHECK(std::string(e.what()).find("touches boundary") != std::string::npos);
  }
}

TEST_CASE("params round trip reproduces the run bit for bit") {
  const RunConfig c = parse_config(kDsm);
  const RunOutput first = execute(c);
  const nlohmann::json report = peaks_json(first);
  const RunConfig back = config_from_params(nlohmann::json::parse(report.dump())["params"]);
  CHECK(back == c);
  const RunOutput second = execute(back);
  CHECK(second.field.values == first.field.values);
  CHECK(second.peaks.peaks == first.peaks.peaks);
  CHECK_THROWS_AS(config_from_params(nlohmann::json::object()), Error);
}

TEST_CASE("peak report contents") {
  const RunConfig dot = parse_config(
      "method = dot-music\nnoise_level = 0.05\ngrid_nodes = 101\n"
      "[inclusion]\ncenter_x = -0.25\ncenter_y = 0.25\n[inclusion]\ncenter_x = 0.25\ncenter_y = -0.25\n");
  const RunOutput out = execute(dot);
  const nlohmann::json j = peaks_json(out);
  CHECK(j["method"] == "dot-music");
  CHECK(j["rank"] == 2);
  CHECK(j["eigenvalues"].size() == 21);
  CHECK(j["params"]["seed"] == 1);
  CHECK(j["params"]["boundary_points"] == 64);
  CHECK(j["peaks"].size() == 2);
  CHECK(j["peaks"][0].contains("x"));
  CHECK(j["peaks"][0].contains("value"));
  CHECK(j["truth_match"]["centers"].size() == 2);
  CHECK(j["truth_match"]["worst"].get<double>() < 0.03);

  const nlohmann::json s = peaks_json(execute(parse_config(kDsm)));
  CHECK_FALSE(s.contains("rank"));
  CHECK_FALSE(s.contains("eigenvalues"));
}

TEST_CASE("CSV and PGM layout") {
  const RunOutput out = execute(parse_config(kDsm));
  std::ostringstream csv;
  write_field_csv(csv, out.field);
  const std::string text = csv.str();
  CHECK(text.rfind("x,y,value\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 41 * 41 + 1);
  CHECK(text.find('\r') == std::string::npos);
  // Second row: x advances first, %.17g.
  std::istringstream lines(text);
  std::string header, row0, row1;
  std::getline(lines, header);
  std::getline(lines, row0);
  std::getline(lines, row1);
  CHECK(row0 == "-1,-1,0");
  CHECK(row1 == "-0.94999999999999996,-1,0");

  std::ostringstream pgm;
  write_pgm(pgm, out.field);
  const std::string img = pgm.str();
  const std::string head = "P5\n41 41\n255\n";
  REQUIRE(img.rfind(head, 0) == 0);
  REQUIRE(img.size() == head.size() + 41 * 41);
  const auto* px = reinterpret_cast<const unsigned char*>(img.data() + head.size());
  CHECK(*std::max_element(px, px + 41 * 41) == 255);
  // The brightest pixel sits at the field maximum, with row 0 at y = +1.
  std::size_t best = 0;
  for (std::size_t k = 0; k < out.field.values.size(); ++k)
    if (out.field.values[k] > out.field.values[best]) best = k;
  const std::size_t i = best % 41;
  const std::size_t j = best / 41;
  CHECK(px[(40 - j) * 41 + i] == 255);
}

TEST_CASE("write_outputs creates the three files") {
  const auto dir = std::filesystem::temp_directory_path() / "rgap_test_outputs" / "nested";
  std::filesystem::remove_all(dir.parent_path());
  const OutputPaths p = write_outputs(execute(parse_config(kDsm)), dir);
  CHECK(std::filesystem::exists(p.field_csv));
  CHECK(std::filesystem::exists(p.peaks_json));
  CHECK(std::filesystem::file_size(p.heatmap) == 13 + 41 * 41);
  std::ifstream in(p.peaks_json);
  const auto parsed = nlohmann::json::parse(in);
  CHECK(parsed.contains("peaks"));
  std::filesystem::remove_all(dir.parent_path());
}
