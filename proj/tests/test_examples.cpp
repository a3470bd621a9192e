#include <doctest.h>

#include <string>

#include "rgap/config.hpp"

using namespace rgap;

namespace {

RunConfig example(const std::string& name) {
  return load_config(std::string(RGAP_CONFIG_DIR) + "/" + name + ".cfg");
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

TEST_CASE("DSM reference examples localize within three grid spacings") {
  for (int e = 1; e <= 4; ++e) {
    const RunOutput out = execute(example("dsm_example" + std::to_string(e)));
    CAPTURE(e);
    CHECK(out.peaks.complete);
    CHECK(out.peaks.worst_match() <= 3.0 * out.field.grid.spacing());
  }
}

TEST_CASE("DOT reference examples 1-3 localize within three grid spacings") {
  for (int e = 1; e <= 3; ++e) {
    const RunOutput out = execute(example("dot_example" + std::to_string(e)));
    CAPTURE(e);
    CHECK(out.peaks.worst_match() <= 3.0 * out.field.grid.spacing());
  }
}

// Known failure: the 399-node MUSIC grid makes three spacings 0.0151, while
// the fourth example's weakest inclusion lands about 0.028 away (inside the
// 0.03 localization tolerance for that example).
TEST_CASE("DOT reference example 4 localizes within three grid spacings" * doctest::should_fail()) {
  const RunOutput out = execute(example("dot_example4"));
  CHECK(out.peaks.worst_match() <= 3.0 * out.field.grid.spacing());
}

TEST_CASE("noise-free DSM Example 1 is resolved to one grid spacing") {
  RunConfig c = example("dsm_example1");
  c.noise_level = 0.0;
  const RunOutput out = execute(c);
  CHECK(out.peaks.worst_match() <= 0.0102);
}

TEST_CASE("DSM localization degrades monotonically with the noise level") {
  auto mean_distance = [](double level) {
    std::vector<double> d;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      RunConfig c = example("dsm_example1");
      c.noise_level = level;
      c.seed = seed;
      const RunOutput out = execute(c);
      for (double m : out.peaks.matches) d.push_back(m);
    }
    return mean(d);
  };
  CHECK(mean_distance(0.25) >= mean_distance(0.01));
}

TEST_CASE("reference example runs are bit-identical under repetition") {
  const RunConfig c = example("dot_example3");
  const RunOutput a = execute(c);
  const RunOutput b = execute(c);
  CHECK(a.field.values == b.field.values);
  CHECK(a.peaks.peaks == b.peaks.peaks);
  CHECK(a.eigenvalues == b.eigenvalues);
}
