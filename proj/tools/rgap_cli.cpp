// Command-line front end over the rgap C API.
//
//   rgap dot-music <config> [--output-dir DIR]
//   rgap scatter-dsm <config> [--output-dir DIR]
//   rgap selftest
//
// Exit status: 0 success, 1 configuration / usage / file error,
// 2 failure inside a numerical stage.

#include <CLI11.hpp>

#include <cstdio>
#include <string>

#include "rgap/rgap.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

int exit_code(rgap_status status) {
  switch (status) {
    case RGAP_OK: return kExitOk;
    case RGAP_CONFIG:
    case RGAP_INVALID_ARGUMENT:
    case RGAP_IO: return kExitConfig;
    default: return kExitNumerical;
  }
}

int report_failure(rgap_status status) {
  const std::string stage = rgap_last_error_stage();
  std::fprintf(stderr, "rgap: %s%s%s: %s\n", rgap_status_name(status), stage.empty() ? "" : " in stage ",
               stage.c_str(), rgap_last_error());
  return exit_code(status);
}

int run_method(const char* method, const std::string& config_path, const std::string& output_dir) {
  rgap_config* config = nullptr;
  rgap_status status = rgap_config_load(config_path.c_str(), method, &config);
  if (status != RGAP_OK) return report_failure(status);
  if (!output_dir.empty()) status = rgap_config_set_output_dir(config, output_dir.c_str());

  rgap_result* result = nullptr;
  if (status == RGAP_OK) status = rgap_run(config, &result);
  if (status == RGAP_OK) status = rgap_result_write(result, rgap_config_output_dir(config));
  if (status != RGAP_OK) {
    const int code = report_failure(status);
    rgap_result_free(result);
    rgap_config_free(config);
    return code;
  }

  std::printf("%s: %zu peaks", method, rgap_result_peak_count(result));
  if (rgap_result_rank(result) >= 0) std::printf(", rank %d", rgap_result_rank(result));
  std::printf(", worst truth distance %.6g\n", rgap_result_worst_match(result));
  for (size_t i = 0; i < rgap_result_peak_count(result); ++i) {
    double x = 0.0, y = 0.0, value = 0.0;
    rgap_result_peak(result, i, &x, &y, &value);
    std::printf("  peak %zu: (%.6f, %.6f) value %.6g\n", i, x, y, value);
  }
  std::printf("outputs written to %s\n", rgap_config_output_dir(config));
  rgap_result_free(result);
  rgap_config_free(config);
  return kExitOk;
}

void print_check(const char* name, int passed, const char* detail, void*) {
  std::printf("[%s] %s: %s\n", passed ? "PASS" : "FAIL", name, detail);
}

int run_selftest() {
  int failures = 0;
  const rgap_status status = rgap_selftest(print_check, nullptr, &failures);
  if (status != RGAP_OK) return report_failure(status);
  std::printf("selftest: %d failure%s\n", failures, failures == 1 ? "" : "s");
  return failures == 0 ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reciprocity-gap imaging of small inclusions"};
  app.set_version_flag("--version", rgap_version());
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir;
  auto* music = app.add_subcommand("dot-music", "MUSIC localization from DOT boundary data");
  music->add_option("config", config_path, "run configuration file")->required();
  music->add_option("-o,--output-dir", output_dir, "override output_dir from the config");
  auto* dsm = app.add_subcommand("scatter-dsm", "direct sampling from one Helmholtz Cauchy pair");
  dsm->add_option("config", config_path, "run configuration file")->required();
  dsm->add_option("-o,--output-dir", output_dir, "override output_dir from the config");
  app.add_subcommand("selftest", "run the built-in oracle and property checks");

  if (argc > 1 && argv[1][0] != '-') {
    const std::string name = argv[1];
    if (name != "dot-music" && name != "scatter-dsm" && name != "selftest") {
      std::fprintf(stderr, "rgap: unknown subcommand '%s'\n\n%s", name.c_str(), app.help().c_str());
      return kExitConfig;
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "rgap: %s\n\n%s", e.what(), app.help().c_str());
    return kExitConfig;
  }

  if (music->parsed()) return run_method("dot-music", config_path, output_dir);
  if (dsm->parsed()) return run_method("scatter-dsm", config_path, output_dir);
  return run_selftest();
}
