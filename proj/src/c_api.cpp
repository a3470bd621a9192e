#include "rgap/rgap.h"

#include <new>

#include "rgap/config.hpp"
#include "rgap/selftest.hpp"
#include "rgap/specfun.hpp"

struct rgap_config {
  rgap::RunConfig value;
};

struct rgap_result {
  rgap::RunOutput value;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_stage;

rgap_status status_of(rgap::ErrorKind kind) {
  switch (kind) {
    case rgap::ErrorKind::InvalidArgument: return RGAP_INVALID_ARGUMENT;
    case rgap::ErrorKind::Domain: return RGAP_DOMAIN;
    case rgap::ErrorKind::Config: return RGAP_CONFIG;
    case rgap::ErrorKind::Numerical: return RGAP_NUMERICAL;
    case rgap::ErrorKind::Io: return RGAP_IO;
  }
  return RGAP_INTERNAL;
}

rgap_status fail(rgap_status status, std::string message, std::string stage = {}) {
  g_error = std::move(message);
  g_stage = std::move(stage);
  return status;
}

template <class F>
rgap_status guarded(F&& body) {
  g_error.clear();
  g_stage.clear();
  try {
    body();
    return RGAP_OK;
  } catch (const rgap::StageError& e) {
    // A stage failure past validation is a numerical failure of the run.
    const rgap_status s = status_of(e.kind());
    return fail(s == RGAP_INVALID_ARGUMENT ? RGAP_NUMERICAL : s, e.what(), e.stage());
  } catch (const rgap::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RGAP_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RGAP_INTERNAL, e.what());
  } catch (...) {
    return fail(RGAP_INTERNAL, "unknown exception");
  }
}

std::optional<rgap::Method> method_arg(const char* method) {
  if (method == nullptr) return std::nullopt;
  const auto m = rgap::parse_method(method);
  if (!m) throw rgap::Error(rgap::ErrorKind::InvalidArgument, std::string("unknown method '") + method + "'");
  return m;
}

}  // namespace

extern "C" {

const char* rgap_version(void) { return "0.1.0"; }

const char* rgap_status_name(rgap_status status) {
  switch (status) {
    case RGAP_OK: return "ok";
    case RGAP_INVALID_ARGUMENT: return "invalid argument";
    case RGAP_CONFIG: return "config error";
    case RGAP_IO: return "i/o error";
    case RGAP_DOMAIN: return "domain error";
    case RGAP_NUMERICAL: return "numerical error";
    case RGAP_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rgap_last_error(void) { return g_error.c_str(); }
const char* rgap_last_error_stage(void) { return g_stage.c_str(); }

rgap_status rgap_config_load(const char* path, const char* method, rgap_config** out) {
  if (path == nullptr || out == nullptr) return fail(RGAP_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<rgap_config>();
    handle->value = rgap::load_config(path, method_arg(method));
    *out = handle.release();
  });
}

rgap_status rgap_config_parse(const char* text, const char* method, rgap_config** out) {
  if (text == nullptr || out == nullptr) return fail(RGAP_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<rgap_config>();
    handle->value = rgap::parse_config(text, method_arg(method));
    *out = handle.release();
  });
}

void rgap_config_free(rgap_config* config) { delete config; }

rgap_status rgap_config_set_output_dir(rgap_config* config, const char* dir) {
  if (config == nullptr || dir == nullptr || *dir == '\0') {
    return fail(RGAP_INVALID_ARGUMENT, "null or empty argument");
  }
  return guarded([&] { config->value.output_dir = dir; });
}

const char* rgap_config_output_dir(const rgap_config* config) {
  return config == nullptr ? "" : config->value.output_dir.c_str();
}

rgap_status rgap_run(const rgap_config* config, rgap_result** out) {
  if (config == nullptr || out == nullptr) return fail(RGAP_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<rgap_result>(rgap_result{rgap::execute(config->value)});
    *out = handle.release();
  });
}

void rgap_result_free(rgap_result* result) { delete result; }

int rgap_result_grid_nodes(const rgap_result* result) {
  return result == nullptr ? 0 : result->value.field.grid.nodes_per_axis();
}

const double* rgap_result_field_values(const rgap_result* result) {
  return result == nullptr ? nullptr : result->value.field.values.data();
}

size_t rgap_result_peak_count(const rgap_result* result) {
  return result == nullptr ? 0 : result->value.peaks.peaks.size();
}

rgap_status rgap_result_peak(const rgap_result* result, size_t index, double* x, double* y,
                             double* value) {
  if (result == nullptr) return fail(RGAP_INVALID_ARGUMENT, "null result");
  const auto& peaks = result->value.peaks.peaks;
  if (index >= peaks.size()) {
    return fail(RGAP_INVALID_ARGUMENT, "peak index " + std::to_string(index) + " out of range");
  }
  if (x) *x = peaks[index].location.x;
  if (y) *y = peaks[index].location.y;
  if (value) *value = peaks[index].value;
  return RGAP_OK;
}

double rgap_result_worst_match(const rgap_result* result) {
  return result == nullptr ? 0.0 : result->value.peaks.worst_match();
}

int rgap_result_rank(const rgap_result* result) { return result == nullptr ? -1 : result->value.rank; }

rgap_status rgap_result_write(const rgap_result* result, const char* dir) {
  if (result == nullptr) return fail(RGAP_INVALID_ARGUMENT, "null result");
  return guarded([&] {
    rgap::write_outputs(result->value, dir != nullptr ? std::filesystem::path(dir)
                                                      : std::filesystem::path(result->value.config.output_dir));
  });
}

rgap_status rgap_selftest(rgap_selftest_callback callback, void* user, int* failures) {
  return guarded([&] {
    const int failed = rgap::run_selftest([&](const rgap::SelftestResult& r) {
      if (callback) callback(r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), user);
    });
    if (failures) *failures = failed;
  });
}

rgap_status rgap_bessel_j(int order, double x, double* out) {
  if (out == nullptr) return fail(RGAP_INVALID_ARGUMENT, "null output");
  return guarded([&] { *out = rgap::specfun::bessel_j(order, x); });
}

rgap_status rgap_bessel_y(int order, double x, double* out) {
  if (out == nullptr) return fail(RGAP_INVALID_ARGUMENT, "null output");
  return guarded([&] { *out = rgap::specfun::bessel_y(order, x); });
}

rgap_status rgap_hankel1(int order, double x, double* re, double* im) {
  if (re == nullptr || im == nullptr) return fail(RGAP_INVALID_ARGUMENT, "null output");
  return guarded([&] {
    const rgap::Complex h = rgap::specfun::hankel1(order, x);
    *re = h.real();
    *im = h.imag();
  });
}

}  // extern "C"
