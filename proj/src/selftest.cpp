#include "rgap/selftest.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "rgap/dsm.hpp"
#include "rgap/forward_dot.hpp"
#include "rgap/forward_helmholtz.hpp"
#include "rgap/hermitian_eigen.hpp"
#include "rgap/music.hpp"
#include "rgap/noise.hpp"
#include "rgap/quadrature.hpp"
#include "rgap/specfun.hpp"

namespace rgap {
namespace {

struct Check {
  const char* name;
  double bound;
  double (*measure)();  // residual; NaN counts as failure
  bool below = true;    // pass when residual <= bound (else >= bound)
};

double wronskian_residual() {
  double worst = 0.0;
  for (int i = 0; i <= 600; ++i) {
    const double x = 0.1 + (60.0 - 0.1) * i / 600.0;
    const double w = specfun::bessel_j(1, x) * specfun::bessel_y(0, x) -
                     specfun::bessel_j(0, x) * specfun::bessel_y(1, x);
    worst = std::max(worst, std::abs(w - 2.0 / (kPi * x)));
  }
  return worst;
}

double bessel_reference_residual() {
  struct Row { double x, j0, j1, y0, y1; };
  static constexpr Row rows[] = {
      {1.0, 0.76519768655796655145, 0.44005058574493351596, 0.088256964215676957983,
       -0.78121282130028871655},
      {20.0, 0.16702466434058315473, 0.066833124175850045579, 0.062640596809383831162,
       -0.16551161436252129586},
  };
  double worst = 0.0;
  for (const Row& r : rows) {
    worst = std::max({worst, std::abs(specfun::bessel_j(0, r.x) - r.j0),
                      std::abs(specfun::bessel_j(1, r.x) - r.j1),
                      std::abs(specfun::bessel_y(0, r.x) - r.y0),
                      std::abs(specfun::bessel_y(1, r.x) - r.y1)});
  }
  return worst;
}

double disk_rule_residual() {
  const double radius = 0.05;
  const Complex q = disk_integral({0.3, 0.1}, radius, [](Vec2 y) { return Complex(std::exp(y.x + y.y)); });
  const double exact = 0.011724088279523527154;
  return std::abs(q - exact) / exact;
}

// The negative Poisson kernel reproduces w^n from its boundary trace.
double poisson_residual() {
  const BoundaryGrid grid = make_boundary_grid(64);
  double worst = 0.0;
  for (int n = 0; n <= 8; ++n) {
    const Vec2 x{0.3, -0.4};
    std::vector<Complex> terms(grid.size());
    for (std::size_t q = 0; q < grid.size(); ++q) {
      terms[q] = -diffusion::green_neumann_kernel(x, grid.angles[q]) *
                 std::polar(1.0, n * grid.angles[q]);
    }
    worst = std::max(worst, std::abs(boundary_integral(grid, terms) - diffusion::harmonic_lifting(n, x)));
  }
  return worst;
}

double funk_hecke_residual() {
  const double k = 25.0;
  const int count = 64;
  std::vector<Complex> profile(count, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double r = (12.5 / k) * i / 199.0;
    const Complex pairing = dsm::dsm_pairing(profile, k, {r, 0.0});
    worst = std::max(worst, std::abs(pairing - dsm::funk_hecke_reference(k, r)));
  }
  return worst;
}

double rgf_exactness_residual() {
  const Scene scene = make_scene({{0.0, 0.75}, {0.5, 0.0}}, {1.0, 1.0}, 0.01, 25.0);
  const BoundaryGrid grid = make_boundary_grid(128);
  const CauchyData data = helmholtz::cauchy_data(scene, grid);
  const auto profile = dsm::rgf_direction_profile(data, scene.wavenumber, 64);
  double worst = 0.0;
  for (int l = 0; l < 64; ++l) {
    const Complex volume = helmholtz::source_moment(scene, scene.wavenumber, dsm::direction(l, 64));
    worst = std::max(worst, std::abs(profile[static_cast<std::size_t>(l)] - volume) / std::abs(volume));
  }
  return worst;
}

double jacobi_residual() {
  std::mt19937_64 engine(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 12;
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = u(engine);
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = {u(engine), u(engine)};
      a(j, i) = std::conj(a(i, j));
    }
  }
  const HermitianEigen e = hermitian_eigen(a);
  ComplexMatrix lambda(n, n);
  for (std::size_t i = 0; i < n; ++i) lambda(i, i) = e.eigenvalues[i];
  const ComplexMatrix rebuilt = e.eigenvectors * lambda * e.eigenvectors.adjoint();
  double diff = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) diff += std::norm(rebuilt(i, j) - a(i, j));
  }
  return std::sqrt(diff) / a.frobenius_norm();
}

const Scene& range_scene() {
  static const Scene scene =
      make_scene({{-0.3, 0.2}, {0.4, 0.1}, {0.0, -0.5}}, {1.0, 0.7, 1.3}, 0.01);
  return scene;
}

// |P_noise phi_x| / |phi_x|
double relative_projection(const music::SubspaceDecomposition& dec, Vec2 x) {
  double phi_norm = 0.0;
  for (const Complex& c : music::phi_vector(x, dec.dimension() - 1)) phi_norm += std::norm(c);
  return std::sqrt(music::noise_projection(dec, x) / phi_norm);
}

double music_range_on() {
  const auto dec = music::decompose(music::point_response(range_scene(), 20));
  if (dec.rank != 3) return NAN;
  double worst = 0.0;
  for (const Inclusion& inc : range_scene().inclusions) {
    worst = std::max(worst, relative_projection(dec, inc.center));
  }
  return worst;
}

double music_range_off() {
  const auto dec = music::decompose(music::point_response(range_scene(), 20));
  double least = INFINITY;
  for (const Inclusion& inc : range_scene().inclusions) {
    for (int a = 0; a < 8; ++a) {
      const double t = kTwoPi * a / 8;
      least = std::min(least, relative_projection(dec, inc.center + 0.1 * Vec2{std::cos(t), std::sin(t)}));
    }
  }
  return least;
}

double noise_determinism() {
  const std::vector<Complex> clean(256, Complex(1.0, -2.0));
  const NoiseSpec spec{0.1, 42, 3};
  const auto a = add_noise(clean, spec);
  const auto b = add_noise(clean, spec);
  if (a != b) return 1.0;
  NoiseSpec other = spec;
  other.seed = 43;
  if (add_noise(clean, other) == a) return 1.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - clean[i]) / std::abs(clean[i]));
  }
  return worst > spec.level ? 1.0 : 0.0;
}

constexpr Check kChecks[] = {
    {"bessel_wronskian", 1e-9, wronskian_residual},
    {"bessel_reference_values", 1e-12, bessel_reference_residual},
    {"disk_quadrature_closed_form", 1e-12, disk_rule_residual},
    {"poisson_kernel_reproduction", 1e-12, poisson_residual},
    {"funk_hecke_identity", 1e-9, funk_hecke_residual},
    {"rgf_exactness_128_nodes", 1e-6, rgf_exactness_residual},
    {"jacobi_reconstruction", 1e-12, jacobi_residual},
    {"music_range_at_centers", 1e-8, music_range_on},
    {"music_range_off_centers", 1e-2, music_range_off, false},
    {"noise_determinism", 0.0, noise_determinism},
};

}  // namespace

int run_selftest(const std::function<void(const SelftestResult&)>& report) {
  int failures = 0;
  for (const Check& check : kChecks) {
    SelftestResult result;
    result.name = check.name;
    double value = NAN;
    try {
      value = check.measure();
      result.passed = check.below ? value <= check.bound : value >= check.bound;
    } catch (const std::exception& e) {
      result.detail = std::string("threw: ") + e.what();
    }
    if (result.detail.empty()) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%.3e %s %.1e", value, check.below ? "<=" : ">=", check.bound);
      result.detail = buf;
    }
    if (!result.passed) ++failures;
    if (report) report(result);
  }
  return failures;
}

}  // namespace rgap
