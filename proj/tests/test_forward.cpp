#include <doctest.h>

#include "oracles.hpp"
#include "rgap/dsm.hpp"
#include "rgap/forward_dot.hpp"
#include "rgap/forward_helmholtz.hpp"
#include "rgap/music.hpp"
#include "rgap/reciprocity.hpp"

using namespace rgap;

namespace {

// 2 J1(t) / t by its power series.
double jinc(double t) {
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m < 60; ++m) {
    term *= -(t * t / 4.0) / (m * (m + 1.0));
    sum += term;
  }
  return sum;
}

Complex disk_plane_wave_moment(const Scene& s, double k, Vec2 d) {
  Complex sum = 0.0;
  for (const Inclusion& inc : s.inclusions) {
    sum += inc.source_value * kPi * inc.radius * inc.radius * jinc(k * inc.radius) *
           std::polar(1.0, k * dot(inc.center, d));
  }
  return sum;
}

const Scene& dsm_scene() {
  static const Scene s =
      make_scene({{0.0, 0.75}, {0.5, 0.0}, {-0.4, -0.3}}, {1.0, 0.8, 1.2}, 0.01, 25.0);
  return s;
}

}  // namespace

TEST_CASE("harmonic lifting and kernel") {
  CHECK(diffusion::harmonic_lifting(0, {0.0, 0.0}) == Complex(1.0));
  CHECK(diffusion::harmonic_lifting(3, {0.0, 0.0}) == Complex(0.0));
  CHECK(std::abs(diffusion::harmonic_lifting(5, {0.3, 0.4}) - std::pow(Complex(0.3, 0.4), 5)) < 1e-15);
  CHECK_THROWS_AS(diffusion::harmonic_lifting(2, {1.1, 0.0}), Error);
  CHECK_THROWS_AS(diffusion::green_neumann_kernel({1.0, 0.0}, 0.5), Error);
  // Kernel is the negative Poisson kernel: it integrates to -1.
  const BoundaryGrid g = make_boundary_grid(128);
  std::vector<Complex> k(g.size());
  for (std::size_t i = 0; i < k.size(); ++i) k[i] = diffusion::green_neumann_kernel({0.5, -0.2}, g.angles[i]);
  CHECK(std::abs(boundary_integral(g, k) + 1.0) < 1e-14);
  CHECK(diffusion::green_neumann_kernel({0.5, -0.2}, 0.1) < 0.0);
}

TEST_CASE("lifting Neumann trace matches a finite difference") {
  const double theta = 0.7;
  const double h = 1e-5;
  for (int n = 0; n <= 6; ++n) {
    const Vec2 out{(1.0 + h) * std::cos(theta), (1.0 + h) * std::sin(theta)};
    const Vec2 in{(1.0 - h) * std::cos(theta), (1.0 - h) * std::sin(theta)};
    const Complex fd = (std::pow(Complex(out.x, out.y), n) - std::pow(Complex(in.x, in.y), n)) / (2 * h);
    CHECK(std::abs(fd - diffusion::lifting_neumann_trace(n, theta)) < 1e-8);
  }
}

TEST_CASE("DOT Neumann correction approaches the point formula at order eps^4") {
  const BoundaryGrid g = make_boundary_grid(64);
  std::vector<double> gaps;
  for (double eps : {0.08, 0.04, 0.02}) {
    const Scene s = make_scene({{-0.25, 0.25}, {0.3, -0.1}}, {1.0, 1.5}, eps);
    const auto full = diffusion::neumann_correction(s, 3, g);
    const auto point = diffusion::neumann_correction_point(s, 3, g);
    double gap = 0.0;
    for (std::size_t i = 0; i < full.size(); ++i) gap = std::max(gap, std::abs(full[i] - point[i]));
    gaps.push_back(gap);
  }
  CHECK(std::log2(gaps[0] / gaps[1]) > 3.8);
  CHECK(std::log2(gaps[1] / gaps[2]) > 3.8);
}

TEST_CASE("DOT reciprocity gap equals the volume moment") {
  // By the mean value property the disk moment of w^{n+m} is pi eps^2 rho c^{n+m}.
  const Scene s = make_scene({{-0.25, 0.25}, {0.25, -0.25}, {0.1, 0.6}}, {1.0, 2.0, 0.5}, 0.02);
  const BoundaryGrid g = make_boundary_grid(64);
  const auto f = music::assemble_response(s, 20, g);
  const auto t = music::point_response(s, 20);
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t n = 0; n <= 20; ++n) {
    for (std::size_t m = 0; m <= 20; ++m) {
      worst = std::max(worst, std::abs(f.entries(n, m) - t.entries(n, m)));
      scale = std::max(scale, std::abs(t.entries(n, m)));
    }
  }
  // Only boundary aliasing of the highest modes remains.
  CHECK(worst <= 1e-9 * scale);
  CHECK(f.entry_tolerance > 0.0);
  CHECK(worst <= f.entry_tolerance);
}

TEST_CASE("reciprocity gap is bilinear and checks its inputs") {
  const BoundaryGrid g = make_boundary_grid(32);
  CauchyData d{g, std::vector<Complex>(32, Complex(0.0, 1.0)), std::vector<Complex>(32, Complex(2.0)), "t"};
  const std::vector<Complex> v(32, Complex(0.0, 1.0));
  const std::vector<Complex> dv(32, Complex(1.0));
  // v du - u dv = 2i - i = i, integrated: 2 pi i (no conjugation).
  CHECK(std::abs(reciprocity_gap(d, v, dv) - Complex(0.0, kTwoPi)) < 1e-14);
  CHECK(reciprocity_gap_scale(d, v, dv) == doctest::Approx(3.0 * kTwoPi));
  d.neumann.pop_back();
  CHECK_THROWS_AS(reciprocity_gap(d, v, dv), Error);
  d.neumann.push_back(Complex(NAN, 0.0));
  CHECK_THROWS_AS(check_cauchy_data(d), Error);
}

TEST_CASE("Helmholtz source moment matches the Bessel closed form") {
  const Scene& s = dsm_scene();
  for (int l = 0; l < 16; ++l) {
    const Vec2 d = dsm::direction(l, 16);
    const Complex q = helmholtz::source_moment(s, 25.0, d);
    CHECK(std::abs(q - disk_plane_wave_moment(s, 25.0, d)) < 1e-17);
  }
}

TEST_CASE("Helmholtz RGF is exact on a resolved boundary grid") {
  const Scene& s = dsm_scene();
  const CauchyData data = helmholtz::cauchy_data(s, make_boundary_grid(128));
  const auto profile = dsm::rgf_direction_profile(data, 25.0, 64);
  for (int l = 0; l < 64; ++l) {
    const Complex exact = disk_plane_wave_moment(s, 25.0, dsm::direction(l, 64));
    CHECK(std::abs(profile[static_cast<std::size_t>(l)] - exact) <= 1e-10 * std::abs(exact));
  }
}

TEST_CASE("scattered Neumann trace matches a radial finite difference") {
  const Scene& s = dsm_scene();
  const double h = 1e-4;
  for (double theta : {0.0, 1.3, 2.9, 4.4}) {
    const Vec2 z{std::cos(theta), std::sin(theta)};
    const Complex fd = (helmholtz::detail::scattered_field_at(s, (1.0 + h) * z) -
                        helmholtz::detail::scattered_field_at(s, (1.0 - h) * z)) /
                       (2.0 * h);
    const Complex dn = helmholtz::scattered_neumann(s, z);
    CHECK(std::abs(fd - dn) < 1e-6 * std::abs(dn));
    CHECK(helmholtz::scattered_field(s, z) == helmholtz::detail::scattered_field_at(s, z));
  }
  CHECK_THROWS_AS(helmholtz::scattered_field(s, {0.5, 0.0}), Error);
}

TEST_CASE("scattered field solves the Helmholtz equation away from the sources") {
  const Scene s = make_scene({{0.2, 0.1}}, {1.0}, 0.01, 5.0);
  const Vec2 x{-0.4, 0.5};
  const double h = 1e-3;
  auto u = [&](Vec2 p) { return helmholtz::detail::scattered_field_at(s, p); };
  const Complex lap = (u(x + Vec2{h, 0}) + u(x - Vec2{h, 0}) + u(x + Vec2{0, h}) + u(x - Vec2{0, h}) -
                       4.0 * u(x)) / (h * h);
  CHECK(std::abs(lap + 25.0 * u(x)) < 1e-5 * 25.0 * std::abs(u(x)));
}

TEST_CASE("scattered field of one disk is a scaled point source") {
  // Graf addition: int_D H0(k|x - y|) dy = pi eps^2 (2 J1(k eps) / (k eps)) H0(k|x - c|).
  const Scene s = make_scene({{0.1, -0.3}}, {1.0}, 0.01, 25.0);
  const Vec2 z{0.0, 1.0};
  const double r = distance(z, s.inclusions[0].center);
  const Complex h0(static_cast<double>(oracle::bessel_j(0, 25.0 * r)),
                   static_cast<double>(oracle::bessel_y(0, 25.0 * r)));
  const Complex exact = -Complex(0.0, 0.25) * h0 * kPi * 1e-4 * jinc(0.25);
  CHECK(std::abs(helmholtz::scattered_field(s, z) - exact) < 1e-12 * std::abs(exact));
}

TEST_CASE("plane wave traces") {
  const BoundaryGrid g = make_boundary_grid(16);
  const Vec2 d{0.6, 0.8};
  const auto u = helmholtz::plane_wave_trace(25.0, d, g);
  const auto du = helmholtz::plane_wave_neumann_trace(25.0, d, g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(std::abs(std::abs(u[i]) - 1.0) < 1e-15);
    CHECK(std::abs(du[i] - Complex(0.0, 25.0 * dot(d, g.points[i])) * u[i]) < 1e-13);
  }
  CHECK_THROWS_AS(helmholtz::plane_wave(25.0, {1.0, 1.0}, {0.0, 0.0}), Error);
}
