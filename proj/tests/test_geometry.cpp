#include <doctest.h>

#include "rgap/geometry.hpp"
#include "rgap/quadrature.hpp"

using namespace rgap;

TEST_CASE("scene validation") {
  const Scene ok = make_scene({{-0.25, 0.25}, {0.25, -0.25}}, {1.0, 1.0}, 0.01);
  CHECK(validate_scene(ok) == ok);

  SUBCASE("touching the boundary") {
    const Scene s = make_scene({{0.995, 0.0}}, {1.0}, 0.01);
    CHECK_THROWS_WITH_AS(validate_scene(s), doctest::Contains("touches boundary"), Error);
  }
  SUBCASE("overlap within the margin") {
    // radii 0.02 + margin 0.1 = 0.12 > 0.11
    const Scene s = make_scene({{0.0, 0.0}, {0.11, 0.0}}, {1.0, 1.0}, 0.01);
    CHECK_THROWS_WITH_AS(validate_scene(s), doctest::Contains("overlap"), Error);
    const Scene t = make_scene({{0.0, 0.0}, {0.13, 0.0}}, {1.0, 1.0}, 0.01);
    CHECK_NOTHROW(validate_scene(t));
  }
  SUBCASE("radius must equal epsilon") {
    Scene s = ok;
    s.inclusions[1].radius = 0.02;
    CHECK_THROWS_AS(validate_scene(s), Error);
  }
  SUBCASE("nonpositive epsilon") {
    CHECK_THROWS_AS(validate_scene(make_scene({{0.0, 0.0}}, {1.0}, 0.0)), Error);
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(make_scene({{0.0, 0.0}}, {1.0, 2.0}, 0.01), Error);
  }
}

TEST_CASE("boundary grid") {
  const BoundaryGrid g = make_boundary_grid(64);
  CHECK(g.size() == 64);
  CHECK(g.weight == doctest::Approx(kTwoPi / 64).epsilon(1e-15));
  CHECK(g.points[0] == Vec2{1.0, 0.0});
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(std::abs(norm(g.points[i]) - 1.0) < 1e-15);
    CHECK(g.normals[i] == g.points[i]);
  }
  CHECK_THROWS_AS(make_boundary_grid(3), Error);
}

TEST_CASE("sampling grid") {
  const SamplingGrid g(399);
  CHECK(g.spacing() == doctest::Approx(1.0 / 199.0).epsilon(1e-14));
  CHECK(g.coordinate(0) == -1.0);
  CHECK(g.coordinate(199) == 0.0);
  CHECK(g.coordinate(398) == 1.0);
  // Exact symmetry about the origin.
  for (int i = 0; i < 399; ++i) CHECK(g.coordinate(i) == -g.coordinate(398 - i));
  CHECK(g.node(std::size_t{3 * 399 + 5}) == g.node(5, 3));
  CHECK_FALSE(g.inside(0));
  CHECK(g.inside(199 * 399 + 199));
  CHECK_FALSE(g.inside(199 * 399 + 398));  // (1, 0) is on the circle
  CHECK(SamplingGrid(199).spacing() == doctest::Approx(1.0 / 99.0).epsilon(1e-14));
  CHECK_THROWS_AS(SamplingGrid(1), Error);
}

TEST_CASE("pairwise sum and boundary integral") {
  std::vector<Complex> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = {static_cast<double>(i), 1.0};
  CHECK(pairwise_sum(v) == Complex(499500.0, 1000.0));
  const BoundaryGrid g = make_boundary_grid(16);
  CHECK_THROWS_AS(boundary_integral(g, v), Error);
}

TEST_CASE("trapezoid rule converges geometrically on periodic analytic data") {
  // int_0^{2pi} dtheta / (a - cos theta) = 2 pi / sqrt(a^2 - 1); error ~ rho^{-M}.
  const double a = 1.5;
  const double exact = kTwoPi / std::sqrt(a * a - 1.0);
  const double rho = a + std::sqrt(a * a - 1.0);
  auto error = [&](int m) {
    const BoundaryGrid g = make_boundary_grid(m);
    std::vector<Complex> f(g.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = 1.0 / (a - std::cos(g.angles[i]));
    return std::abs(boundary_integral(g, f) - exact);
  };
  const double e8 = error(8);
  const double e16 = error(16);
  const double ratio = e16 / e8;
  CHECK(ratio == doctest::Approx(std::pow(rho, -8.0)).epsilon(0.05));
  CHECK(error(64) < 1e-13);
}

TEST_CASE("Gauss-Legendre") {
  for (int n : {1, 2, 5, 16, 40}) {
    const GaussLegendre gl = gauss_legendre(n);
    double wsum = 0.0;
    for (double w : gl.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      CHECK(gl.nodes[i] == -gl.nodes[gl.nodes.size() - 1 - i]);
      if (i > 0) CHECK(gl.nodes[i] > gl.nodes[i - 1]);
    }
    // Exact for degree 2n - 1.
    for (int d = 0; d <= 2 * n - 1; ++d) {
      double q = 0.0;
      for (std::size_t i = 0; i < gl.nodes.size(); ++i) q += gl.weights[i] * std::pow(gl.nodes[i], d);
      const double exact = d % 2 == 0 ? 2.0 / (d + 1) : 0.0;
      CHECK(std::abs(q - exact) < 1e-13);
    }
  }
  CHECK_THROWS_AS(gauss_legendre(0), Error);
}

TEST_CASE("disk rule against closed forms") {
  // int_D e^{y1 + y2} = e^{c1 + c2} 2 pi R I1(sqrt2 R) / sqrt2.
  const double q = disk_integral({0.3, 0.1}, 0.05, [](Vec2 y) { return Complex(std::exp(y.x + y.y)); }).real();
  CHECK(std::abs(q - 0.011724088279523527154) < 1e-16);
  // Area and second moment.
  const DiskRule rule;
  CHECK(std::abs(rule.integrate({0.2, -0.1}, 0.3, [](Vec2) { return 1.0; }) - kPi * 0.09) < 1e-15);
  const Complex m2 = rule.integrate({0.0, 0.0}, 0.5, [](Vec2 y) { return dot(y, y); });
  CHECK(std::abs(m2 - kPi * std::pow(0.5, 4) / 2.0) < 1e-15);
  // Harmonic mean value property: int_D w^n = pi r^2 c^n.
  const Complex c(0.3, -0.4);
  const Complex qn = rule.integrate({0.3, -0.4}, 0.1, [](Vec2 y) { return std::pow(Complex(y.x, y.y), 7); });
  CHECK(std::abs(qn - kPi * 0.01 * std::pow(c, 7)) < 1e-16);
  CHECK_THROWS_AS(disk_integral({0, 0}, 0.0, [](Vec2) { return Complex(1.0); }), Error);
}
