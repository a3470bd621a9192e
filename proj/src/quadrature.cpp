#include "rgap/quadrature.hpp"

#include <string>

namespace rgap {

Complex pairwise_sum(std::span<const Complex> values) {
  if (values.size() <= 8) {
    Complex sum = 0.0;
    for (const Complex& v : values) sum += v;
    return sum;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

Complex boundary_integral(const BoundaryGrid& grid, std::span<const Complex> values) {
  if (values.size() != grid.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "boundary_integral: " + std::to_string(values.size()) +
                    " values for a grid of " + std::to_string(grid.count) + " nodes");
  }
  return grid.weight * pairwise_sum(values);
}

// Newton iteration on P_n from the Chebyshev-like initial guess; the
// derivative comes from the three-term recurrence.
GaussLegendre gauss_legendre(int count) {
  if (count < 1) {
    throw Error(ErrorKind::InvalidArgument, "Gauss-Legendre needs at least one node");
  }
  const auto n = static_cast<std::size_t>(count);
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (count + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      derivative = count * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / derivative;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

DiskRule::DiskRule(int radial_nodes, int angular_nodes) {
  if (radial_nodes < 2 || angular_nodes < 4) {
    throw Error(ErrorKind::InvalidArgument,
                "disk rule needs radial_nodes >= 2 and angular_nodes >= 4, got " +
                    std::to_string(radial_nodes) + " and " + std::to_string(angular_nodes));
  }
  const GaussLegendre gl = gauss_legendre(radial_nodes);
  const double dphi = kTwoPi / angular_nodes;
  offsets_.reserve(static_cast<std::size_t>(radial_nodes) * angular_nodes);
  weights_.reserve(offsets_.capacity());
  for (std::size_t r = 0; r < gl.nodes.size(); ++r) {
    const double s = 0.5 * (gl.nodes[r] + 1.0);
    const double ws = 0.5 * gl.weights[r];
    for (int a = 0; a < angular_nodes; ++a) {
      const double phi = dphi * a;
      offsets_.push_back({s * std::cos(phi), s * std::sin(phi)});
      weights_.push_back(ws * s * dphi);
    }
  }
}

const DiskRule& default_disk_rule() {
  static const DiskRule rule;
  return rule;
}

Complex disk_integral(Vec2 center, double radius, const std::function<Complex(Vec2)>& integrand,
                      int radial_nodes, int angular_nodes) {
  if (!(radius > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "disk_integral: radius must be positive");
  }
  return DiskRule(radial_nodes, angular_nodes).integrate(center, radius, integrand);
}

}  // namespace rgap
