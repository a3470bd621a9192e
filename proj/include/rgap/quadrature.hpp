#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rgap/geometry.hpp"
#include "rgap/types.hpp"

namespace rgap {

/// Pairwise (tree) summation in index order.
Complex pairwise_sum(std::span<const Complex> values);

/// Periodic trapezoid rule on the unit circle: weight * sum(values).
Complex boundary_integral(const BoundaryGrid& grid, std::span<const Complex> values);

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int count);

inline constexpr int kDefaultRadialNodes = 16;
inline constexpr int kDefaultAngularNodes = 32;

/// Polar tensor rule on a disk: Gauss-Legendre in s over [0,1] and the
/// trapezoid rule in phi, with y = center + radius * s * (cos phi, sin phi)
/// and Jacobian radius^2 * s.
class DiskRule {
 public:
  DiskRule(int radial_nodes = kDefaultRadialNodes, int angular_nodes = kDefaultAngularNodes);

  std::size_t size() const { return offsets_.size(); }

  template <class F>
  Complex integrate(Vec2 center, double radius, F&& integrand) const {
    std::vector<Complex> terms(offsets_.size());
    for (std::size_t q = 0; q < offsets_.size(); ++q) {
      terms[q] = weights_[q] * Complex(integrand(center + radius * offsets_[q]));
    }
    return radius * radius * pairwise_sum(terms);
  }

  const std::vector<Vec2>& offsets() const { return offsets_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<Vec2> offsets_;    // unit-disk nodes
  std::vector<double> weights_;  // include the Jacobian factor s
};

const DiskRule& default_disk_rule();

Complex disk_integral(Vec2 center, double radius, const std::function<Complex(Vec2)>& integrand,
                      int radial_nodes = kDefaultRadialNodes,
                      int angular_nodes = kDefaultAngularNodes);

}  // namespace rgap
