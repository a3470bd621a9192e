#pragma once

#include <cstddef>
#include <vector>

#include "rgap/types.hpp"

namespace rgap {

/// A disk-shaped inclusion D_j = center + radius * B(0,1) carrying a constant
/// source / absorption value.
struct Inclusion {
  Vec2 center;
  double radius = 0.0;
  double source_value = 0.0;

  friend bool operator==(const Inclusion&, const Inclusion&) = default;
};

/// Unit-disk domain with small inclusions sharing the common radius epsilon.
struct Scene {
  std::vector<Inclusion> inclusions;
  double epsilon = 0.0;
  double wavenumber = 0.0;  // only used by the scattering model

  friend bool operator==(const Scene&, const Scene&) = default;
};

/// Pairwise gap required between inclusion boundaries, in units of epsilon.
inline constexpr double kSeparationMarginFactor = 10.0;

/// Returns the scene unchanged when it is well posed; otherwise throws
/// Error(InvalidArgument) describing the first violated invariant.
Scene validate_scene(const Scene& scene);

/// Scene with every inclusion of the given center list, radius epsilon and
/// source values.
Scene make_scene(const std::vector<Vec2>& centers, const std::vector<double>& values,
                 double epsilon, double wavenumber = 0.0);

/// M equally spaced nodes on the unit circle with the periodic trapezoid
/// weight 2*pi/M. Node 0 sits at angle 0; normals coincide with the points.
struct BoundaryGrid {
  int count = 0;
  std::vector<double> angles;
  std::vector<Vec2> points;
  std::vector<Vec2> normals;
  double weight = 0.0;

  std::size_t size() const { return static_cast<std::size_t>(count); }
};

BoundaryGrid make_boundary_grid(int count);

/// Square lattice over [-1,1]^2 with n nodes per axis. Node (i, j) sits at
/// (coordinate(i), coordinate(j)); flat index is j * n + i (rows of constant y).
class SamplingGrid {
 public:
  explicit SamplingGrid(int nodes_per_axis);

  int nodes_per_axis() const { return n_; }
  double spacing() const { return spacing_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_); }

  double coordinate(int i) const;
  Vec2 node(int i, int j) const { return {coordinate(i), coordinate(j)}; }
  Vec2 node(std::size_t flat) const;
  /// True for nodes strictly inside the unit disk.
  bool inside(std::size_t flat) const { return mask_[flat] != 0; }

 private:
  int n_;
  double spacing_;
  std::vector<unsigned char> mask_;
};

}  // namespace rgap
