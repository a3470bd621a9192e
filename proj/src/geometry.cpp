#include "rgap/geometry.hpp"

#include <sstream>

namespace rgap {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Config: return "config error";
    case ErrorKind::Numerical: return "numerical error";
    case ErrorKind::Io: return "i/o error";
  }
  return "error";
}

namespace {

[[noreturn]] void reject(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

std::string describe(std::size_t index, const Inclusion& inc) {
  std::ostringstream os;
  os << "inclusion " << index << " at (" << inc.center.x << ", " << inc.center.y << ")";
  return os.str();
}

}  // namespace

Scene validate_scene(const Scene& scene) {
  if (!(std::isfinite(scene.epsilon) && scene.epsilon > 0.0)) {
    reject("epsilon must be positive and finite");
  }
  if (!(std::isfinite(scene.wavenumber) && scene.wavenumber >= 0.0)) {
    reject("wavenumber must be nonnegative and finite");
  }
  const auto& incs = scene.inclusions;
  for (std::size_t i = 0; i < incs.size(); ++i) {
    const Inclusion& inc = incs[i];
    if (!(std::isfinite(inc.center.x) && std::isfinite(inc.center.y) &&
          std::isfinite(inc.source_value) && std::isfinite(inc.radius))) {
      reject(describe(i, inc) + ": non-finite field");
    }
    if (inc.radius <= 0.0) reject(describe(i, inc) + ": nonpositive radius");
    if (inc.radius != scene.epsilon) reject(describe(i, inc) + ": radius differs from epsilon");
    if (norm(inc.center) + inc.radius >= 1.0) {
      reject(describe(i, inc) + ": touches boundary (|center| + radius >= 1)");
    }
  }
  const double margin = kSeparationMarginFactor * scene.epsilon;
  for (std::size_t i = 0; i < incs.size(); ++i) {
    for (std::size_t j = i + 1; j < incs.size(); ++j) {
      const double gap = distance(incs[i].center, incs[j].center);
      if (gap < incs[i].radius + incs[j].radius + margin) {
        reject(describe(i, incs[i]) + " and " + describe(j, incs[j]) +
               ": overlap (separation below radii + " +
               std::to_string(kSeparationMarginFactor) + " epsilon)");
      }
    }
  }
  return scene;
}

Scene make_scene(const std::vector<Vec2>& centers, const std::vector<double>& values,
                 double epsilon, double wavenumber) {
  if (centers.size() != values.size()) {
    throw Error(ErrorKind::InvalidArgument, "center and value lists differ in length");
  }
  Scene scene;
  scene.epsilon = epsilon;
  scene.wavenumber = wavenumber;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    scene.inclusions.push_back({centers[i], epsilon, values[i]});
  }
  return scene;
}

BoundaryGrid make_boundary_grid(int count) {
  if (count < 4) {
    throw Error(ErrorKind::InvalidArgument,
                "boundary grid needs at least 4 nodes, got " + std::to_string(count));
  }
  BoundaryGrid grid;
  grid.count = count;
  grid.weight = kTwoPi / count;
  grid.angles.reserve(grid.size());
  grid.points.reserve(grid.size());
  for (int i = 0; i < count; ++i) {
    const double theta = kTwoPi * i / count;
    grid.angles.push_back(theta);
    grid.points.push_back({std::cos(theta), std::sin(theta)});
  }
  grid.normals = grid.points;
  return grid;
}

SamplingGrid::SamplingGrid(int nodes_per_axis) : n_(nodes_per_axis) {
  if (n_ < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "sampling grid needs at least 2 nodes per axis, got " + std::to_string(n_));
  }
  spacing_ = 2.0 / (n_ - 1);
  mask_.resize(size());
  for (std::size_t k = 0; k < size(); ++k) {
    const Vec2 z = node(k);
    mask_[k] = dot(z, z) < 1.0 ? 1 : 0;
  }
}

// (2i - (n-1)) / (n-1) keeps the lattice exactly symmetric about the origin.
double SamplingGrid::coordinate(int i) const {
  return static_cast<double>(2 * i - (n_ - 1)) / static_cast<double>(n_ - 1);
}

Vec2 SamplingGrid::node(std::size_t flat) const {
  const auto n = static_cast<std::size_t>(n_);
  return node(static_cast<int>(flat % n), static_cast<int>(flat / n));
}

}  // namespace rgap
