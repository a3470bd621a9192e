#pragma once

#include <optional>
#include <vector>

#include "rgap/field.hpp"
#include "rgap/geometry.hpp"
#include "rgap/hermitian_eigen.hpp"
#include "rgap/noise.hpp"
#include "rgap/types.hpp"

namespace rgap::music {

/// F(n, m) = R_{f_m}[u0(., g_n)] for n, m = 0..order.
struct ResponseMatrix {
  int order = 0;
  ComplexMatrix entries;
  /// Absolute roundoff bound on the entries; spectra below its square are
  /// treated as zero by the rank estimate.
  double entry_tolerance = 0.0;
};

/// Eigen-decomposition of F F^* with the estimated signal rank.
struct SubspaceDecomposition {
  std::vector<double> eigenvalues;  // descending, >= 0
  ComplexMatrix eigenvectors;       // orthonormal columns
  int rank = 0;

  int dimension() const { return static_cast<int>(eigenvalues.size()); }
};

inline constexpr double kRankDropRatio = 1e-6;
inline constexpr double kIndicatorCeiling = 1e300;

/// Synthesizes Born DOT data for excitations m = 0..order, perturbs the
/// Neumann correction with `noise` (the same per-node realization for every
/// excitation), and fills F by the reciprocity gap against the liftings.
ResponseMatrix assemble_response(const Scene& scene, int order, const BoundaryGrid& grid,
                                 const std::optional<NoiseSpec>& noise = std::nullopt);

/// Exact point-formula matrix U T U^T with U(m, j) = w_j^m and
/// T = diag(pi eps^2 rho_j).
ResponseMatrix point_response(const Scene& scene, int order);

/// Rank = smallest i >= 1 with lambda_{i+1} <= drop_ratio * lambda_i (1-based),
/// considering only eigenvalues above the roundoff floor; full dimension if
/// there is no such drop.
int estimate_rank(const std::vector<double>& eigenvalues, double floor,
                  double drop_ratio = kRankDropRatio);

SubspaceDecomposition decompose(const ResponseMatrix& response,
                                double drop_ratio = kRankDropRatio);

/// (w^0, w^1, ..., w^order) for w = x1 + i x2.
std::vector<Complex> phi_vector(Vec2 x, int order);

/// Squared norm of the projection of phi_x onto the noise subspace, using
/// the Hermitian inner product.
double noise_projection(const SubspaceDecomposition& dec, Vec2 x);

/// 1 / noise_projection, capped at kIndicatorCeiling.
double music_indicator(const SubspaceDecomposition& dec, Vec2 x);

ImagingField music_field(const SubspaceDecomposition& dec, const SamplingGrid& grid);

}  // namespace rgap::music
