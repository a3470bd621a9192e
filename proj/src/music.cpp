#include "rgap/music.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "parallel.hpp"
#include "rgap/forward_dot.hpp"
#include "rgap/reciprocity.hpp"

namespace rgap {

const char* method_name(Method method) {
  return method == Method::DotMusic ? "dot-music" : "scatter-dsm";
}

double ImagingField::max_value() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, v);
  return m;
}

}  // namespace rgap

namespace rgap::music {
namespace {

void check_order(int order) {
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "response matrix order must be >= 1");
}

void require_noise_subspace(const SubspaceDecomposition& dec) {
  if (dec.rank >= dec.dimension()) {
    throw Error(ErrorKind::Numerical, "no noise subspace (estimated rank equals the dimension)");
  }
}

}  // namespace

ResponseMatrix assemble_response(const Scene& scene, int order, const BoundaryGrid& grid,
                                 const std::optional<NoiseSpec>& noise) {
  check_order(order);
  const auto dim = static_cast<std::size_t>(order + 1);
  ResponseMatrix response{order, ComplexMatrix(dim, dim), 0.0};

  std::vector<std::vector<Complex>> probe_trace(dim);
  std::vector<std::vector<Complex>> probe_neumann(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    probe_trace[n] = diffusion::lifting_trace(static_cast<int>(n), grid);
    probe_neumann[n] = diffusion::lifting_neumann(static_cast<int>(n), grid);
  }

  double scale = 0.0;
  for (std::size_t m = 0; m < dim; ++m) {
    const int mode = static_cast<int>(m);
    std::vector<Complex> correction = diffusion::neumann_correction(scene, mode, grid);
    if (noise) correction = add_noise(correction, *noise);
    CauchyData data{grid, probe_trace[m], std::move(correction), "dot mode " + std::to_string(m)};
    for (std::size_t i = 0; i < grid.size(); ++i) data.neumann[i] += probe_neumann[m][i];
    for (std::size_t n = 0; n < dim; ++n) {
      response.entries(n, m) = reciprocity_gap(data, probe_trace[n], probe_neumann[n]);
      scale = std::max(scale, reciprocity_gap_scale(data, probe_trace[n], probe_neumann[n]));
    }
  }
  // Summation of M products: error below M * eps * (sum of magnitudes).
  response.entry_tolerance =
      static_cast<double>(grid.count) * std::numeric_limits<double>::epsilon() * scale;
  return response;
}

ResponseMatrix point_response(const Scene& scene, int order) {
  check_order(order);
  const auto dim = static_cast<std::size_t>(order + 1);
  ResponseMatrix response{order, ComplexMatrix(dim, dim), 0.0};
  for (const Inclusion& inc : scene.inclusions) {
    const double weight = kPi * inc.radius * inc.radius * inc.source_value;
    const std::vector<Complex> u = phi_vector(inc.center, order);
    for (std::size_t n = 0; n < dim; ++n)
      for (std::size_t m = 0; m < dim; ++m) response.entries(n, m) += weight * u[n] * u[m];
  }
  return response;
}

int estimate_rank(const std::vector<double>& eigenvalues, double floor, double drop_ratio) {
  const int dim = static_cast<int>(eigenvalues.size());
  for (int i = 0; i + 1 < dim; ++i) {
    const double current = eigenvalues[static_cast<std::size_t>(i)];
    if (current <= floor) break;
    const double next = std::max(eigenvalues[static_cast<std::size_t>(i) + 1], floor);
    if (next <= drop_ratio * current) return i + 1;
  }
  return dim;
}

SubspaceDecomposition decompose(const ResponseMatrix& response, double drop_ratio) {
  const ComplexMatrix& f = response.entries;
  const ComplexMatrix gram = f * f.adjoint();
  HermitianEigen eig = hermitian_eigen(gram);

  SubspaceDecomposition dec;
  dec.eigenvalues.reserve(eig.eigenvalues.size());
  // Roundoff can leave tiny negative eigenvalues of a PSD product.
  for (double lambda : eig.eigenvalues) dec.eigenvalues.push_back(std::max(lambda, 0.0));
  dec.eigenvectors = std::move(eig.eigenvectors);

  // ||F||_2 <= dim * max|entry|, so entry-level roundoff bounds the
  // resolvable part of the spectrum of F F^*.
  const double entry_floor = static_cast<double>(f.rows()) * response.entry_tolerance;
  dec.rank = estimate_rank(dec.eigenvalues, entry_floor * entry_floor, drop_ratio);
  return dec;
}

std::vector<Complex> phi_vector(Vec2 x, int order) {
  if (dot(x, x) > (1.0 + 1e-12) * (1.0 + 1e-12)) {
    throw Error(ErrorKind::Domain, "phi_vector: point outside the unit disk");
  }
  std::vector<Complex> phi(static_cast<std::size_t>(order) + 1);
  const Complex w(x.x, x.y);
  Complex power = 1.0;
  for (Complex& entry : phi) {
    entry = power;
    power *= w;
  }
  return phi;
}

double noise_projection(const SubspaceDecomposition& dec, Vec2 x) {
  require_noise_subspace(dec);
  const std::vector<Complex> phi = phi_vector(x, dec.dimension() - 1);
  double sum = 0.0;
  for (int l = dec.rank; l < dec.dimension(); ++l) {
    Complex inner = 0.0;
    for (std::size_t n = 0; n < phi.size(); ++n) {
      inner += phi[n] * std::conj(dec.eigenvectors(n, static_cast<std::size_t>(l)));
    }
    sum += std::norm(inner);
  }
  return sum;
}

double music_indicator(const SubspaceDecomposition& dec, Vec2 x) {
  const double projection = noise_projection(dec, x);
  if (projection < 1e-300) return kIndicatorCeiling;
  return std::min(1.0 / projection, kIndicatorCeiling);
}

ImagingField music_field(const SubspaceDecomposition& dec, const SamplingGrid& grid) {
  require_noise_subspace(dec);
  ImagingField field{grid, std::vector<double>(grid.size(), 0.0), Method::DotMusic, {}};
  field.params.modes = dec.dimension() - 1;
  detail::parallel_for(grid.size(), [&](std::size_t k) {
    if (grid.inside(k)) field.values[k] = music_indicator(dec, grid.node(k));
  });
  return field;
}

}  // namespace rgap::music
