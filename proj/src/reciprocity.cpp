#include "rgap/reciprocity.hpp"

#include "rgap/quadrature.hpp"

namespace rgap {
namespace {

void check_probe(const CauchyData& data, std::span<const Complex> v_trace,
                 std::span<const Complex> v_neumann) {
  check_cauchy_data(data);
  if (v_trace.size() != data.grid.size() || v_neumann.size() != data.grid.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "reciprocity_gap: probe traces do not match the boundary grid");
  }
}

}  // namespace

void check_cauchy_data(const CauchyData& data) {
  const std::size_t m = data.grid.size();
  if (data.dirichlet.size() != m || data.neumann.size() != m) {
    throw Error(ErrorKind::InvalidArgument,
                "Cauchy data '" + data.label + "': trace lengths do not match the grid");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(std::abs(data.dirichlet[i])) || !std::isfinite(std::abs(data.neumann[i]))) {
      throw Error(ErrorKind::InvalidArgument,
                  "Cauchy data '" + data.label + "': non-finite entry at node " +
                      std::to_string(i));
    }
  }
}

Complex reciprocity_gap(const CauchyData& data, std::span<const Complex> v_trace,
                        std::span<const Complex> v_neumann) {
  check_probe(data, v_trace, v_neumann);
  std::vector<Complex> integrand(data.grid.size());
  for (std::size_t i = 0; i < integrand.size(); ++i) {
    integrand[i] = v_trace[i] * data.neumann[i] - data.dirichlet[i] * v_neumann[i];
  }
  return boundary_integral(data.grid, integrand);
}

double reciprocity_gap_scale(const CauchyData& data, std::span<const Complex> v_trace,
                             std::span<const Complex> v_neumann) {
  check_probe(data, v_trace, v_neumann);
  double sum = 0.0;
  for (std::size_t i = 0; i < data.grid.size(); ++i) {
    sum += std::abs(v_trace[i] * data.neumann[i]) + std::abs(data.dirichlet[i] * v_neumann[i]);
  }
  return data.grid.weight * sum;
}

}  // namespace rgap
