#pragma once

#include <span>
#include <string>
#include <vector>

#include "rgap/geometry.hpp"
#include "rgap/types.hpp"

namespace rgap {

/// Paired boundary traces (u, d_nu u) of one excitation on a boundary grid.
struct CauchyData {
  BoundaryGrid grid;
  std::vector<Complex> dirichlet;
  std::vector<Complex> neumann;
  std::string label;
};

/// Throws InvalidArgument unless both traces match the grid and are finite.
void check_cauchy_data(const CauchyData& data);

/// R[v] = integral over the boundary of (v d_nu u - u d_nu v).
///
/// The pairing is bilinear: no conjugation is applied to either factor.
Complex reciprocity_gap(const CauchyData& data, std::span<const Complex> v_trace,
                        std::span<const Complex> v_neumann);

/// Sum of |v d_nu u| + |u d_nu v| times the weight: the magnitude scale of
/// the cancelling terms in reciprocity_gap, used to bound its roundoff.
double reciprocity_gap_scale(const CauchyData& data, std::span<const Complex> v_trace,
                             std::span<const Complex> v_neumann);

}  // namespace rgap
