#pragma once

#include "rgap/types.hpp"

// Cylindrical Bessel and Hankel functions of orders 0 and 1 for real
// arguments. Ascending power series below the crossover, Hankel asymptotic
// expansion above it.

namespace rgap::specfun {

inline constexpr double kMaxArgument = 200.0;
inline constexpr double kSeriesCrossover = 12.0;

/// J_order(x) for order in {0, 1} and 0 <= x <= kMaxArgument.
double bessel_j(int order, double x);

/// Y_order(x) for order in {0, 1} and 0 < x <= kMaxArgument.
double bessel_y(int order, double x);

/// H^(1)_order(x) = J_order(x) + i Y_order(x).
Complex hankel1(int order, double x);

namespace detail {

// Branch kernels, exposed so the seam between them can be tested.
double j_series(int order, double x);
double y_series(int order, double x);
void asymptotic(int order, double x, double& j, double& y);

}  // namespace detail

}  // namespace rgap::specfun
