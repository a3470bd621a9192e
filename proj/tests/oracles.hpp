#pragma once

// Independent reference evaluations used only by the tests.

#include <cmath>
#include <vector>

namespace oracle {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kGammaL = 0.577215664901532860606512090082402431L;

/// J_0..J_{count-1} by Miller's backward recurrence, normalized with
/// J0 + 2 sum J_{2k} = 1.
inline std::vector<long double> bessel_j_sequence(double x, int count) {
  if (x == 0.0) {
    std::vector<long double> j(static_cast<std::size_t>(std::max(count, 2)), 0.0L);
    j[0] = 1.0L;
    return j;
  }
  const long double xl = x;
  int start = static_cast<int>(x + 40.0 + 12.0 * std::sqrt(x)) + count;
  if (start % 2 != 0) ++start;
  std::vector<long double> j(static_cast<std::size_t>(start) + 2, 0.0L);
  j[static_cast<std::size_t>(start)] = 1e-30L;
  for (int k = start; k >= 1; --k) {
    j[static_cast<std::size_t>(k - 1)] = (2.0L * k / xl) * j[static_cast<std::size_t>(k)] - j[static_cast<std::size_t>(k + 1)];
    if (std::fabs(j[static_cast<std::size_t>(k - 1)]) > 1e300L) {
      for (auto& v : j) v *= 1e-300L;
    }
  }
  long double norm = j[0];
  for (int k = 2; k <= start; k += 2) norm += 2.0L * j[static_cast<std::size_t>(k)];
  for (auto& v : j) v /= norm;
  j.resize(static_cast<std::size_t>(std::max(count, 2)));
  return j;
}

inline long double bessel_j(int order, double x) {
  return bessel_j_sequence(x, 2)[static_cast<std::size_t>(order)];
}

/// Neumann series for Y0 and Y1 built on the Miller sequence.
inline long double bessel_y(int order, double x) {
  const int terms = static_cast<int>(x + 40.0 + 12.0 * std::sqrt(x));
  const auto j = bessel_j_sequence(x, 2 * terms + 3);
  const long double lead = std::log(x / 2.0L) + kGammaL;
  long double sum = 0.0L;
  if (order == 0) {
    for (int k = 1; k <= terms; ++k) {
      sum += ((k % 2 == 0) ? 1.0L : -1.0L) * j[static_cast<std::size_t>(2 * k)] / k;
    }
    return (2.0L / kPiL) * lead * j[0] - (4.0L / kPiL) * sum;
  }
  for (int k = 1; k <= terms; ++k) {
    sum += ((k % 2 == 0) ? 1.0L : -1.0L) *
           (j[static_cast<std::size_t>(2 * k - 1)] - j[static_cast<std::size_t>(2 * k + 1)]) / k;
  }
  return -(2.0L / kPiL) * j[0] / x + (2.0L / kPiL) * lead * j[1] + (2.0L / kPiL) * sum;
}

}  // namespace oracle
