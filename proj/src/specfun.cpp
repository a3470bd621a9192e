#include "rgap/specfun.hpp"

#include <cmath>
#include <string>

namespace rgap::specfun {
namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

void check_order(int order) {
  if (order != 0 && order != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "unsupported Bessel order " + std::to_string(order) + " (only 0 and 1)");
  }
}

void check_argument(double x, bool allow_zero) {
  if (!std::isfinite(x) || x < 0.0 || (!allow_zero && x == 0.0) || x > kMaxArgument) {
    throw Error(ErrorKind::Domain,
                "Bessel argument " + std::to_string(x) + " outside " +
                    (allow_zero ? "[0, " : "(0, ") + std::to_string(kMaxArgument) + "]");
  }
}

}  // namespace

namespace detail {

// sum_k (-1)^k (x/2)^(2k+n) / (k! (k+n)!)
double j_series(int order, double x) {
  const double q = -0.25 * x * x;
  double term = order == 0 ? 1.0 : 0.5 * x;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k + order));
    sum += term;
    if (std::abs(term) < 1e-18 && 2 * k > x) break;
  }
  return sum;
}

double y_series(int order, double x) {
  const double q = 0.25 * x * x;
  const double log_term = std::log(0.5 * x);
  if (order == 0) {
    // (2/pi)(ln(x/2) + gamma) J0 + (2/pi) sum_{k>=1} (-1)^(k+1) H_k q^k / (k!)^2
    double term = 1.0;
    double harmonic = 0.0;
    double sum = 0.0;
    for (int k = 1; k < 200; ++k) {
      term *= -q / (static_cast<double>(k) * static_cast<double>(k));
      harmonic += 1.0 / k;
      const double contrib = -harmonic * term;
      sum += contrib;
      if (std::abs(contrib) < 1e-18 && 2 * k > x) break;
    }
    return (2.0 / kPi) * ((log_term + kEulerGamma) * j_series(0, x) + sum);
  }
  // -2/(pi x) + (2/pi) ln(x/2) J1
  //   - (1/pi) sum_{k>=0} (psi(k+1) + psi(k+2)) (-q)^k (x/2) / (k! (k+1)!)
  double term = 0.5 * x;
  double harmonic = 0.0;  // H_k
  double sum = (2.0 * -kEulerGamma + 1.0) * term;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<double>(k) * static_cast<double>(k + 1));
    harmonic += 1.0 / k;
    const double psi_sum = 2.0 * (harmonic - kEulerGamma) + 1.0 / (k + 1);
    const double contrib = psi_sum * term;
    sum += contrib;
    if (std::abs(contrib) < 1e-18 && 2 * k > x) break;
  }
  return -2.0 / (kPi * x) + (2.0 / kPi) * log_term * j_series(1, x) - sum / kPi;
}

// Hankel expansion: J = sqrt(2/(pi x)) (P cos chi - Q sin chi),
// Y = sqrt(2/(pi x)) (P sin chi + Q cos chi), chi = x - (n/2 + 1/4) pi.
void asymptotic(int order, double x, double& j, double& y) {
  const double mu = 4.0 * order * order;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double previous = 1.0;
  for (int k = 1; k < 100; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    const double magnitude = std::abs(term);
    // Asymptotic series: stop at the smallest term.
    if (magnitude > previous) break;
    previous = magnitude;
    switch (k % 4) {
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
      default: p += term; break;
    }
    if (magnitude < 1e-17) break;
  }
  const double chi = x - (0.5 * order + 0.25) * kPi;
  const double scale = std::sqrt(2.0 / (kPi * x));
  const double c = std::cos(chi);
  const double s = std::sin(chi);
  j = scale * (p * c - q * s);
  y = scale * (p * s + q * c);
}

}  // namespace detail

double bessel_j(int order, double x) {
  check_order(order);
  check_argument(x, true);
  if (x <= kSeriesCrossover) return detail::j_series(order, x);
  double j = 0.0;
  double y = 0.0;
  detail::asymptotic(order, x, j, y);
  return j;
}

double bessel_y(int order, double x) {
  check_order(order);
  check_argument(x, false);
  if (x <= kSeriesCrossover) return detail::y_series(order, x);
  double j = 0.0;
  double y = 0.0;
  detail::asymptotic(order, x, j, y);
  return y;
}

Complex hankel1(int order, double x) {
  check_order(order);
  check_argument(x, false);
  if (x <= kSeriesCrossover) return {detail::j_series(order, x), detail::y_series(order, x)};
  double j = 0.0;
  double y = 0.0;
  detail::asymptotic(order, x, j, y);
  return {j, y};
}

}  // namespace rgap::specfun
