#include "kdtli/specfun.hpp"

#include <cmath>
#include <cstdlib>

#include "kdtli/constants.hpp"
#include "kdtli/errors.hpp"

namespace kdtli::specfun {

namespace {

// I_n power series without the x <= 50 domain cap; used by the scaled variant.
double bessel_i_series_unchecked(int n, double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  for (int k = 1; k <= n; ++k) term *= 0.5 * x / k;  // (x/2)^n / n!
  double sum = term;
  for (int k = 1; k < 400; ++k) {
    term *= q / (static_cast<double>(k) * (n + k));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

}  // namespace

double bessel_j_series(int n, double x, const SeriesConfig& cfg) {
  if (n < 0) throw DomainError("bessel_j: order must be >= 0");
  if (cfg.max_terms < 8) throw DomainError("bessel_j: max_terms must be >= 8");
  if (cfg.abs_tol <= 0.0) throw DomainError("bessel_j: abs_tol must be > 0");
  const double q = 0.25 * x * x;
  double term = 1.0;
  for (int k = 1; k <= n; ++k) term *= 0.5 * x / k;
  double sum = term;
  for (int k = 1; k < cfg.max_terms; ++k) {
    term *= -q / (static_cast<double>(k) * (n + k));
    sum += term;
    if (std::abs(term) < cfg.abs_tol) break;
  }
  return sum;
}

double bessel_j_recurrence(int n, double x) {
  if (n < 0) throw DomainError("bessel_j: order must be >= 0");
  const double ax = std::abs(x);
  if (ax == 0.0) return n == 0 ? 1.0 : 0.0;

  // Miller's algorithm: start well above the turning point, recur downward
  // with an arbitrary scale, normalize with J0 + 2*sum_{k>=1} J_{2k} = 1.
  int m = static_cast<int>(ax + 10.0 * std::cbrt(ax)) + 36;
  if (m < n + 36) m = n + 36;
  m += m & 1;

  const double inv_ax = 1.0 / ax;
  double jp = 0.0;       // J_{k+1} (scaled)
  double jc = 1e-30;     // J_k (scaled)
  double even_sum = 0.0;
  double result = 0.0;
  for (int k = m; k >= 1; --k) {
    const double jm = 2.0 * k * inv_ax * jc - jp;
    jp = jc;
    jc = jm;  // J_{k-1}
    if (std::abs(jc) > 1e250) {
      jc *= 1e-250;
      jp *= 1e-250;
      even_sum *= 1e-250;
      result *= 1e-250;
    }
    const int order = k - 1;
    if (order > 0 && (order & 1) == 0) even_sum += jc;
    if (order == n) result = jc;
  }
  const double norm = jc + 2.0 * even_sum;  // jc holds scaled J_0
  double value = result / norm;
  if (x < 0.0 && (n & 1)) value = -value;
  return value;
}

double bessel_j(int n, double x, const SeriesConfig& cfg) {
  if (n < 0) throw DomainError("bessel_j: order must be >= 0");
  if (std::abs(x) > 1e4) throw DomainError("bessel_j: |x| must be <= 1e4");
  if (std::abs(x) <= 10.0) return bessel_j_series(n, x, cfg);
  return bessel_j_recurrence(n, x);
}

double bessel_i(int n, double x, const SeriesConfig& cfg) {
  if (n < 0) throw DomainError("bessel_i: order must be >= 0");
  if (x < 0.0) throw DomainError("bessel_i: x must be >= 0");
  if (x > 50.0) throw DomainError("bessel_i: x must be <= 50");
  if (x <= 30.0) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    for (int k = 1; k <= n; ++k) term *= 0.5 * x / k;
    double sum = term;
    for (int k = 1; k < cfg.max_terms; ++k) {
      term *= q / (static_cast<double>(k) * (n + k));
      sum += term;
      if (term < cfg.abs_tol * (1.0 + std::abs(sum))) break;
    }
    return sum;
  }
  return bessel_i_scaled(n, x) * std::exp(x);
}

double bessel_i_scaled(int n, double x) {
  if (n < 0) throw DomainError("bessel_i_scaled: order must be >= 0");
  if (x < 0.0) throw DomainError("bessel_i_scaled: x must be >= 0");
  if (x <= 30.0) return std::exp(-x) * bessel_i_series_unchecked(n, x);
  // Large-argument expansion, truncated at the smallest term.
  const double mu = 4.0 * n * n;
  double term = 1.0;
  double sum = 1.0;
  double prev = std::abs(term);
  for (int k = 1; k <= 40; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (8.0 * k * x);
    if (std::abs(term) >= prev) break;
    prev = std::abs(term);
    sum += term;
    if (std::abs(term) < 1e-17) break;
  }
  return sum / std::sqrt(two_pi * x);
}

double h_entire(double u) {
  if (std::abs(u) > 2500.0) throw DomainError("h_entire: |u| must be <= 2500");
  if (std::abs(u) <= 1.0) return u * h_entire_over_u(u);
  if (u > 0.0) return bessel_j(2, std::sqrt(u));
  return -bessel_i(2, std::sqrt(-u));
}

double h_entire_over_u(double u) {
  if (std::abs(u) > 2500.0) throw DomainError("h_entire_over_u: |u| must be <= 2500");
  if (std::abs(u) <= 1.0) {
    double term = 0.125;  // 1 / (4 * 0! * 2!)
    double sum = term;
    for (int k = 1; k < 40; ++k) {
      term *= -u / (4.0 * k * (k + 2));
      sum += term;
      if (std::abs(term) < 1e-17) break;
    }
    return sum;
  }
  if (u > 0.0) return bessel_j(2, std::sqrt(u)) / u;
  return bessel_i(2, std::sqrt(-u)) / (-u);
}

double sinc_pi(double y) {
  const double ay = std::abs(y);
  if (ay < 1e-4) {
    const double y2 = y * y;
    return 1.0 - y2 / 6.0 * (1.0 - y2 / 20.0);
  }
  return std::sin(y) / y;
}

}  // namespace kdtli::specfun
