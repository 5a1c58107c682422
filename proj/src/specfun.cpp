#include "oscsteer/specfun.hpp"

#include <cmath>
#include <string>

#include "oscsteer/errors.hpp"

namespace oscsteer::specfun {
namespace {

void check_degree(int n) {
  if (n < 0 || n > kMaxDegree) {
    throw ParameterError("polynomial degree " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxDegree) + "]");
  }
}

}  // namespace

double hermite(int n, double x) {
  check_degree(n);
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(int n, double x) {
  check_degree(n);
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2 * k + 1 - x) * cur - k * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

double generalized_binomial(long a, int j) {
  if (j < 0) return 0.0;
  double c = 1.0;
  for (int i = 0; i < j; ++i) {
    c *= static_cast<double>(a - i) / (i + 1);
  }
  return c;
}

std::vector<double> jacobi_sum_coefficients(int n, long alpha, long beta) {
  check_degree(n);
  std::vector<double> c(n + 1);
  for (int s = 0; s <= n; ++s) {
    c[s] = generalized_binomial(n + alpha, n - s) * generalized_binomial(n + beta, s);
  }
  return c;
}

double jacobi_negparam(int n, long alpha, long beta, double z) {
  const std::vector<double> c = jacobi_sum_coefficients(n, alpha, beta);
  const double lo = 0.5 * (z - 1.0);
  const double hi = 0.5 * (z + 1.0);
  double sum = 0.0;
  for (int s = 0; s <= n; ++s) {
    if (c[s] == 0.0) continue;
    sum += c[s] * std::pow(lo, s) * std::pow(hi, n - s);
  }
  return sum;
}

double jacobi(int n, double alpha, double beta, double z) {
  check_degree(n);
  if (!(alpha > -1.0 && beta > -1.0)) {
    throw ParameterError("recurrence Jacobi requires alpha, beta > -1");
  }
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 0.5 * (alpha - beta) + 0.5 * (alpha + beta + 2.0) * z;
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + alpha + beta;
    const double a1 = 2.0 * k * (k + alpha + beta) * (s - 2.0);
    const double a2 = (s - 1.0) * (alpha * alpha - beta * beta);
    const double a3 = (s - 2.0) * (s - 1.0) * s;
    const double a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s;
    const double next = ((a2 + a3 * z) * cur - a4 * prev) / a1;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace oscsteer::specfun
