#pragma once

#include <vector>

namespace oscsteer::specfun {

// Factorial growth bound for polynomial degrees.
inline constexpr int kMaxDegree = 64;

// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x);

// Laguerre polynomial L_n(x).
double laguerre(int n, double x);

// Binomial coefficient C(a, j) = a (a-1) ... (a-j+1) / j! for any integer a,
// zero for j < 0.
double generalized_binomial(long a, int j);

// Jacobi polynomial P_n^(alpha,beta)(z) from the explicit finite sum
//   sum_s C(n+alpha, n-s) C(n+beta, s) ((z-1)/2)^s ((z+1)/2)^(n-s),
// which stays well defined for negative integer parameters.
double jacobi_negparam(int n, long alpha, long beta, double z);

// The binomial products C(n+alpha, n-s) C(n+beta, s), s = 0..n, of that sum.
std::vector<double> jacobi_sum_coefficients(int n, long alpha, long beta);

// Three-term recurrence for alpha, beta > -1 (cross-check path).
double jacobi(int n, double alpha, double beta, double z);

}  // namespace oscsteer::specfun
