#pragma once

#include <functional>
#include <vector>

#include "oscsteer/model.hpp"
#include "oscsteer/wigner.hpp"

namespace oscsteer {

// Gauss-Hermite rule for integrals against exp(-t^2); exact for polynomials
// of degree <= 2*order - 1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
};

QuadratureRule gauss_hermite(int order);

// Exponents of the lab-frame monomial x^a p^b y^c q^d.
struct Monomial {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
};

// <x^a p^b y^c q^d> as a phase-space average over W_(n,m). The monomial is
// expanded through the rotation into normal-mode monomials, whose averages
// factor into two single-mode integrals of polynomial x Gaussian form. Each is
// done by a Gauss-Hermite rule of at least the exactness order, raised further
// by extra_order.
double moment_oracle(const SystemParams& params, QuantumNumbers nm, Monomial mono,
                     int extra_order = 0);

struct SchmidtOracleResult {
  std::vector<double> singular_values;  // descending
  double norm = 0.0;                    // sum sigma_k^2
  double purity = 0.0;                  // sum sigma_k^4
  double linear_entropy = 0.0;
  double von_neumann = 0.0;  // -sum sigma^2 log sigma^2
};

// Default grid size for Schmidt decompositions: 2(n+m) + 24 nodes per axis.
int default_schmidt_nodes(QuantumNumbers nm);

// Samples Psi_(n,m)(x, y) on a Gauss-Hermite tensor grid in lab coordinates,
// scaled per axis by sqrt(2 <x^2>) and sqrt(2 <y^2>) of the ground state, and decomposes
// M_ij = Psi(x_i, y_j) sqrt(W_i W_j) by SVD. Throws NumericalError if the
// discrete norm drifts from 1 by more than 5e-7. nodes_per_axis <= 0 selects
// the default; transpose swaps the roles of x and y.
SchmidtOracleResult schmidt_oracle(const SystemParams& params, QuantumNumbers nm,
                                   int nodes_per_axis = 0, bool transpose = false);

using RotatedWigner = std::function<double(const RotatedPhasePoint&)>;

// 4 pi^2 times the integral of W^2 over phase space, from a tensor rule in
// normal-mode coordinates (exact: the integrand is polynomial x Gaussian).
// Defaults to wigner_rotated for (params, nm); a custom integrand may be
// passed for negative controls.
double global_purity_check(const SystemParams& params, QuantumNumbers nm,
                           const RotatedWigner& wigner = {}, int extra_order = 0);

// Integral of W over phase space (normalization), same exact rule.
double wigner_normalization(const SystemParams& params, QuantumNumbers nm, int extra_order = 0);

}  // namespace oscsteer
