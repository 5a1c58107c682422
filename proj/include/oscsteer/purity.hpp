#pragma once

#include <vector>

#include "oscsteer/model.hpp"
#include "oscsteer/series.hpp"

namespace oscsteer {

// Marginal purity Tr(rho_x^2) = Tr(rho_y^2) of Psi_(n,m) and S_L = 1 - purity.
struct PurityResult {
  double purity = 1.0;
  double linear_entropy = 0.0;
};

// Weak-coupling Schmidt weights lambda_0 .. lambda_{n+m}.
struct SchmidtSpectrum {
  std::vector<double> lambdas;
};

// Generating function of the marginal purity in (u, s, v, w):
//   2 / ((1-u)(1-s)(1-v)(1-w) w1 w2),
//   w^2 = f(u,s) Omega(v,w) + f(v,w) Omega(u,s),
//   f(u,s) = tx ty g(u) g(s),  Omega(u,s) = (mu^2 tx g(u) + ty g(s)) / (1 + mu^2),
//   g(k) = (1+k)/(1-k),
// with (tx, ty) = (vartheta_x, vartheta_y) for w1 and their inverses for w2.
// The purity of Psi_(n,m) is its [u^n s^m v^n w^m] coefficient.
Jet4 purity_generating_jet(const NormalModes& modes, QuantumNumbers nm);

PurityResult purity_exact(const SystemParams& params, QuantumNumbers nm);

// Ground state: (1 + mu^2 (tx - ty)^2 / ((1+mu^2)^2 tx ty))^(-1/2).
PurityResult purity_ground_closed(const SystemParams& params);

// Schmidt weights in the equal-frequency approximation, as a function of the
// mixing |mu| only. mu = 0 gives the product state (unit weight at k = n).
SchmidtSpectrum makarov_schmidt(QuantumNumbers nm, double mu);

// 1 - sum_k lambda_k^2.
double makarov_entropy(QuantumNumbers nm, double mu);

// S_L(exact) - S_L(Schmidt approximation) at the mixing of params.
double entropy_gap(const SystemParams& params, QuantumNumbers nm);

}  // namespace oscsteer
