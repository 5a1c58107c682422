#include "oscsteer/purity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oscsteer/errors.hpp"
#include "oscsteer/specfun.hpp"

namespace oscsteer {
namespace {

constexpr double kPurityOvershoot = 1e-9;

PurityResult make_purity(double purity) {
  if (!(purity > 0.0) || purity > 1.0 + kPurityOvershoot) {
    std::ostringstream os;
    os << "marginal purity " << purity << " outside (0, 1]";
    throw NumericalError(os.str());
  }
  purity = std::min(purity, 1.0);
  return {purity, 1.0 - purity};
}

}  // namespace

Jet4 purity_generating_jet(const NormalModes& modes, QuantumNumbers nm) {
  validate(nm);
  const Jet4::Orders orders{nm.n, nm.m, nm.n, nm.m};
  const double mu2 = modes.mu * modes.mu;

  std::array<Jet4, 4> ratio{Jet4(orders), Jet4(orders), Jet4(orders), Jet4(orders)};
  Jet4 geometric = Jet4::constant(orders, 1.0);
  for (int v = 0; v < 4; ++v) {
    const Jet4 kappa = Jet4::variable(orders, v);
    const Jet4 inv = (1.0 - kappa).reciprocal();
    ratio[v] = (1.0 + kappa) * inv;
    geometric = geometric * inv;
  }
  const Jet4& gu = ratio[0];
  const Jet4& gs = ratio[1];
  const Jet4& gv = ratio[2];
  const Jet4& gw = ratio[3];

  auto root = [&](double tx, double ty) {
    const Jet4 f_us = (tx * ty) * (gu * gs);
    const Jet4 f_vw = (tx * ty) * (gv * gw);
    const Jet4 omega_us = (mu2 * tx / (1.0 + mu2)) * gu + (ty / (1.0 + mu2)) * gs;
    const Jet4 omega_vw = (mu2 * tx / (1.0 + mu2)) * gv + (ty / (1.0 + mu2)) * gw;
    return (f_us * omega_vw + f_vw * omega_us).sqrt();
  };
  const double tx = modes.vartheta_x;
  const double ty = modes.vartheta_y;
  const Jet4 denom = root(tx, ty) * root(1.0 / tx, 1.0 / ty);
  return 2.0 * (geometric * denom.reciprocal());
}

PurityResult purity_exact(const SystemParams& params, QuantumNumbers nm) {
  validate(nm);
  const NormalModes modes = diagonalize(params);
  if (modes.mu == 0.0) {
    return {1.0, 0.0};  // unrotated product state
  }
  const Jet4 jet = purity_generating_jet(modes, nm);
  return make_purity(jet.coefficient(nm.n, nm.m, nm.n, nm.m));
}

PurityResult purity_ground_closed(const SystemParams& params) {
  const NormalModes modes = diagonalize(params);
  const double mu2 = modes.mu * modes.mu;
  const double tx = modes.vartheta_x;
  const double ty = modes.vartheta_y;
  const double gap = tx - ty;
  const double mix = 1.0 + mu2;
  return make_purity(1.0 / std::sqrt(1.0 + mu2 * gap * gap / (mix * mix * tx * ty)));
}

// With t = mu^2 and z = -(2+t)/t, (z-1)/2 = -(1+t)/t and (z+1)/2 = -1/t, so
//   P_n(z) = (-1)^n t^-n q(t),  q(t) = sum_s c_s (1+t)^s,
//   lambda_k = [n! m! / (k! (n+m-k)!)] t^(k-n) q(t)^2 / (1+t)^(n+m).
// Expanding q in powers of t keeps the integer coefficients exact and avoids
// the cancellation of evaluating P_n at a huge negative argument for small mu.
SchmidtSpectrum makarov_schmidt(QuantumNumbers nm, double mu) {
  validate(nm);
  if (!(mu >= 0.0) || !std::isfinite(mu)) {
    throw ParameterError("mixing parameter must be non-negative");
  }
  const int n = nm.n;
  const int m = nm.m;
  const int total = n + m;
  const double t = mu * mu;
  const long alpha = -(1L + m + n);

  SchmidtSpectrum out;
  out.lambdas.assign(total + 1, 0.0);
  for (int k = 0; k <= total; ++k) {
    const std::vector<double> c = specfun::jacobi_sum_coefficients(n, alpha, m - k);
    std::vector<double> q(n + 1, 0.0);
    for (int j = 0; j <= n; ++j) {
      for (int s = j; s <= n; ++s) q[j] += c[s] * specfun::generalized_binomial(s, j);
    }
    std::vector<double> q2(2 * n + 1, 0.0);
    double scale = 0.0;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) q2[i + j] += q[i] * q[j];
    }
    for (double v : q2) scale = std::max(scale, std::abs(v));

    const int shift = k - n;
    double value = 0.0;
    for (int d = 0; d <= 2 * n; ++d) {
      const int e = d + shift;
      if (e < 0) {
        if (std::abs(q2[d]) > 1e-12 * scale) {
          throw NumericalError("Schmidt weight has a pole at mu = 0");
        }
        continue;
      }
      value += q2[d] * (e == 0 ? 1.0 : std::pow(t, e));
    }
    const double comb =
        specfun::generalized_binomial(total, k) / specfun::generalized_binomial(total, n);
    out.lambdas[k] = comb * value / std::pow(1.0 + t, total);
  }
  return out;
}

double makarov_entropy(QuantumNumbers nm, double mu) {
  const SchmidtSpectrum spec = makarov_schmidt(nm, mu);
  double sum_sq = 0.0;
  for (double l : spec.lambdas) sum_sq += l * l;
  return 1.0 - sum_sq;
}

double entropy_gap(const SystemParams& params, QuantumNumbers nm) {
  const NormalModes modes = diagonalize(params);
  return purity_exact(params, nm).linear_entropy - makarov_entropy(nm, std::abs(modes.mu));
}

}  // namespace oscsteer
