#include "oscsteer/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "oscsteer/errors.hpp"
#include "oscsteer/moments.hpp"
#include "oscsteer/specfun.hpp"

namespace oscsteer {

// Newton iteration on the orthonormal Hermite recurrence, with the usual
// asymptotic starting guesses for the largest roots.
QuadratureRule gauss_hermite(int order) {
  if (order < 1 || order > 400) throw ParameterError("Gauss-Hermite order must be in [1, 400]");
  const int n = order;
  const double pim4 = std::pow(std::numbers::pi, -0.25);
  std::vector<double> x(n), w(n);
  const int half = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * x[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * x[1];
    } else {
      z = 2.0 * z - x[i - 2];
    }
    double deriv = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = pim4;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      deriv = std::sqrt(2.0 * n) * p2;
      const double step = p1 / deriv;
      z -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = 2.0 / (deriv * deriv);
    w[n - 1 - i] = w[i];
  }
  if (n % 2 == 1) x[n / 2] = 0.0;

  QuadratureRule rule;
  rule.order = n;
  rule.nodes.assign(x.rbegin(), x.rend());
  rule.weights.assign(w.rbegin(), w.rend());
  return rule;
}

namespace {

// table[i][j] = integral of X^i P^j W_n(X, P), i, j <= max_power.
std::vector<std::vector<double>> mode_moment_table(int n, double vartheta, int max_power,
                                                   const QuadratureRule& rule) {
  const double root = std::sqrt(vartheta);
  std::vector<std::vector<double>> table(max_power + 1, std::vector<double>(max_power + 1, 0.0));
  for (int a = 0; a < rule.order; ++a) {
    const double t = rule.nodes[a];
    for (int b = 0; b < rule.order; ++b) {
      const double r = rule.nodes[b];
      // W_n is evaluated at X = t/sqrt(vartheta), P = sqrt(vartheta) r, where
      // its Gaussian factor equals the rule weight exp(-t^2 - r^2).
      const double core = mode_wigner(n, vartheta, t / root, r * root) * std::exp(t * t + r * r);
      const double wt = rule.weights[a] * rule.weights[b] * core;
      double ti = 1.0;
      for (int i = 0; i <= max_power; ++i) {
        double rj = 1.0;
        for (int j = 0; j <= max_power; ++j) {
          table[i][j] += wt * ti * rj;
          rj *= r;
        }
        ti *= t;
      }
    }
  }
  for (int i = 0; i <= max_power; ++i) {
    for (int j = 0; j <= max_power; ++j) table[i][j] *= std::pow(vartheta, 0.5 * (j - i));
  }
  return table;
}

// Coefficients of (c1 A + c2 B)^a (c3 A + c4 B)^b as poly[i] for A^i B^(a+b-i).
std::vector<double> expand_pair(int a, double c1, double c2, int b, double c3, double c4) {
  std::vector<double> poly(a + b + 1, 0.0);
  for (int i = 0; i <= a; ++i) {
    const double ci = specfun::generalized_binomial(a, i) * std::pow(c1, i) * std::pow(c2, a - i);
    for (int j = 0; j <= b; ++j) {
      const double cj = specfun::generalized_binomial(b, j) * std::pow(c3, j) * std::pow(c4, b - j);
      poly[i + j] += ci * cj;
    }
  }
  return poly;
}

}  // namespace

double moment_oracle(const SystemParams& params, QuantumNumbers nm, Monomial mono,
                     int extra_order) {
  validate(nm);
  if (mono.a < 0 || mono.b < 0 || mono.c < 0 || mono.d < 0) {
    throw ParameterError("monomial exponents must be non-negative");
  }
  const int degree = mono.a + mono.b + mono.c + mono.d;
  if (degree > 8) throw ParameterError("moment oracle supports total degree <= 8");
  const NormalModes modes = diagonalize(params);
  const double c = std::cos(modes.theta);
  const double s = std::sin(modes.theta);

  // x = cX - sY, y = sX + cY; p, q likewise in (P, Q).
  const std::vector<double> pos = expand_pair(mono.a, c, -s, mono.c, s, c);
  const std::vector<double> mom = expand_pair(mono.b, c, -s, mono.d, s, c);
  const int pos_deg = mono.a + mono.c;
  const int mom_deg = mono.b + mono.d;

  const int order = (degree + 2 * std::max(nm.n, nm.m)) / 2 + 1 + std::max(extra_order, 0);
  const QuadratureRule rule = gauss_hermite(order);
  const int max_power = std::max(pos_deg, mom_deg);
  const auto tx = mode_moment_table(nm.n, modes.vartheta_x, max_power, rule);
  const auto ty = mode_moment_table(nm.m, modes.vartheta_y, max_power, rule);

  double total = 0.0;
  for (int i = 0; i <= pos_deg; ++i) {
    if (pos[i] == 0.0) continue;
    for (int j = 0; j <= mom_deg; ++j) {
      if (mom[j] == 0.0) continue;
      // X^i Y^(pos_deg-i) P^j Q^(mom_deg-j)
      total += pos[i] * mom[j] * tx[i][j] * ty[pos_deg - i][mom_deg - j];
    }
  }
  return total;
}

int default_schmidt_nodes(QuantumNumbers nm) { return 2 * (nm.n + nm.m) + 24; }

SchmidtOracleResult schmidt_oracle(const SystemParams& params, QuantumNumbers nm,
                                   int nodes_per_axis, bool transpose) {
  validate(nm);
  const NormalModes modes = diagonalize(params);
  // Ground-state widths: the Gaussian envelope of every Psi_(n,m) then equals
  // the rule weight and the remainder is polynomial up to the cross term.
  const MomentSet mom = second_and_fourth_moments(params, {0, 0});
  const int nodes = nodes_per_axis > 0 ? nodes_per_axis : default_schmidt_nodes(nm);
  const QuadratureRule rule = gauss_hermite(nodes);

  const double sx = std::sqrt(2.0 * mom.xx);
  const double sy = std::sqrt(2.0 * mom.yy);
  std::vector<double> wx(nodes), wy(nodes);
  for (int i = 0; i < nodes; ++i) {
    const double t = rule.nodes[i];
    const double base = rule.weights[i] * std::exp(t * t);
    wx[i] = std::sqrt(sx * base);
    wy[i] = std::sqrt(sy * base);
  }

  Eigen::MatrixXd sample(nodes, nodes);
  for (int i = 0; i < nodes; ++i) {
    for (int j = 0; j < nodes; ++j) {
      const double x = sx * rule.nodes[i];
      const double y = sy * rule.nodes[j];
      const double v = eigenfunction_lab(modes, nm, x, y) * wx[i] * wy[j];
      if (transpose) {
        sample(j, i) = v;
      } else {
        sample(i, j) = v;
      }
    }
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(sample);
  const Eigen::VectorXd sigma = svd.singularValues();

  SchmidtOracleResult out;
  out.singular_values.assign(sigma.data(), sigma.data() + sigma.size());
  for (double sv : out.singular_values) {
    const double p = sv * sv;
    out.norm += p;
    out.purity += p * p;
    if (p > 1e-300) out.von_neumann -= p * std::log(p);
  }
  if (std::abs(out.norm - 1.0) > 5e-7) {
    std::ostringstream os;
    os.precision(17);
    os << "Schmidt grid of " << nodes << " nodes loses normalization (norm = " << out.norm
       << "); raise nodes_per_axis";
    throw NumericalError(os.str());
  }
  out.linear_entropy = 1.0 - out.purity;
  return out;
}

double global_purity_check(const SystemParams& params, QuantumNumbers nm,
                           const RotatedWigner& wigner, int extra_order) {
  validate(nm);
  const NormalModes modes = diagonalize(params);
  const RotatedWigner w = wigner ? wigner : [&](const RotatedPhasePoint& pt) {
    return wigner_rotated(modes, nm, pt);
  };
  // W^2 carries exp(-2R) per mode and a Laguerre square of degree 4n in
  // the scaled coordinates.
  const int order = 2 * std::max(nm.n, nm.m) + 1 + std::max(extra_order, 0);
  const QuadratureRule rule = gauss_hermite(order);
  const double sx = std::sqrt(2.0 * modes.vartheta_x);
  const double sy = std::sqrt(2.0 * modes.vartheta_y);
  const double px = std::sqrt(modes.vartheta_x / 2.0);
  const double py = std::sqrt(modes.vartheta_y / 2.0);

  double sum = 0.0;
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        for (int d = 0; d < order; ++d) {
          const double ta = rule.nodes[a], tb = rule.nodes[b], tc = rule.nodes[c], td = rule.nodes[d];
          const RotatedPhasePoint pt{ta / sx, tb * px, tc / sy, td * py};
          const double value = w(pt);
          const double weight = rule.weights[a] * rule.weights[b] * rule.weights[c] * rule.weights[d];
          sum += weight * value * value * std::exp(ta * ta + tb * tb + tc * tc + td * td);
        }
  // dX dP dY dQ = dta dtb dtc dtd / 4
  return 4.0 * std::numbers::pi * std::numbers::pi * sum / 4.0;
}

double wigner_normalization(const SystemParams& params, QuantumNumbers nm, int extra_order) {
  validate(nm);
  const NormalModes modes = diagonalize(params);
  const int order = std::max(nm.n, nm.m) + 1 + std::max(extra_order, 0);
  const QuadratureRule rule = gauss_hermite(order);
  const auto tx = mode_moment_table(nm.n, modes.vartheta_x, 0, rule);
  const auto ty = mode_moment_table(nm.m, modes.vartheta_y, 0, rule);
  return tx[0][0] * ty[0][0];
}

}  // namespace oscsteer
