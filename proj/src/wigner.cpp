#include "oscsteer/wigner.hpp"

#include <cmath>
#include <numbers>

#include "oscsteer/specfun.hpp"

namespace oscsteer {

RotatedPhasePoint to_normal_frame(const PhasePoint& pt, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {pt.x * c + pt.y * s, pt.p * c + pt.q * s, -pt.x * s + pt.y * c, -pt.p * s + pt.q * c};
}

PhasePoint to_lab_frame(const RotatedPhasePoint& pt, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {pt.X * c - pt.Y * s, pt.P * c - pt.Q * s, pt.X * s + pt.Y * c, pt.P * s + pt.Q * c};
}

double mode_wavefunction(int n, double vartheta, double X) {
  const double xi = std::sqrt(vartheta) * X;
  // 1/sqrt(2^n n!) folded into the exponent keeps large n finite.
  const double log_norm = -0.5 * (n * std::numbers::ln2 + std::lgamma(n + 1.0));
  return std::pow(vartheta / std::numbers::pi, 0.25) * specfun::hermite(n, xi) *
         std::exp(log_norm - 0.5 * xi * xi);
}

double eigenfunction(const NormalModes& modes, QuantumNumbers nm, double X, double Y) {
  validate(nm);
  return mode_wavefunction(nm.n, modes.vartheta_x, X) * mode_wavefunction(nm.m, modes.vartheta_y, Y);
}

double eigenfunction_lab(const NormalModes& modes, QuantumNumbers nm, double x, double y) {
  const RotatedPhasePoint r = to_normal_frame({x, 0.0, y, 0.0}, modes.theta);
  return eigenfunction(modes, nm, r.X, r.Y);
}

double mode_wigner(int n, double vartheta, double X, double P) {
  const double radius = vartheta * X * X + P * P / vartheta;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign / std::numbers::pi * std::exp(-radius) * specfun::laguerre(n, 2.0 * radius);
}

double wigner_rotated(const NormalModes& modes, QuantumNumbers nm, const RotatedPhasePoint& pt) {
  validate(nm);
  return mode_wigner(nm.n, modes.vartheta_x, pt.X, pt.P) *
         mode_wigner(nm.m, modes.vartheta_y, pt.Y, pt.Q);
}

double wigner_lab(const NormalModes& modes, QuantumNumbers nm, const PhasePoint& pt) {
  return wigner_rotated(modes, nm, to_normal_frame(pt, modes.theta));
}

}  // namespace oscsteer
