#include "oscsteer/steering.hpp"

#include <algorithm>
#include <cmath>

#include "oscsteer/errors.hpp"

namespace oscsteer {
namespace {

void check_mu(double mu) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) {
    throw ParameterError("mixing parameter must be non-negative");
  }
}

SteeringResult clamp(double raw_xy, double raw_yx) {
  SteeringResult r;
  r.s_xy_raw = raw_xy;
  r.s_yx_raw = raw_yx;
  r.s_xy = std::max(raw_xy, 0.0);
  r.s_yx = std::max(raw_yx, 0.0);
  r.delta = std::abs(r.s_xy - r.s_yx);
  return r;
}

}  // namespace

SteeringResult steering_from_ladder(const LadderMoments& l) {
  const double raw_xy = l.cross_mag_sq - (l.nx_ny + 0.5 * l.ny);
  const double raw_yx = l.cross_mag_sq - (l.nx_ny + 0.5 * l.nx);
  return clamp(raw_xy, raw_yx);
}

SteeringResult steering(const SystemParams& params, QuantumNumbers nm) {
  return steering_from_ladder(ladder_moments(params, nm));
}

double steering_weak_raw(QuantumNumbers nm, double mu) {
  validate(nm);
  check_mu(mu);
  const double n = nm.n;
  const double m = nm.m;
  const double mu2 = mu * mu;
  const double mix = 1.0 + mu2;
  return -(m + 2.0 * m * n - (m + n) * mu2 + (1.0 + 2.0 * m) * n * mu2 * mu2) / (2.0 * mix * mix);
}

double steering_weak_general(QuantumNumbers nm, double mu) {
  return std::max(steering_weak_raw(nm, mu), 0.0);
}

SteeringResult steering_weak(QuantumNumbers nm, double mu) {
  return clamp(steering_weak_raw(nm, mu), steering_weak_raw({nm.m, nm.n}, mu));
}

double steering_weak_single_mode(int n, double mu) {
  validate(QuantumNumbers{n, 0});
  check_mu(mu);
  const double mu2 = mu * mu;
  const double mix = 1.0 + mu2;
  return n * mu2 * (1.0 - mu2) / (2.0 * mix * mix);
}

SteeringSelection selection_rules(QuantumNumbers nm) {
  validate(nm);
  return {nm.n != 0 && nm.m == 0, nm.m != 0 && nm.n == 0};
}

}  // namespace oscsteer
