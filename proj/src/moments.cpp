#include "oscsteer/moments.hpp"

#include <cmath>

namespace oscsteer {

MomentSet second_and_fourth_moments(const SystemParams& params, QuantumNumbers nm) {
  validate(nm);
  const NormalModes modes = diagonalize(params);
  const double mu2 = modes.mu * modes.mu;
  const double mu4 = mu2 * mu2;
  const double mix = 1.0 + mu2;
  const double mix2 = mix * mix;
  const double vx = modes.vartheta_x;
  const double vy = modes.vartheta_y;
  const double n = nm.n;
  const double m = nm.m;

  const double an = 1.0 + 2.0 * n;  // 1 + 2n
  const double am = 1.0 + 2.0 * m;
  const double bn = 1.0 + 2.0 * n * (1.0 + n);  // 1 + 2n(1+n)
  const double bm = 1.0 + 2.0 * m * (1.0 + m);
  const double amn = am * an;
  const double shear = mu4 - 4.0 * mu2 + 1.0;
  const double quartic_mix = 0.5 * (1.0 + m + m * m + n + n * n) * mu2 / mix2;

  MomentSet s;
  s.xx = an / (2.0 * vx * mix) + am * mu2 / (2.0 * vy * mix);
  s.yy = an * mu2 / (2.0 * vx * mix) + am / (2.0 * vy * mix);
  s.pp = an * vx / (2.0 * mix) + am * vy * mu2 / (2.0 * mix);
  s.qq = an * mu2 * vx / (2.0 * mix) + am * vy / (2.0 * mix);
  s.xy = modes.mu / (2.0 * mix) * (an / vx - am / vy);
  s.pq = modes.mu / (2.0 * mix) * (an * vx - am * vy);
  s.xxyy = (3.0 * (bm * vx * vx + bn * vy * vy) * mu2 + amn * vx * vy * shear) /
           (4.0 * vx * vx * vy * vy * mix2);
  s.ppqq = (3.0 * (bm * vy * vy + bn * vx * vx) * mu2 + amn * vx * vy * shear) / (4.0 * mix2);
  s.xxqq = quartic_mix + amn * (mu4 * vx * vx + vy * vy) / (4.0 * mix2 * vx * vy);
  s.yypp = quartic_mix + amn * (mu4 * vy * vy + vx * vx) / (4.0 * mix2 * vx * vy);
  return s;
}

UncertaintyAreas uncertainty_areas(const SystemParams& params, QuantumNumbers nm) {
  validate(nm);
  const NormalModes modes = diagonalize(params);
  const double mu2 = modes.mu * modes.mu;
  const double vx = modes.vartheta_x;
  const double vy = modes.vartheta_y;
  const double an = 2.0 * nm.n + 1.0;
  const double am = 2.0 * nm.m + 1.0;
  const double denom = 4.0 * (mu2 + 1.0) * (mu2 + 1.0) * vx * vy;
  const double ax2 = (vx * mu2 * am + an * vy) * (vy * mu2 * am + an * vx) / denom;
  const double ay2 = (vx * am + mu2 * an * vy) * (vy * am + mu2 * an * vx) / denom;
  return {std::sqrt(ax2), std::sqrt(ay2)};
}

ExcitationNumbers excitation_numbers(const SystemParams& params, QuantumNumbers nm) {
  validate(nm);
  const NormalModes modes = diagonalize(params);
  const double mu2 = modes.mu * modes.mu;
  const double mix = 1.0 + mu2;
  const double wx = params.omega_x;
  const double wy = params.omega_y;
  const double vx = modes.vartheta_x;
  const double vy = modes.vartheta_y;
  const double an = 1.0 + 2.0 * nm.n;
  const double am = 1.0 + 2.0 * nm.m;
  ExcitationNumbers e;
  e.nx = (wx / vx + vx / wx) * an / (4.0 * mix) + mu2 * (wx / vy + vy / wx) * am / (4.0 * mix) - 0.5;
  e.ny = mu2 * (wy / vx + vx / wy) * an / (4.0 * mix) + (wy / vy + vy / wy) * am / (4.0 * mix) - 0.5;
  return e;
}

LadderMoments ladder_from_moments(const SystemParams& params, const MomentSet& s) {
  const double wx = params.omega_x;
  const double wy = params.omega_y;
  const double a = 0.5 * (wx * s.xx + s.pp / wx);
  const double b = 0.5 * (wy * s.yy + s.qq / wy);
  const double ab = 0.25 * (wx * wy * s.xxyy + wx / wy * s.xxqq + wy / wx * s.yypp + s.ppqq / (wx * wy));
  const double root = std::sqrt(wx * wy);
  const double cross = 0.5 * root * s.xy + s.pq / (2.0 * root);

  LadderMoments l;
  l.nx = a - 0.5;
  l.ny = b - 0.5;
  l.nx_ny = ab - 0.5 * a - 0.5 * b + 0.25;
  l.cross_mag_sq = cross * cross;
  return l;
}

LadderMoments ladder_moments(const SystemParams& params, QuantumNumbers nm) {
  return ladder_from_moments(params, second_and_fourth_moments(params, nm));
}

}  // namespace oscsteer
