#pragma once

#include "oscsteer/model.hpp"
#include "oscsteer/moments.hpp"

namespace oscsteer {

// Directional steering quantifiers
//   S_{x->y} = max(|<a_x a_y^+>|^2 - <N_y (N_x + 1/2)>, 0),
//   S_{y->x} = max(|<a_x a_y^+>|^2 - <N_x (N_y + 1/2)>, 0),
// and the asymmetry |S_{x->y} - S_{y->x}|. The *_raw fields hold the
// brackets before the clamp.
struct SteeringResult {
  double s_xy = 0.0;
  double s_yx = 0.0;
  double delta = 0.0;
  double s_xy_raw = 0.0;
  double s_yx_raw = 0.0;
};

struct SteeringSelection {
  bool x_can_steer = false;
  bool y_can_steer = false;
};

SteeringResult steering_from_ladder(const LadderMoments& ladder);

SteeringResult steering(const SystemParams& params, QuantumNumbers nm);

// Equal-frequency limit of the x->y bracket before the clamp:
//   -(m + 2mn - (m+n) mu^2 + (1+2m) n mu^4) / (2 (1+mu^2)^2).
double steering_weak_raw(QuantumNumbers nm, double mu);

// max(steering_weak_raw, 0), i.e. S_{x->y}; S_{y->x}^(n,m) = S_{x->y}^(m,n).
double steering_weak_general(QuantumNumbers nm, double mu);

// Both directions of the equal-frequency limit.
SteeringResult steering_weak(QuantumNumbers nm, double mu);

// n mu^2 (1 - mu^2) / (2 (1+mu^2)^2): the m = 0 reduction, kept separately
// as an internal consistency check of the general form.
double steering_weak_single_mode(int n, double mu);

// Steerability predicate of the equal-frequency limit: x steers y iff
// n != 0 and m == 0, mirrored for y.
SteeringSelection selection_rules(QuantumNumbers nm);

}  // namespace oscsteer
