#pragma once

#include "oscsteer/model.hpp"

namespace oscsteer {

// Second and fourth phase-space moments of Psi_(n,m). First moments and
// <xq>, <py> vanish for every stationary state.
struct MomentSet {
  double xx = 0.0;
  double yy = 0.0;
  double pp = 0.0;
  double qq = 0.0;
  double xy = 0.0;
  double pq = 0.0;
  double xxyy = 0.0;
  double ppqq = 0.0;
  double xxqq = 0.0;
  double yypp = 0.0;
};

// Heisenberg areas A_x = dx dp, A_y = dy dq.
struct UncertaintyAreas {
  double ax = 0.0;
  double ay = 0.0;
};

// Mean lab-frame excitations <a_x^+ a_x>, <a_y^+ a_y>.
struct ExcitationNumbers {
  double nx = 0.0;
  double ny = 0.0;
};

// Ladder-operator expectations entering the steering quantifiers.
struct LadderMoments {
  double nx = 0.0;
  double ny = 0.0;
  double nx_ny = 0.0;         // <N_x N_y>
  double cross_mag_sq = 0.0;  // |<a_x a_y^+>|^2
};

using MomentFunction = MomentSet (*)(const SystemParams&, QuantumNumbers);

MomentSet second_and_fourth_moments(const SystemParams& params, QuantumNumbers nm);

UncertaintyAreas uncertainty_areas(const SystemParams& params, QuantumNumbers nm);

ExcitationNumbers excitation_numbers(const SystemParams& params, QuantumNumbers nm);

// Assembles ladder expectations from a moment table. The weighted sum of
// <x^2>, <p^2> (and of the four fourth moments) is the quadratic form
// A = wx x^2/2 + p^2/(2 wx), with N_x = A - 1/2 and N_x N_y = AB - A/2 - B/2 + 1/4.
LadderMoments ladder_from_moments(const SystemParams& params, const MomentSet& moments);

LadderMoments ladder_moments(const SystemParams& params, QuantumNumbers nm);

}  // namespace oscsteer
