#pragma once

#include "oscsteer/model.hpp"

namespace oscsteer {

// Lab-frame phase-space point.
struct PhasePoint {
  double x = 0.0;
  double p = 0.0;
  double y = 0.0;
  double q = 0.0;
};

// Normal-mode phase-space point.
struct RotatedPhasePoint {
  double X = 0.0;
  double P = 0.0;
  double Y = 0.0;
  double Q = 0.0;
};

RotatedPhasePoint to_normal_frame(const PhasePoint& pt, double theta);
PhasePoint to_lab_frame(const RotatedPhasePoint& pt, double theta);

// Normalized Hermite-Gaussian of one mode with frequency vartheta.
double mode_wavefunction(int n, double vartheta, double X);

// Psi_(n,m)(X, Y) in normal-mode coordinates.
double eigenfunction(const NormalModes& modes, QuantumNumbers nm, double X, double Y);

// Psi_(n,m) at lab coordinates (x, y).
double eigenfunction_lab(const NormalModes& modes, QuantumNumbers nm, double x, double y);

// Single-mode Wigner function ((-1)^n / pi) exp(-R) L_n(2R), with
// R = vartheta X^2 + P^2 / vartheta.
double mode_wigner(int n, double vartheta, double X, double P);

// W_n(X, P) W_m(Y, Q).
double wigner_rotated(const NormalModes& modes, QuantumNumbers nm, const RotatedPhasePoint& pt);

// Rotates into the normal frame and evaluates wigner_rotated there.
double wigner_lab(const NormalModes& modes, QuantumNumbers nm, const PhasePoint& pt);

}  // namespace oscsteer
