#pragma once

namespace oscsteer {

// Two bilinearly coupled oscillators,
//   H = (p^2 + q^2)/2 + wx^2 x^2/2 + wy^2 y^2/2 + eps x y,   hbar = m = 1,
// valid for wx, wy > 0 and 0 <= eps < wx*wy. The attractive form -eps x y
// is the mirror image under y -> -y, q -> -q: every quantity in this library
// is unchanged except the signs of <xy> and <pq>.
struct SystemParams {
  double omega_x = 1.0;
  double omega_y = 1.0;
  double epsilon = 0.0;
};

// Rotation into normal modes X = x cos(theta) + y sin(theta),
// Y = -x sin(theta) + y cos(theta) (same for momenta), with mu = tan(theta).
//
// For omega_x >= omega_y, vartheta_x is the upper branch and theta lies in
// [0, pi/4]. For omega_x < omega_y, theta is in (-pi/4, 0] and vartheta_x is
// the mode continuously connected to the bare x oscillator. At omega_x ==
// omega_y the angle is pi/4 for every eps.
struct NormalModes {
  double theta = 0.0;
  double mu = 0.0;
  double vartheta_x = 1.0;
  double vartheta_y = 1.0;
};

// Excitations (n, m) of the two normal modes.
struct QuantumNumbers {
  int n = 0;
  int m = 0;
};

// Throws ParameterError unless omega_x, omega_y > 0 and 0 <= eps < omega_x*omega_y.
void validate(const SystemParams& params);
void validate(QuantumNumbers nm);

NormalModes diagonalize(const SystemParams& params);

// Limiting mixing angle as eps -> omega_x*omega_y for resonance rate
// r = omega_y/omega_x, with the step convention sgn(t) = 1 for t >= 0, else 0.
// Discontinuous at r = 1: pi/4 from below and at r = 1, zero above.
double cutoff_angle(double r);

// E = vartheta_x (2n+1)/2 + vartheta_y (2m+1)/2.
double energy(const SystemParams& params, QuantumNumbers nm);

}  // namespace oscsteer
