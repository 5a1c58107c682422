#include "oscsteer/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "oscsteer/errors.hpp"

namespace oscsteer {

void validate(const SystemParams& params) {
  const auto [wx, wy, eps] = params;
  if (!(std::isfinite(wx) && std::isfinite(wy) && std::isfinite(eps))) {
    throw ParameterError("system parameters must be finite");
  }
  if (wx <= 0.0 || wy <= 0.0) {
    throw ParameterError("oscillator frequencies must be positive");
  }
  if (eps < 0.0) {
    throw ParameterError("coupling must be non-negative");
  }
  if (eps >= wx * wy) {
    std::ostringstream os;
    os << "coupling " << eps << " must be below omega_x*omega_y = " << wx * wy
       << " (imaginary normal frequency)";
    throw ParameterError(os.str());
  }
}

void validate(QuantumNumbers nm) {
  if (nm.n < 0 || nm.m < 0) {
    throw ParameterError("quantum numbers must be non-negative");
  }
}

NormalModes diagonalize(const SystemParams& params) {
  validate(params);
  const auto [wx, wy, eps] = params;
  const double wx2 = wx * wx;
  const double wy2 = wy * wy;
  const double split = wx2 - wy2;
  const double root = std::hypot(split, 2.0 * eps);

  NormalModes modes;
  if (split == 0.0) {
    modes.mu = 1.0;
  } else {
    // tan(theta) from tan(2 theta) = 2 eps / split without forming the angle.
    modes.mu = std::copysign(2.0 * eps / (root + std::abs(split)), split);
  }
  modes.theta = std::atan(modes.mu);

  // Large root directly, small one from the determinant to avoid cancellation
  // near the stability boundary.
  const double upper = 0.5 * (wx2 + wy2 + root);
  const double lower = (wx * wy - eps) * (wx * wy + eps) / upper;
  if (split >= 0.0) {
    modes.vartheta_x = std::sqrt(upper);
    modes.vartheta_y = std::sqrt(lower);
  } else {
    modes.vartheta_x = std::sqrt(lower);
    modes.vartheta_y = std::sqrt(upper);
  }
  return modes;
}

double cutoff_angle(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw ParameterError("resonance rate must be positive");
  }
  if (r == 1.0) {
    return std::numbers::pi / 4.0;
  }
  const double step = (1.0 - r >= 0.0) ? 1.0 : 0.0;
  return 0.5 * step * std::atan(2.0 * r / (1.0 - r * r));
}

double energy(const SystemParams& params, QuantumNumbers nm) {
  validate(nm);
  const NormalModes modes = diagonalize(params);
  return 0.5 * modes.vartheta_x * (2 * nm.n + 1) + 0.5 * modes.vartheta_y * (2 * nm.m + 1);
}

}  // namespace oscsteer
