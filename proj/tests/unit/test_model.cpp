#include "doctest.h"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "oscsteer/errors.hpp"
#include "oscsteer/model.hpp"

using namespace oscsteer;

namespace {

const double kPi = std::acos(-1.0);

// Eigen frequencies of the potential matrix [[wx^2, eps], [eps, wy^2]].
Eigen::Vector2d normal_frequencies_numeric(const SystemParams& p) {
  Eigen::Matrix2d v;
  v << p.omega_x * p.omega_x, p.epsilon, p.epsilon, p.omega_y * p.omega_y;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(v);
  return es.eigenvalues().cwiseSqrt();  // ascending
}

}  // namespace

TEST_CASE("diagonalize: decoupled resonance uses the pi/4 convention") {
  const NormalModes m = diagonalize({1.0, 1.0, 0.0});
  CHECK(m.theta == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(m.mu == 1.0);
  CHECK(m.vartheta_x == 1.0);
  CHECK(m.vartheta_y == 1.0);
}

TEST_CASE("diagonalize: resonance at eps = 0.5") {
  const NormalModes m = diagonalize({1.0, 1.0, 0.5});
  CHECK(m.theta == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(m.vartheta_x * m.vartheta_x == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(m.vartheta_y * m.vartheta_y == doctest::Approx(0.5).epsilon(1e-15));
  const Eigen::Vector2d nf = normal_frequencies_numeric({1.0, 1.0, 0.5});
  CHECK(m.vartheta_x == doctest::Approx(nf(1)).epsilon(1e-14));
  CHECK(m.vartheta_y == doctest::Approx(nf(0)).epsilon(1e-14));
}

TEST_CASE("diagonalize: rejects the boundary and bad frequencies") {
  CHECK_THROWS_AS(diagonalize({1.0, 1.0, 1.0}), ParameterError);
  CHECK_THROWS_AS(diagonalize({1.0, 0.8, 0.9}), ParameterError);
  CHECK_THROWS_AS(diagonalize({0.0, 1.0, 0.1}), ParameterError);
  CHECK_THROWS_AS(diagonalize({1.0, -1.0, 0.1}), ParameterError);
  CHECK_THROWS_AS(diagonalize({1.0, 1.0, -0.1}), ParameterError);
  CHECK_THROWS_AS(diagonalize({1.0, 1.0, std::nan("")}), ParameterError);
  CHECK_THROWS_AS(validate(QuantumNumbers{-1, 0}), ParameterError);
}

TEST_CASE("diagonalize: trace, determinant and branch relations") {
  for (double wy : {0.3, 0.6, 0.8, 0.99, 1.0, 1.2, 2.5}) {
    for (int k = 0; k < 12; ++k) {
      const SystemParams p{1.0, wy, 0.999 * wy * k / 11.0};
      const NormalModes m = diagonalize(p);
      const double tx2 = m.vartheta_x * m.vartheta_x;
      const double ty2 = m.vartheta_y * m.vartheta_y;
      CHECK(tx2 + ty2 == doctest::Approx(1.0 + wy * wy).epsilon(1e-14));
      CHECK(tx2 * ty2 == doctest::Approx(wy * wy - p.epsilon * p.epsilon).epsilon(1e-12));
      CHECK(tx2 == doctest::Approx(1.0 + p.epsilon * m.mu).epsilon(1e-14));
      CHECK(ty2 == doctest::Approx(wy * wy - p.epsilon * m.mu).epsilon(1e-12));
      CHECK(m.mu == doctest::Approx(std::tan(m.theta)).epsilon(1e-14));
      if (wy <= 1.0) CHECK(m.vartheta_x >= m.vartheta_y);
      // The rotation diagonalizes the potential: the off-diagonal entry vanishes.
      const double c = std::cos(m.theta), s = std::sin(m.theta);
      const double off = -c * s * 1.0 + c * s * wy * wy + (c * c - s * s) * p.epsilon;
      CHECK(std::abs(off) < 1e-14);
      // Matches an independent eigen-solve.
      const Eigen::Vector2d nf = normal_frequencies_numeric(p);
      CHECK(std::max(m.vartheta_x, m.vartheta_y) == doctest::Approx(nf(1)).epsilon(1e-13));
      CHECK(std::min(m.vartheta_x, m.vartheta_y) == doctest::Approx(nf(0)).epsilon(1e-12));
    }
  }
}

TEST_CASE("diagonalize: theta -> 0 as eps -> 0 and monotone for wx > wy") {
  CHECK(diagonalize({1.0, 0.8, 0.0}).theta == 0.0);
  CHECK(std::abs(diagonalize({1.0, 0.8, 1e-9}).theta) < 1e-8);
  double prev = 0.0;
  for (int k = 1; k < 200; ++k) {
    const double th = diagonalize({1.0, 0.8, 0.8 * k / 200.0}).theta;
    CHECK(th > prev);
    prev = th;
  }
}

TEST_CASE("cutoff_angle") {
  CHECK(cutoff_angle(1.0) == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(cutoff_angle(1.0 - 1e-9) == doctest::Approx(kPi / 4).epsilon(1e-8));
  CHECK(cutoff_angle(0.5) == doctest::Approx(0.5 * std::atan(4.0 / 3.0)).epsilon(1e-15));
  CHECK(cutoff_angle(0.5) == doctest::Approx(0.46365).epsilon(1e-5));
  CHECK(cutoff_angle(1.5) == 0.0);
  CHECK(cutoff_angle(3.0) == 0.0);
  CHECK_THROWS_AS(cutoff_angle(0.0), ParameterError);
  CHECK_THROWS_AS(cutoff_angle(-1.0), ParameterError);

  // Increasing toward pi/4 from below.
  double prev = -1.0;
  for (int k = 1; k < 100; ++k) {
    const double v = cutoff_angle(k / 100.0);
    CHECK(v > prev);
    CHECK(v < kPi / 4);
    prev = v;
  }
}

TEST_CASE("cutoff_angle is the eps -> wx wy limit of theta") {
  for (double r : {0.3, 0.5, 0.8, 0.95}) {
    const double eps = r * (1.0 - 1e-12);
    CHECK(diagonalize({1.0, r, eps}).theta == doctest::Approx(cutoff_angle(r)).epsilon(1e-5));
  }
}

TEST_CASE("energy") {
  CHECK(energy({1.0, 0.7, 0.0}, {0, 0}) == doctest::Approx(0.85).epsilon(1e-15));
  CHECK(energy({1.0, 0.7, 0.0}, {2, 3}) == doctest::Approx((5.0 + 0.7 * 7.0) / 2.0).epsilon(1e-15));
  CHECK(energy({1.0, 1.0, 0.5}, {1, 0}) ==
        doctest::Approx(1.5 * std::sqrt(1.5) + 0.5 * std::sqrt(0.5)).epsilon(1e-15));
  for (double eps : {0.0, 0.3, 0.79}) {
    const SystemParams p{1.0, 0.8, eps};
    const NormalModes m = diagonalize(p);
    for (int n = 0; n < 5; ++n) {
      CHECK(energy(p, {n + 1, 2}) - energy(p, {n, 2}) == doctest::Approx(m.vartheta_x).epsilon(1e-13));
      CHECK(energy(p, {n, 2}) > 0.0);
    }
  }
  CHECK_THROWS_AS(energy({1.0, 1.0, 1.0}, {0, 0}), ParameterError);
}
