#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>

#include "oscsteer/moments.hpp"
#include "oscsteer/purity.hpp"
#include "oscsteer/specfun.hpp"
#include "oscsteer/wigner.hpp"

using namespace oscsteer;

namespace {

const double kPi = std::acos(-1.0);

// Trapezoid sum on [-L, L] with n points; spectrally accurate for Gaussians.
template <typename F>
double trapezoid(double L, int n, F&& f) {
  const double h = 2.0 * L / (n - 1);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = -L + i * h;
    sum += ((i == 0 || i == n - 1) ? 0.5 : 1.0) * f(t);
  }
  return sum * h;
}

// Lab-frame Wigner function written out in the original coordinates.
double printed_lab_wigner(const NormalModes& md, QuantumNumbers nm, const PhasePoint& g) {
  const double c = std::cos(md.theta), s = std::sin(md.theta);
  const double tx = md.vartheta_x, ty = md.vartheta_y;
  const double X = g.x * c + g.y * s, P = g.p * c + g.q * s;
  const double Y = g.x * s - g.y * c, Q = g.p * s - g.q * c;
  const double rx = tx * X * X + P * P / tx;
  const double ry = ty * Y * Y + Q * Q / ty;
  return std::pow(-1.0, nm.n + nm.m) / (kPi * kPi) * std::exp(-rx) * std::exp(-ry) *
         specfun::laguerre(nm.n, 2 * rx) * specfun::laguerre(nm.m, 2 * ry);
}

}  // namespace

TEST_CASE("eigenfunction values") {
  const NormalModes md = diagonalize({1.0, 0.8, 0.4});
  CHECK(eigenfunction(md, {0, 0}, 0.0, 0.0) ==
        doctest::Approx(std::pow(md.vartheta_x * md.vartheta_y / (kPi * kPi), 0.25)).epsilon(1e-15));
  for (double Y : {-1.0, 0.0, 0.3, 2.0}) CHECK(eigenfunction(md, {1, 0}, 0.0, Y) == 0.0);
}

TEST_CASE("eigenfunctions are normalized") {
  const NormalModes md = diagonalize({1.0, 0.6, 0.5});
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      const double Lx = 12.0 / std::sqrt(md.vartheta_x), Ly = 12.0 / std::sqrt(md.vartheta_y);
      const double norm = trapezoid(Lx, 201, [&](double X) {
        return trapezoid(Ly, 201, [&](double Y) { return std::pow(eigenfunction(md, {n, m}, X, Y), 2); });
      });
      CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("eigenfunction_lab rotates the arguments") {
  const NormalModes md = diagonalize({1.0, 0.8, 0.6});
  const double c = std::cos(md.theta), s = std::sin(md.theta);
  for (double x : {-0.7, 0.2, 1.3}) {
    for (double y : {-1.1, 0.4}) {
      CHECK(eigenfunction_lab(md, {2, 1}, x, y) ==
            doctest::Approx(eigenfunction(md, {2, 1}, x * c + y * s, -x * s + y * c)).epsilon(1e-14));
    }
  }
}

TEST_CASE("Wigner function at the origin") {
  const NormalModes md = diagonalize({1.0, 0.9, 0.3});
  CHECK(wigner_rotated(md, {0, 0}, {0, 0, 0, 0}) == doctest::Approx(1.0 / (kPi * kPi)).epsilon(1e-15));
  CHECK(wigner_rotated(md, {1, 0}, {0, 0, 0, 0}) == doctest::Approx(-1.0 / (kPi * kPi)).epsilon(1e-15));
  CHECK(wigner_rotated(md, {1, 1}, {0, 0, 0, 0}) == doctest::Approx(1.0 / (kPi * kPi)).epsilon(1e-15));
}

TEST_CASE("single-mode Wigner: normalization and purity") {
  for (double th : {0.4, 1.0, 2.3}) {
    for (int n = 0; n <= 5; ++n) {
      const auto integral = [&](auto&& g) {
        return trapezoid(12.0, 241, [&](double X) {
          return trapezoid(12.0, 241, [&](double P) { return g(mode_wigner(n, th, X, P)); });
        });
      };
      CHECK(integral([](double w) { return w; }) == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(2 * kPi * integral([](double w) { return w * w; }) == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("wigner_lab equals wigner_rotated when theta = 0") {
  const NormalModes md = diagonalize({1.0, 0.7, 0.0});
  REQUIRE(md.theta == 0.0);
  for (double a : {-0.4, 0.0, 0.9}) {
    const PhasePoint g{a, 0.3, -a / 2, 1.2};
    CHECK(wigner_lab(md, {2, 1}, g) == wigner_rotated(md, {2, 1}, {g.x, g.p, g.y, g.q}));
  }
}

TEST_CASE("wigner_lab matches the expanded lab-frame formula") {
  for (double eps : {0.0, 0.3, 0.7}) {
    const NormalModes md = diagonalize({1.0, 0.8, eps});
    for (int n = 0; n <= 3; ++n) {
      for (int m = 0; m <= 2; ++m) {
        for (const PhasePoint g : {PhasePoint{0.1, -0.2, 0.3, 0.4}, PhasePoint{-1.0, 0.5, 0.8, -0.3},
                                   PhasePoint{0.0, 1.2, -0.4, 0.0}}) {
          CHECK(wigner_lab(md, {n, m}, g) ==
                doctest::Approx(printed_lab_wigner(md, {n, m}, g)).epsilon(1e-12).scale(1.0));
        }
      }
    }
  }
}

TEST_CASE("parity symmetry") {
  const NormalModes md = diagonalize({1.0, 0.8, 0.5});
  for (int n = 0; n <= 3; ++n) {
    const PhasePoint g{0.3, -0.8, 1.1, 0.25};
    CHECK(wigner_lab(md, {n, 2}, g) == doctest::Approx(wigner_lab(md, {n, 2}, {-g.x, -g.p, -g.y, -g.q})));
  }
}

TEST_CASE("rotation is symplectic with unit Jacobian") {
  for (double theta : {0.0, 0.3, kPi / 4, -0.5}) {
    Eigen::Matrix4d J;
    for (int k = 0; k < 4; ++k) {
      PhasePoint e{};
      (k == 0 ? e.x : k == 1 ? e.p : k == 2 ? e.y : e.q) = 1.0;
      const RotatedPhasePoint r = to_normal_frame(e, theta);
      J.col(k) << r.X, r.P, r.Y, r.Q;
    }
    CHECK(J.determinant() == doctest::Approx(1.0).epsilon(1e-15));
    Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
    omega(0, 1) = omega(2, 3) = 1.0;
    omega(1, 0) = omega(3, 2) = -1.0;
    CHECK((J.transpose() * omega * J - omega).norm() < 1e-15);

    const PhasePoint g{0.2, -0.4, 1.5, 0.7};
    const PhasePoint back = to_lab_frame(to_normal_frame(g, theta), theta);
    CHECK(back.x == doctest::Approx(g.x).epsilon(1e-15));
    CHECK(back.q == doctest::Approx(g.q).epsilon(1e-15));
  }
}

TEST_CASE("W_(1,0) is negative somewhere at every coupling") {
  for (double eps : {0.0, 0.2, 0.5, 0.75}) {
    const NormalModes md = diagonalize({1.0, 0.8, eps});
    double lowest = 1.0;
    for (int i = -10; i <= 10; ++i)
      for (int j = -10; j <= 10; ++j) lowest = std::min(lowest, wigner_lab(md, {1, 0}, {0.1 * i, 0.0, 0.1 * j, 0.0}));
    CHECK(lowest < 0.0);
  }
}

TEST_CASE("marginal purity from the lab-frame Wigner function (slow path)") {
  // P = 2 pi int W_x(x,p)^2 dx dp with W_x the (y,q) marginal.
  const SystemParams p{1.0, 0.8, 0.5};
  const NormalModes md = diagonalize(p);
  const MomentSet ground = second_and_fourth_moments(p, {0, 0});
  for (int n = 0; n <= 2; ++n) {
    for (int m = 0; m <= 2; ++m) {
      const double Lx = 9.0 * std::sqrt(ground.xx), Lp = 9.0 * std::sqrt(ground.pp);
      const double Ly = 9.0 * std::sqrt(ground.yy), Lq = 9.0 * std::sqrt(ground.qq);
      const int N = 45;
      const double purity = 2 * kPi * trapezoid(Lx, N, [&](double x) {
        return trapezoid(Lp, N, [&](double pp) {
          const double marginal = trapezoid(Ly, N, [&](double y) {
            return trapezoid(Lq, N, [&](double q) { return wigner_lab(md, {n, m}, {x, pp, y, q}); });
          });
          return marginal * marginal;
        });
      });
      CHECK(purity == doctest::Approx(purity_exact(p, {n, m}).purity).epsilon(1e-6));
    }
  }
}
