#include "doctest.h"

#include <random>

#include "oscsteer/errors.hpp"
#include "oscsteer/series.hpp"

using namespace oscsteer;

namespace {

Jet4 random_jet(std::mt19937& rng, Jet4::Orders o, double constant) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Jet4 j(o);
  for (int i = 0; i <= o[0]; ++i)
    for (int k = 0; k <= o[1]; ++k)
      for (int l = 0; l <= o[2]; ++l)
        for (int m = 0; m <= o[3]; ++m) j.set_coefficient(i, k, l, m, dist(rng));
  j.set_coefficient(0, 0, 0, 0, constant);
  return j;
}

const Jet4::Orders kOrders{2, 3, 2, 1};

}  // namespace

TEST_CASE("construction and coefficient access") {
  const Jet4 c = Jet4::constant(kOrders, 2.5);
  CHECK(c.coefficient(0, 0, 0, 0) == 2.5);
  CHECK(c.coefficient(1, 0, 0, 0) == 0.0);
  CHECK(c.size() == 3 * 4 * 3 * 2);
  const Jet4 s = Jet4::variable(kOrders, 1);
  CHECK(s.coefficient(0, 1, 0, 0) == 1.0);
  CHECK(s.constant_term() == 0.0);
  CHECK_THROWS_AS(c.coefficient(3, 0, 0, 0), ParameterError);
  CHECK_THROWS_AS(c.coefficient(0, 0, 0, -1), ParameterError);
  CHECK_THROWS_AS(Jet4::variable(kOrders, 4), ParameterError);
  CHECK_THROWS_AS(Jet4(Jet4::Orders{-1, 0, 0, 0}), ParameterError);
}

TEST_CASE("(1+u)^2 and multiplication by zero") {
  const Jet4::Orders o{2, 0, 0, 0};
  const Jet4 a = 1.0 + Jet4::variable(o, 0);
  const Jet4 sq = a * a;
  CHECK(sq.coefficient(0, 0, 0, 0) == 1.0);
  CHECK(sq.coefficient(1, 0, 0, 0) == 2.0);
  CHECK(sq.coefficient(2, 0, 0, 0) == 1.0);
  const Jet4 zero = a * Jet4(o);
  CHECK(zero.max_abs_difference(Jet4(o)) == 0.0);
  // Truncation drops u^3.
  const Jet4 cube = sq * a;
  CHECK(cube.coefficient(2, 0, 0, 0) == 3.0);
}

TEST_CASE("order mismatch") {
  const Jet4 a(kOrders), b(Jet4::Orders{1, 1, 1, 1});
  CHECK_THROWS_AS(a * b, ParameterError);
  CHECK_THROWS_AS(a + b, ParameterError);
  CHECK_THROWS_AS(a - b, ParameterError);
}

TEST_CASE("ring laws on random jets") {
  std::mt19937 rng(20260114);
  for (int trial = 0; trial < 20; ++trial) {
    const Jet4 a = random_jet(rng, kOrders, 0.3);
    const Jet4 b = random_jet(rng, kOrders, -0.7);
    const Jet4 c = random_jet(rng, kOrders, 1.1);
    CHECK((a * b).max_abs_difference(b * a) < 1e-12);
    CHECK(((a * b) * c).max_abs_difference(a * (b * c)) < 1e-12);
    CHECK((a * (b + c)).max_abs_difference(a * b + a * c) < 1e-12);
    CHECK(((a + b) - b).max_abs_difference(a) < 1e-12);
    CHECK((a * Jet4::constant(kOrders, 1.0)).max_abs_difference(a) < 1e-15);
  }
}

TEST_CASE("reciprocal") {
  const Jet4::Orders o{6, 4, 0, 0};
  const Jet4 geo = (1.0 - Jet4::variable(o, 0)).reciprocal();
  for (int k = 0; k <= 6; ++k) CHECK(geo.coefficient(k, 0, 0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  const Jet4 prod = ((1.0 - Jet4::variable(o, 0)) * (1.0 - Jet4::variable(o, 1))).reciprocal();
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 4; ++j) CHECK(prod.coefficient(i, j, 0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(prod.coefficient(1, 1, 0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(Jet4::variable(o, 0).reciprocal(), ParameterError);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Jet4 a = random_jet(rng, kOrders, trial % 2 ? 1.5 : -2.0);
    const Jet4 one = a * a.reciprocal();
    CHECK(one.max_abs_difference(Jet4::constant(kOrders, 1.0)) < 1e-12);
    CHECK(a.reciprocal().reciprocal().max_abs_difference(a) < 1e-12);
  }
}

TEST_CASE("sqrt") {
  const Jet4::Orders o{4, 0, 0, 0};
  const Jet4 r = (1.0 + Jet4::variable(o, 0)).sqrt();
  CHECK(r.coefficient(0, 0, 0, 0) == 1.0);
  CHECK(r.coefficient(1, 0, 0, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.coefficient(2, 0, 0, 0) == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(r.coefficient(3, 0, 0, 0) == doctest::Approx(1.0 / 16).epsilon(1e-15));
  CHECK(Jet4::constant(kOrders, 4.0).sqrt().coefficient(0, 0, 0, 0) == 2.0);
  CHECK_THROWS_AS(Jet4::constant(kOrders, 0.0).sqrt(), ParameterError);
  CHECK_THROWS_AS(Jet4::constant(kOrders, -1.0).sqrt(), ParameterError);

  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Jet4 a = random_jet(rng, kOrders, 0.5 + trial * 0.25);
    const Jet4 s = a.sqrt();
    CHECK((s * s).max_abs_difference(a) < 1e-12);
    CHECK((a * a).sqrt().max_abs_difference(a) < 1e-12);
  }
}
