#include "doctest.h"

#include "json.hpp"
#include "oscsteer/verify.hpp"

using namespace oscsteer;

namespace {

// Moment table with a misprinted fourth moment.
MomentSet typo_moments(const SystemParams& p, QuantumNumbers nm) {
  MomentSet s = second_and_fourth_moments(p, nm);
  s.xxyy *= 1.0 + 1e-6;
  return s;
}

// A sign error in the cross moment.
MomentSet sign_moments(const SystemParams& p, QuantumNumbers nm) {
  MomentSet s = second_and_fourth_moments(p, nm);
  s.pq = -s.pq;
  return s;
}

}  // namespace

TEST_CASE("reference grid") {
  const auto g = reference_grid();
  CHECK(g.size() == 40);
  CHECK(g.front().epsilon == 0.1);
  CHECK(g[9].epsilon == doctest::Approx(0.95 * 0.6).epsilon(1e-15));
  for (const auto& p : g) CHECK(p.epsilon < p.omega_x * p.omega_y);
}

TEST_CASE("all checks pass on a fresh build") {
  const auto results = run_verification();
  REQUIRE(results.size() == kCheckCount);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
  CHECK(all_passed(results));
}

TEST_CASE("injected moment typo is a named failure") {
  VerifyOptions o;
  o.moments = &typo_moments;
  const CheckResult r = run_check(4, o);
  CHECK_FALSE(r.passed);
  CHECK(r.name == "moment-table");
  CHECK(r.detail.find("xxyy") != std::string::npos);
  CHECK(run_check(1, o).passed);
}

TEST_CASE("a flipped cross-moment sign breaks the moment and steering checks") {
  VerifyOptions o;
  o.moments = &sign_moments;
  CHECK_FALSE(run_check(4, o).passed);
  CHECK_FALSE(run_check(6, o).passed);
  CHECK_FALSE(run_check(8, o).passed);
  CHECK(run_check(1, o).passed);
}

TEST_CASE("JSON report") {
  std::vector<CheckResult> rs{run_check(7), run_check(11)};
  const auto j = nlohmann::json::parse(report_json(rs));
  CHECK(j["passed"].get<bool>());
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["name"] == "quantized-steering");
  CHECK(j["checks"][1]["tolerance"].get<double>() == 1e-10);
  CHECK(j["checks"][1].contains("max_deviation"));
}

TEST_CASE("check ids") {
  CHECK(check_name(1) == "ground-state-consistency");
  CHECK(check_name(14) == "determinism");
  CHECK_THROWS(check_name(0));
  CHECK_THROWS(run_check(15));
}
