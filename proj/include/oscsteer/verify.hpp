#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "oscsteer/model.hpp"
#include "oscsteer/moments.hpp"

namespace oscsteer {

struct CheckResult {
  int id = 0;
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  // Closed-form moment table used by the moment and steering checks.
  MomentFunction moments = &second_and_fourth_moments;
};

// omega_x = 1, omega_y in {0.6, 0.8, 0.99, 1}, eps = linspace(0.1, 0.95 omega_x omega_y, 10).
std::vector<SystemParams> reference_grid();

inline constexpr int kCheckCount = 14;

std::string check_name(int id);
// Runs check id in 1..kCheckCount.
CheckResult run_check(int id, const VerifyOptions& options = {});
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});
bool all_passed(const std::vector<CheckResult>& results);

// One "PASS|FAIL  name  max_dev=...  tol=..." line per check.
void print_report(std::ostream& os, const std::vector<CheckResult>& results);
std::string report_json(const std::vector<CheckResult>& results);

}  // namespace oscsteer
