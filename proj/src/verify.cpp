#include "oscsteer/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "oscsteer/errors.hpp"
#include "oscsteer/oracle.hpp"
#include "oscsteer/purity.hpp"
#include "oscsteer/steering.hpp"
#include "oscsteer/tables.hpp"

namespace oscsteer {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string where(const SystemParams& p, QuantumNumbers nm) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "wx=%g wy=%g eps=%.6g n=%d m=%d", p.omega_x, p.omega_y, p.epsilon,
                nm.n, nm.m);
  return buf;
}

// Maximum deviation together with the point where it occurred.
struct Worst {
  double value = 0.0;
  std::string at;
  bool bad = false;  // a condition failed independently of the deviation

  void update(double dev, const std::string& location) {
    if (!(dev <= value)) {  // NaN counts as worst
      value = std::isnan(dev) ? std::numeric_limits<double>::infinity() : dev;
      at = location;
    }
  }
};

CheckResult finish(const Worst& w, double tol, std::string note = {}) {
  CheckResult r;
  r.max_deviation = w.value;
  r.tolerance = tol;
  r.passed = !w.bad && w.value <= tol;
  r.detail = w.at.empty() ? note : (note.empty() ? "worst at " + w.at : note + "; worst at " + w.at);
  return r;
}

double rel(double a, double b, double floor = 1e-12) {
  return std::abs(a - b) / std::max(std::abs(b), floor);
}

SteeringResult steering_with(const VerifyOptions& o, const SystemParams& p, QuantumNumbers nm) {
  return steering_from_ladder(ladder_from_moments(p, o.moments(p, nm)));
}

CheckResult ground_consistency(const VerifyOptions&) {
  Worst w;
  for (const auto& p : reference_grid()) {
    w.update(std::abs(purity_exact(p, {0, 0}).purity - purity_ground_closed(p).purity), where(p, {0, 0}));
  }
  return finish(w, 1e-10);
}

CheckResult oracle_equivalence(const VerifyOptions&) {
  Worst w;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& p : reference_grid()) {
    for (int n = 0; n <= 3; ++n) {
      for (int m = 0; m <= 3; ++m) {
        const double exact = purity_exact(p, {n, m}).purity;
        const double svd = schmidt_oracle(p, {n, m}).purity;
        w.update(std::abs(exact - svd), where(p, {n, m}));
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 60.0) w.bad = true;
  char note[64];
  std::snprintf(note, sizeof note, "%.2f s (limit 60 s)", secs);
  return finish(w, 1e-6, note);
}

CheckResult global_purity(const VerifyOptions&) {
  Worst w;
  for (const auto& p : reference_grid()) {
    for (int n = 0; n <= 3; ++n) {
      for (int m = 0; m <= 3; ++m) {
        w.update(std::abs(global_purity_check(p, {n, m}) - 1.0), where(p, {n, m}));
      }
    }
  }
  return finish(w, 1e-8);
}

CheckResult moment_table(const VerifyOptions& o) {
  struct Entry {
    const char* name;
    double MomentSet::*field;
    Monomial mono;
  };
  static const Entry entries[] = {
      {"xx", &MomentSet::xx, {2, 0, 0, 0}},     {"yy", &MomentSet::yy, {0, 0, 2, 0}},
      {"pp", &MomentSet::pp, {0, 2, 0, 0}},     {"qq", &MomentSet::qq, {0, 0, 0, 2}},
      {"xy", &MomentSet::xy, {1, 0, 1, 0}},     {"pq", &MomentSet::pq, {0, 1, 0, 1}},
      {"xxyy", &MomentSet::xxyy, {2, 0, 2, 0}}, {"ppqq", &MomentSet::ppqq, {0, 2, 0, 2}},
      {"xxqq", &MomentSet::xxqq, {2, 0, 0, 2}}, {"yypp", &MomentSet::yypp, {0, 2, 2, 0}},
  };
  Worst w;
  for (const auto& p : reference_grid()) {
    for (int n = 0; n <= 3; ++n) {
      for (int m = 0; m <= 3; ++m) {
        const MomentSet s = o.moments(p, {n, m});
        for (const auto& e : entries) {
          const double ref = moment_oracle(p, {n, m}, e.mono);
          w.update(rel(s.*e.field, ref), std::string(e.name) + " " + where(p, {n, m}));
        }
      }
    }
  }
  return finish(w, 1e-10);
}

CheckResult resonance_null(const VerifyOptions& o) {
  Worst w;
  for (int k = 0; k < 10; ++k) {
    const double eps = 0.1 + (0.95 - 0.1) * k / 9.0;
    const SystemParams p{1.0, 1.0, eps};
    for (int n = 0; n <= 6; ++n) {
      for (int m = 0; m <= 6; ++m) {
        const SteeringResult s = steering_with(o, p, {n, m});
        w.update(std::max(std::abs(s.s_xy), std::abs(s.s_yx)), where(p, {n, m}));
      }
    }
  }
  return finish(w, 0.0);
}

CheckResult weak_coupling_match(const VerifyOptions& o) {
  // Near-degenerate detunings giving mixing mu = 1, tan(pi/6), tan(pi/8) at eps = 1e-4.
  const double eps = 1e-4;
  const double pi = std::acos(-1.0);
  std::vector<SystemParams> points{{1.0, 1.0, eps}};
  for (double theta : {pi / 6.0, pi / 8.0}) {
    points.push_back({1.0, std::sqrt(1.0 - 2.0 * eps / std::tan(2.0 * theta)), eps});
  }
  Worst w;
  for (const auto& p : points) {
    const double mu = diagonalize(p).mu;
    std::vector<QuantumNumbers> states;
    for (int k = 0; k <= 6; ++k) {
      states.push_back({k, 0});
      if (k > 0) states.push_back({0, k});
    }
    for (const auto nm : states) {
      const SteeringResult exact = steering_with(o, p, nm);
      const SteeringResult weak = steering_weak(nm, mu);
      const std::pair<double, double> dirs[] = {{exact.s_xy, weak.s_xy}, {exact.s_yx, weak.s_yx}};
      for (const auto& [e, r] : dirs) {
        if (r > 0.0) {
          w.update(rel(e, r), where(p, nm));
        } else if (e != 0.0) {
          w.update(1.0, where(p, nm) + " (nonzero where the limit vanishes)");
        }
      }
    }
  }
  return finish(w, 1e-3);
}

CheckResult quantization(const VerifyOptions&) {
  const double mu = std::sqrt(3.0) / 3.0;
  Worst w;
  double prev = 0.0;
  for (int n = 0; n <= 12; ++n) {
    const double s = steering_weak_general({n, 0}, mu);
    w.update(std::abs(s - n / 16.0), "n=" + std::to_string(n));
    if (n > 0) w.update(std::abs((s - prev) - 1.0 / 16.0), "gap at n=" + std::to_string(n));
    prev = s;
  }
  return finish(w, 4.0 * kEps);
}

CheckResult detuned_magnitude(const VerifyOptions& o) {
  const SweepSpec spec = steering_preset("detuned");
  double best = 0.0;
  std::string at;
  for (double eps : spec.epsilon.values()) {
    const SystemParams p{spec.omega_x, spec.omega_y.start, eps};
    try {
      validate(p);
    } catch (const ParameterError&) {
      continue;
    }
    for (int n = 0; n <= spec.n_max; ++n) {
      for (int m = 0; m <= spec.m_max; ++m) {
        const SteeringResult s = steering_with(o, p, {n, m});
        const double v = std::max(s.s_xy, s.s_yx);
        if (v > best) {
          best = v;
          at = where(p, {n, m});
        }
      }
    }
  }
  Worst w;
  w.value = best < 0.15 ? 0.15 - best : (best > 0.25 ? best - 0.25 : 0.0);
  w.at = at;
  char note[96];
  std::snprintf(note, sizeof note, "max = %.6f, required in [0.15, 0.25]", best);
  CheckResult r = finish(w, 0.0, note);
  return r;
}

CheckResult asymmetry(const VerifyOptions& o) {
  Worst w;
  for (const auto& name : steering_preset_names()) {
    const SweepSpec spec = steering_preset(name);
    for (double eps : spec.epsilon.values()) {
      const SystemParams p{spec.omega_x, spec.omega_y.start, eps};
      try {
        validate(p);
      } catch (const ParameterError&) {
        continue;
      }
      for (int n = 0; n <= spec.n_max; ++n) {
        for (int m = 0; m <= spec.m_max; ++m) {
          const SteeringResult s = steering_with(o, p, {n, m});
          w.update(std::abs(s.s_xy * s.s_yx), name + " " + where(p, {n, m}));
        }
      }
    }
  }
  for (int k = 0; k <= 20; ++k) {
    const double mu = k / 20.0;
    for (int n = 0; n <= 6; ++n) {
      for (int m = 0; m <= 6; ++m) {
        const SteeringResult s = steering_weak({n, m}, mu);
        char at[64];
        std::snprintf(at, sizeof at, "weak mu=%g n=%d m=%d", mu, n, m);
        w.update(std::abs(s.s_xy * s.s_yx), at);
      }
    }
  }
  return finish(w, 0.0);
}

CheckResult makarov_gap(const VerifyOptions&) {
  Worst w;
  for (int k = 0; k <= 20; ++k) {
    const double mu = k / 20.0;
    w.update(std::abs(makarov_entropy({0, 0}, mu)), "S_L^M(0,0) at mu=" + std::to_string(mu));
  }
  double min_exact = std::numeric_limits<double>::infinity();
  for (const auto& p : reference_grid()) {
    min_exact = std::min(min_exact, purity_exact(p, {0, 0}).linear_entropy);
  }
  if (!(min_exact > 0.0)) w.bad = true;
  const SystemParams usc{1.0, 1.0, 0.9};
  const double gap = entropy_gap(usc, {0, 0});
  const double expected = 1.0 - purity_ground_closed(usc).purity;
  w.update(std::abs(gap - expected), "gap at resonance eps=0.9");
  char note[128];
  std::snprintf(note, sizeof note, "gap(0,0; eps=0.9) = %.10f, min exact S_L(0,0) on grid = %.3e", gap,
                min_exact);
  return finish(w, 1e-10, note);
}

CheckResult schmidt_normalization(const VerifyOptions&) {
  Worst w;
  for (double mu : {0.2, 1.0 / std::sqrt(3.0), 0.9, 1.0}) {
    for (int n = 0; n <= 8; ++n) {
      for (int m = 0; n + m <= 8; ++m) {
        double sum = 0.0;
        for (double l : makarov_schmidt({n, m}, mu).lambdas) sum += l;
        char at[64];
        std::snprintf(at, sizeof at, "mu=%g n=%d m=%d", mu, n, m);
        w.update(std::abs(sum - 1.0), at);
      }
    }
  }
  return finish(w, 1e-10);
}

CheckResult uncertainty_structure(const VerifyOptions&) {
  Worst w;
  // Ax = Ay at resonance.
  for (int k = 0; k < 10; ++k) {
    const SystemParams p{1.0, 1.0, 0.1 + (0.95 - 0.1) * k / 9.0};
    for (int n = 0; n <= 6; ++n) {
      for (int m = 0; m <= 6; ++m) {
        const UncertaintyAreas a = uncertainty_areas(p, {n, m});
        w.update(rel(a.ax, a.ay), "Ax != Ay " + where(p, {n, m}));
      }
    }
  }
  // Heisenberg bound everywhere.
  double min_area = std::numeric_limits<double>::infinity();
  std::vector<SystemParams> all = reference_grid();
  for (double wy : {0.6, 0.8, 0.99, 1.0}) all.push_back({1.0, wy, 0.0});
  for (const auto& p : all) {
    for (int n = 0; n <= 6; ++n) {
      for (int m = 0; m <= 6; ++m) {
        const UncertaintyAreas a = uncertainty_areas(p, {n, m});
        min_area = std::min({min_area, a.ax, a.ay});
      }
    }
  }
  if (min_area < 0.5 * (1.0 - 4.0 * kEps)) w.bad = true;
  // Product areas when the modes do not mix.
  double worst_product = 0.0;
  for (double wy : {0.6, 0.8, 0.99}) {
    const SystemParams p{1.0, wy, 0.0};
    for (int n = 0; n <= 6; ++n) {
      for (int m = 0; m <= 6; ++m) {
        const UncertaintyAreas a = uncertainty_areas(p, {n, m});
        worst_product = std::max({worst_product, rel(a.ax, (2 * n + 1) / 2.0), rel(a.ay, (2 * m + 1) / 2.0)});
      }
    }
  }
  if (worst_product > 4.0 * kEps) w.bad = true;
  char note[128];
  std::snprintf(note, sizeof note, "min area = %.17g, worst uncoupled deviation = %.3e", min_area,
                worst_product);
  return finish(w, 1e-12, note);
}

CheckResult virtual_excitations(const VerifyOptions&) {
  Worst w;
  const SystemParams weak{1.0, 1.0, 1e-4};
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; m <= 6; ++m) {
      const ExcitationNumbers e = excitation_numbers(weak, {n, m});
      const double half = (n + m) / 2.0;
      w.update(std::max(std::abs(e.nx - half), std::abs(e.ny - half)), where(weak, {n, m}));
    }
  }
  const double tol_weak = 1e-6;
  const bool weak_ok = w.value <= tol_weak;
  const double weak_dev = w.value;

  // Ultrastrong ground state
  Worst u;
  const SystemParams usc{1.0, 1.0, 0.9};
  const ExcitationNumbers e = excitation_numbers(usc, {0, 0});
  const auto n_oracle = [&](Monomial a, Monomial b, double omega) {
    return 0.5 * (omega * moment_oracle(usc, {0, 0}, a) + moment_oracle(usc, {0, 0}, b) / omega) - 0.5;
  };
  const double nx_o = n_oracle({2, 0, 0, 0}, {0, 2, 0, 0}, usc.omega_x);
  const double ny_o = n_oracle({0, 0, 2, 0}, {0, 0, 0, 2}, usc.omega_y);
  u.update(rel(e.nx, nx_o), "Nx vs oracle");
  u.update(rel(e.ny, ny_o), "Ny vs oracle");
  u.update(rel(e.nx, e.ny), "Nx != Ny");
  if (!(e.nx > 0.0)) u.bad = true;

  CheckResult r = finish(u, 1e-10);
  char note[160];
  std::snprintf(note, sizeof note,
                "weak-coupling max |N - (n+m)/2| = %.3e (tol 1e-6); USC ground Nx = %.12f, Ny = %.12f",
                weak_dev, e.nx, e.ny);
  r.detail = std::string(note) + (r.detail.empty() ? "" : "; " + r.detail);
  r.passed = r.passed && weak_ok;
  return r;
}

CheckResult determinism(const VerifyOptions&) {
  SweepSpec purity_spec;
  purity_spec.omega_y = Range{0.8, 1.0, 3};
  purity_spec.epsilon = Range{0.0, 0.9, 7};
  purity_spec.n_max = 3;
  purity_spec.m_max = 3;
  const auto run = [&] {
    return to_csv(steering_scan(steering_preset("detuned", 41))) + to_csv(purity_scan(purity_spec)) +
           to_csv(energy_table(purity_spec)) + to_csv(cutoff_table(Range{0.1, 3.0, 100}));
  };
  const std::string a = run();
  const std::string b = run();
  Worst w;
  if (a != b) {
    w.value = 1.0;
    w.at = "CSV differs between runs";
  }
  return finish(w, 0.0, std::to_string(a.size()) + " bytes compared");
}

using CheckFn = CheckResult (*)(const VerifyOptions&);

struct CheckEntry {
  const char* name;
  CheckFn fn;
  double tolerance;
};

const CheckEntry kChecks[kCheckCount] = {
    {"ground-state-consistency", ground_consistency, 1e-10},
    {"oracle-equivalence", oracle_equivalence, 1e-6},
    {"global-purity", global_purity, 1e-8},
    {"moment-table", moment_table, 1e-10},
    {"resonance-null", resonance_null, 0.0},
    {"weak-coupling-match", weak_coupling_match, 1e-3},
    {"quantized-steering", quantization, 4.0 * kEps},
    {"detuned-magnitude", detuned_magnitude, 0.0},
    {"one-way-asymmetry", asymmetry, 0.0},
    {"schmidt-approximation-gap", makarov_gap, 1e-10},
    {"schmidt-normalization", schmidt_normalization, 1e-10},
    {"uncertainty-structure", uncertainty_structure, 1e-12},
    {"virtual-excitations", virtual_excitations, 1e-10},
    {"determinism", determinism, 0.0},
};

}  // namespace

std::vector<SystemParams> reference_grid() {
  std::vector<SystemParams> grid;
  for (double wy : {0.6, 0.8, 0.99, 1.0}) {
    for (double eps : Range{0.1, 0.95 * wy, 10}.values()) grid.push_back({1.0, wy, eps});
  }
  return grid;
}

std::string check_name(int id) {
  if (id < 1 || id > kCheckCount) throw ParameterError("no check with id " + std::to_string(id));
  return kChecks[id - 1].name;
}

CheckResult run_check(int id, const VerifyOptions& options) {
  if (id < 1 || id > kCheckCount) throw ParameterError("no check with id " + std::to_string(id));
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = kChecks[id - 1].fn(options);
  } catch (const std::exception& e) {
    r = CheckResult{};
    r.max_deviation = std::numeric_limits<double>::infinity();
    r.tolerance = kChecks[id - 1].tolerance;
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.id = id;
  r.name = kChecks[id - 1].name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCheckCount; ++id) out.push_back(run_check(id, options));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

void print_report(std::ostream& os, const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    char line[160];
    std::snprintf(line, sizeof line, "%s  %2d %-27s max_dev=%-11.3e tol=%-9.1e %7.2fs", r.passed ? "PASS" : "FAIL",
                  r.id, r.name.c_str(), r.max_deviation, r.tolerance, r.seconds);
    os << line;
    if (!r.detail.empty()) os << "  " << r.detail;
    os << '\n';
  }
  const auto failed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; });
  os << (failed ? std::to_string(failed) + " check(s) failed" : "all checks passed") << '\n';
}

std::string report_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["name"] = r.name;
    j["passed"] = r.passed;
    if (std::isfinite(r.max_deviation)) {
      j["max_deviation"] = r.max_deviation;
    } else {
      j["max_deviation"] = "inf";
    }
    j["tolerance"] = r.tolerance;
    j["seconds"] = r.seconds;
    j["detail"] = r.detail;
    arr.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["passed"] = all_passed(results);
  out["checks"] = std::move(arr);
  return out.dump(2) + "\n";
}

}  // namespace oscsteer
