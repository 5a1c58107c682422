#include "oscsteer/tables.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "oscsteer/errors.hpp"
#include "oscsteer/moments.hpp"
#include "oscsteer/purity.hpp"
#include "oscsteer/steering.hpp"
#include "oscsteer/wigner.hpp"

namespace oscsteer {
namespace {

double parse_double(std::string_view text) {
  const std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParameterError("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) throw ParameterError("not a number: '" + s + "'");
  return v;
}

int parse_int(std::string_view text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParameterError("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

void check_spec(const SweepSpec& spec) {
  if (spec.n_max < 0 || spec.m_max < 0) throw ParameterError("n-max and m-max must be >= 0");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Calls row(params) for each (omega_y, epsilon) point that passes
// validation, recording a warning for every point that does not.
template <typename F>
void for_each_point(const SweepSpec& spec, Table& table, F&& row) {
  for (double wy : spec.omega_y.values()) {
    for (double eps : spec.epsilon.values()) {
      const SystemParams params{spec.omega_x, wy, eps};
      try {
        validate(params);
      } catch (const ParameterError& e) {
        table.warnings.push_back("skipping omega_x=" + format_double(spec.omega_x) +
                                 " omega_y=" + format_double(wy) + " epsilon=" +
                                 format_double(eps) + ": " + e.what());
        continue;
      }
      row(params);
    }
  }
}

}  // namespace

Range Range::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t colon = text.find(':', begin);
    parts.push_back(text.substr(begin, colon - begin));
    if (colon == std::string_view::npos) break;
    begin = colon + 1;
  }
  Range r;
  if (parts.size() == 1) {
    r = single(parse_double(parts[0]));
  } else if (parts.size() == 3) {
    r = {parse_double(parts[0]), parse_double(parts[1]), parse_int(parts[2])};
  } else {
    throw ParameterError("range must be 'value' or 'start:stop:steps', got '" + std::string(text) + "'");
  }
  if (r.steps < 1) throw ParameterError("range needs at least one step");
  return r;
}

std::vector<double> Range::values() const {
  if (steps < 1) throw ParameterError("range needs at least one step");
  std::vector<double> out(steps);
  if (steps == 1) {
    out[0] = start;
    return out;
  }
  for (int i = 0; i < steps; ++i) {
    out[i] = (i == steps - 1) ? stop : start + (stop - start) * (static_cast<double>(i) / (steps - 1));
  }
  return out;
}

SweepSpec steering_preset(std::string_view name, int eps_steps) {
  double wy = 0.0;
  if (name == "near-resonant") {
    wy = 0.99;
  } else if (name == "detuned") {
    wy = 0.8;
  } else if (name == "far-detuned") {
    wy = 0.6;
  } else {
    throw ParameterError("unknown preset '" + std::string(name) + "'");
  }
  SweepSpec spec;
  spec.omega_x = 1.0;
  spec.omega_y = Range::single(wy);
  spec.epsilon = Range{0.0, wy, eps_steps};
  spec.n_max = 6;
  spec.m_max = 6;
  return spec;
}

std::vector<std::string> steering_preset_names() { return {"near-resonant", "detuned", "far-detuned"}; }

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      if (const auto* iv = std::get_if<std::int64_t>(&row[i])) {
        os << *iv;
      } else {
        os << format_double(std::get<double>(row[i]));
      }
    }
    os << '\n';
  }
}

std::string to_csv(const Table& table) {
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

void write_json(std::ostream& os, const Table& table) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](auto v) { rec[table.columns[i]] = v; }, row[i]);
    }
    out.push_back(std::move(rec));
  }
  os << out.dump(2) << '\n';
}

Table cutoff_table(const Range& r) {
  Table t;
  t.columns = {"r", "theta_c"};
  for (double rate : r.values()) {
    if (!(rate > 0.0)) {
      t.warnings.push_back("skipping r=" + format_double(rate) + ": resonance rate must be positive");
      continue;
    }
    t.rows.push_back({rate, cutoff_angle(rate)});
  }
  return t;
}

Table energy_table(const SweepSpec& spec) {
  check_spec(spec);
  Table t;
  t.columns = {"omega_x", "omega_y", "epsilon", "n", "m", "energy"};
  for_each_point(spec, t, [&](const SystemParams& p) {
    for (int n = 0; n <= spec.n_max; ++n) {
      for (int m = 0; m <= spec.m_max; ++m) {
        t.rows.push_back({p.omega_x, p.omega_y, p.epsilon, std::int64_t{n}, std::int64_t{m},
                          energy(p, {n, m})});
      }
    }
  });
  return t;
}

Table purity_scan(const SweepSpec& spec) {
  check_spec(spec);
  Table t;
  t.columns = {"omega_x", "omega_y", "epsilon", "n", "m", "purity", "S_L", "S_L_makarov", "delta_S_L"};
  for_each_point(spec, t, [&](const SystemParams& p) {
    const double mu = std::abs(diagonalize(p).mu);
    for (int n = 0; n <= spec.n_max; ++n) {
      for (int m = 0; m <= spec.m_max; ++m) {
        const PurityResult pr = purity_exact(p, {n, m});
        const double sm = makarov_entropy({n, m}, mu);
        t.rows.push_back({p.omega_x, p.omega_y, p.epsilon, std::int64_t{n}, std::int64_t{m},
                          pr.purity, pr.linear_entropy, sm, pr.linear_entropy - sm});
      }
    }
  });
  return t;
}

Table steering_scan(const SweepSpec& spec) {
  check_spec(spec);
  Table t;
  t.columns = {"omega_x", "omega_y", "epsilon", "n", "m", "s_xy", "s_yx", "delta", "s_xy_raw", "s_yx_raw"};
  for_each_point(spec, t, [&](const SystemParams& p) {
    for (int n = 0; n <= spec.n_max; ++n) {
      for (int m = 0; m <= spec.m_max; ++m) {
        const SteeringResult s = steering(p, {n, m});
        t.rows.push_back({p.omega_x, p.omega_y, p.epsilon, std::int64_t{n}, std::int64_t{m},
                          s.s_xy, s.s_yx, s.delta, s.s_xy_raw, s.s_yx_raw});
      }
    }
  });
  return t;
}

Table weak_steering_table(double mu, int n_max, int m_max) {
  if (n_max < 0 || m_max < 0) throw ParameterError("n-max and m-max must be >= 0");
  Table t;
  t.columns = {"mu", "n", "m", "s_xy", "s_yx", "delta", "s_xy_raw", "s_yx_raw"};
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= m_max; ++m) {
      const SteeringResult s = steering_weak({n, m}, mu);
      t.rows.push_back({mu, std::int64_t{n}, std::int64_t{m}, s.s_xy, s.s_yx, s.delta, s.s_xy_raw,
                        s.s_yx_raw});
    }
  }
  return t;
}

Table wigner_grid(const SystemParams& params, QuantumNumbers nm, const Range& x, const Range& p,
                  const Range& y, const Range& q) {
  const NormalModes modes = diagonalize(params);
  validate(nm);
  Table t;
  t.columns = {"x", "p", "y", "q", "W"};
  for (double xv : x.values())
    for (double pv : p.values())
      for (double yv : y.values())
        for (double qv : q.values()) {
          t.rows.push_back({xv, pv, yv, qv, wigner_lab(modes, nm, {xv, pv, yv, qv})});
        }
  return t;
}

std::string moments_json(const SystemParams& params, QuantumNumbers nm) {
  const MomentSet s = second_and_fourth_moments(params, nm);
  const UncertaintyAreas a = uncertainty_areas(params, nm);
  const ExcitationNumbers e = excitation_numbers(params, nm);
  const NormalModes modes = diagonalize(params);
  nlohmann::ordered_json j;
  j["omega_x"] = params.omega_x;
  j["omega_y"] = params.omega_y;
  j["epsilon"] = params.epsilon;
  j["n"] = nm.n;
  j["m"] = nm.m;
  j["theta"] = modes.theta;
  j["mu"] = modes.mu;
  j["vartheta_x"] = modes.vartheta_x;
  j["vartheta_y"] = modes.vartheta_y;
  j["moments"] = {{"xx", s.xx},     {"yy", s.yy},     {"pp", s.pp},     {"qq", s.qq},
                  {"xy", s.xy},     {"pq", s.pq},     {"xxyy", s.xxyy}, {"ppqq", s.ppqq},
                  {"xxqq", s.xxqq}, {"yypp", s.yypp}};
  j["areas"] = {{"ax", a.ax}, {"ay", a.ay}};
  j["excitations"] = {{"nx", e.nx}, {"ny", e.ny}};
  return j.dump(2) + "\n";
}

}  // namespace oscsteer
