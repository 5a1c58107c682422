#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oscsteer/model.hpp"

namespace oscsteer {

// Inclusive linear range "start:stop:steps"; a bare number is a one-point range.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;

  static Range parse(std::string_view text);
  static Range single(double value) { return {value, value, 1}; }
  std::vector<double> values() const;
};

struct SweepSpec {
  double omega_x = 1.0;
  Range omega_y = Range::single(1.0);
  Range epsilon = Range{0.0, 0.9, 10};
  int n_max = 3;
  int m_max = 3;
};

// Fixed-omega_x = 1 sweeps over eps in [0, omega_y]:
// "near-resonant" (omega_y = 0.99), "detuned" (0.8), "far-detuned" (0.6).
SweepSpec steering_preset(std::string_view name, int eps_steps = 161);
std::vector<std::string> steering_preset_names();

using Cell = std::variant<std::int64_t, double>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> warnings;  // skipped rows
};

// CSV with a header row and %.17g floats; byte-stable for a given table.
void write_csv(std::ostream& os, const Table& table);
// JSON array of records keyed by column name, in column order.
void write_json(std::ostream& os, const Table& table);
std::string to_csv(const Table& table);

// (r, theta_c)
Table cutoff_table(const Range& r);
// (omega_x, omega_y, epsilon, n, m, energy)
Table energy_table(const SweepSpec& spec);
// (omega_x, omega_y, epsilon, n, m, purity, S_L, S_L_makarov, delta_S_L)
Table purity_scan(const SweepSpec& spec);
// (omega_x, omega_y, epsilon, n, m, s_xy, s_yx, delta, s_xy_raw, s_yx_raw)
Table steering_scan(const SweepSpec& spec);
// Equal-frequency closed form on an (n, m) grid at fixed mixing:
// (mu, n, m, s_xy, s_yx, delta, s_xy_raw, s_yx_raw)
Table weak_steering_table(double mu, int n_max, int m_max);
// (x, p, y, q, W) on a tensor grid in lab coordinates.
Table wigner_grid(const SystemParams& params, QuantumNumbers nm, const Range& x, const Range& p,
                  const Range& y, const Range& q);

// MomentSet, Heisenberg areas and excitation numbers as a JSON object.
std::string moments_json(const SystemParams& params, QuantumNumbers nm);

}  // namespace oscsteer
