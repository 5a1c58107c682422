#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "oscsteer/errors.hpp"
#include "oscsteer/tables.hpp"
#include "oscsteer/verify.hpp"

namespace oscsteer::cli {
namespace {

struct Common {
  double omega_x = 1.0;
  std::string omega_y = "1";
  std::string epsilon = "0:0.9:10";
  int n_max = 3;
  int m_max = 3;
  std::string format = "csv";
  std::string output;
};

void add_common(CLI::App* cmd, Common& c, bool sweep) {
  cmd->add_option("--omega-x", c.omega_x, "Bare frequency of x")->capture_default_str();
  if (sweep) {
    cmd->add_option("--omega-y", c.omega_y, "Bare frequency of y, value or start:stop:steps")
        ->capture_default_str();
    cmd->add_option("--epsilon", c.epsilon, "Coupling range start:stop:steps")->capture_default_str();
    cmd->add_option("--n-max", c.n_max, "Largest n")->capture_default_str();
    cmd->add_option("--m-max", c.m_max, "Largest m")->capture_default_str();
  } else {
    cmd->add_option("--omega-y", c.omega_y, "Bare frequency of y")->capture_default_str();
    cmd->add_option("--epsilon", c.epsilon, "Coupling")->capture_default_str();
  }
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", c.output, "Write to PATH instead of stdout");
}

SweepSpec sweep_from(const Common& c) {
  SweepSpec s;
  s.omega_x = c.omega_x;
  s.omega_y = Range::parse(c.omega_y);
  s.epsilon = Range::parse(c.epsilon);
  s.n_max = c.n_max;
  s.m_max = c.m_max;
  if (s.n_max < 0 || s.m_max < 0) throw ParameterError("--n-max and --m-max must be >= 0");
  return s;
}

double single_value(const std::string& text, const char* flag) {
  const Range r = Range::parse(text);
  if (r.steps != 1) throw ParameterError(std::string(flag) + " takes a single value here");
  return r.start;
}

// Opens --output if given; returns the stream to write to.
std::ostream& sink(const Common& c, std::optional<std::ofstream>& file, std::ostream& out) {
  if (c.output.empty()) return out;
  file.emplace(c.output, std::ios::binary);
  if (!*file) throw ParameterError("cannot open output file '" + c.output + "'");
  return *file;
}

int emit(const Table& t, const Common& c, std::ostream& out, std::ostream& err) {
  for (const auto& w : t.warnings) err << "warning: " << w << '\n';
  std::optional<std::ofstream> file;
  std::ostream& os = sink(c, file, out);
  if (c.format == "json") {
    write_json(os, t);
  } else {
    write_csv(os, t);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra, entanglement and steering of two coupled oscillators", "oscsteer"};
  app.require_subcommand(1);

  Common spectrum_opts;
  std::string r_scan;
  auto* spectrum = app.add_subcommand("spectrum", "Energies over an eps sweep, or the cutoff angle vs r");
  add_common(spectrum, spectrum_opts, true);
  spectrum->add_option("--r-scan", r_scan, "Resonance rates start:stop:steps for the cutoff angle");

  Common moments_opts;
  int mom_n = 0, mom_m = 0;
  auto* moments = app.add_subcommand("moments", "Moment table, areas and excitations of one state (JSON)");
  add_common(moments, moments_opts, false);
  moments->add_option("--n", mom_n, "Excitation of the first normal mode")->capture_default_str();
  moments->add_option("--m", mom_m, "Excitation of the second normal mode")->capture_default_str();

  Common wigner_opts;
  int wig_n = 0, wig_m = 0;
  std::string wx = "0", wp = "0", wy = "0", wq = "0";
  auto* wigner = app.add_subcommand("wigner-eval", "Wigner function on a lab-frame grid");
  add_common(wigner, wigner_opts, false);
  wigner->add_option("--n", wig_n, "Excitation of the first normal mode")->capture_default_str();
  wigner->add_option("--m", wig_m, "Excitation of the second normal mode")->capture_default_str();
  wigner->add_option("--x", wx, "x value or range")->capture_default_str();
  wigner->add_option("--p", wp, "p value or range")->capture_default_str();
  wigner->add_option("--y", wy, "y value or range")->capture_default_str();
  wigner->add_option("--q", wq, "q value or range")->capture_default_str();

  Common purity_opts;
  auto* purity = app.add_subcommand("purity-scan", "Marginal purity and linear entropies");
  add_common(purity, purity_opts, true);

  Common steering_opts;
  std::string preset;
  std::optional<double> weak_mu;
  auto* steer = app.add_subcommand("steering-scan", "Directional steering quantifiers");
  add_common(steer, steering_opts, true);
  steer->add_option("--preset", preset, "Fixed sweep: near-resonant, detuned or far-detuned")
      ->check(CLI::IsMember(steering_preset_names()));
  steer->add_option("--weak-mu", weak_mu, "Tabulate the equal-frequency limit at this mixing instead");

  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Run the built-in verification suite");
  verify->add_flag("--json", verify_json, "Machine-readable report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    (void)e;
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (spectrum->parsed()) {
      if (!r_scan.empty()) return emit(cutoff_table(Range::parse(r_scan)), spectrum_opts, out, err);
      return emit(energy_table(sweep_from(spectrum_opts)), spectrum_opts, out, err);
    }
    if (moments->parsed()) {
      const SystemParams p{moments_opts.omega_x, single_value(moments_opts.omega_y, "--omega-y"),
                           single_value(moments_opts.epsilon, "--epsilon")};
      validate(p);
      validate(QuantumNumbers{mom_n, mom_m});
      const std::string text = moments_json(p, {mom_n, mom_m});
      std::optional<std::ofstream> file;
      sink(moments_opts, file, out) << text;
      return kExitOk;
    }
    if (wigner->parsed()) {
      const SystemParams p{wigner_opts.omega_x, single_value(wigner_opts.omega_y, "--omega-y"),
                           single_value(wigner_opts.epsilon, "--epsilon")};
      validate(p);
      return emit(wigner_grid(p, {wig_n, wig_m}, Range::parse(wx), Range::parse(wp), Range::parse(wy),
                              Range::parse(wq)),
                  wigner_opts, out, err);
    }
    if (purity->parsed()) return emit(purity_scan(sweep_from(purity_opts)), purity_opts, out, err);
    if (steer->parsed()) {
      if (weak_mu) {
        return emit(weak_steering_table(*weak_mu, steering_opts.n_max, steering_opts.m_max), steering_opts,
                    out, err);
      }
      SweepSpec spec = preset.empty() ? sweep_from(steering_opts) : steering_preset(preset);
      if (!preset.empty()) {
        if (steer->count("--n-max")) spec.n_max = steering_opts.n_max;
        if (steer->count("--m-max")) spec.m_max = steering_opts.m_max;
        if (steer->count("--epsilon")) spec.epsilon = Range::parse(steering_opts.epsilon);
      }
      return emit(steering_scan(spec), steering_opts, out, err);
    }
    if (verify->parsed()) {
      const auto results = run_verification();
      if (verify_json) {
        out << report_json(results);
      } else {
        print_report(out, results);
      }
      if (!all_passed(results)) {
        for (const auto& r : results) {
          if (!r.passed) err << "failed: " << r.name << '\n';
        }
        return kExitVerifyFailed;
      }
      return kExitOk;
    }
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace oscsteer::cli
