// nclandau: spectra of a charged particle on the noncommutative plane in a
// constant magnetic field with an anisotropic harmonic trap.
//
//   nclandau spectrum --omega1 1 --omega2 1 --gauge symmetric --theta 0.5
//   nclandau sweep --from 0 --to 0.9 --steps 64 --out fig2.csv
//   nclandau audit --samples 100 --seed 7 --theta 0.3
//   nclandau oracle --config iso.json --nmax 32

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nclandau/nclandau.hpp"

namespace {

using namespace nclandau;

/// Flags shared by every subcommand. Values given on the command line win
/// over the config file.
struct CommonFlags {
  std::string config;
  std::string gauge;
  std::vector<std::string> gauges;
  std::string prescription;
  std::vector<std::string> prescriptions;
  std::optional<double> r, s;
  std::optional<double> hbar, m, omega1, omega2, omega_c, theta;
  bool paper_convention = false;
  std::string report;

  void attach(CLI::App* app, bool multi) {
    app->add_option("--config", config, "JSON scenario file")->check(CLI::ExistingFile);
    if (multi) {
      app->add_option("--gauge", gauges, "landau|symmetric|rs (repeatable)");
      app->add_option("--prescription", prescriptions, "group|nmp (repeatable)");
    } else {
      app->add_option("--gauge", gauge, "landau|symmetric|rs");
      app->add_option("--prescription", prescription, "group|nmp");
    }
    app->add_option("--r", r, "gauge parameter r (with --gauge rs)");
    app->add_option("--s", s, "gauge parameter s (with --gauge rs)");
    app->add_option("--hbar", hbar, "Planck constant (default 1)");
    app->add_option("--m", m, "mass (default 1)");
    app->add_option("--omega1", omega1, "trap frequency along X (default 0)");
    app->add_option("--omega2", omega2, "trap frequency along Y (default 0)");
    app->add_option("--omega-c", omega_c, "cyclotron frequency B/m (default 1)");
    app->add_option("--theta", theta, "spatial noncommutativity (default 0)");
    app->add_option("--report", report, "write a JSON run report to this path");
  }

  Scenario scenario() const {
    Scenario sc;
    if (!config.empty()) {
      std::ifstream f(config);
      std::stringstream buf;
      buf << f.rdbuf();
      sc = parse_config(buf.str(), sc);
    }
    auto set = [](double& dst, const std::optional<double>& v) {
      if (v) dst = *v;
    };
    set(sc.inputs.hbar, hbar);
    set(sc.inputs.m, m);
    set(sc.inputs.omega1, omega1);
    set(sc.inputs.omega2, omega2);
    set(sc.inputs.omega_c, omega_c);
    set(sc.inputs.theta, theta);
    if (r.has_value() != s.has_value()) throw UsageError("--r and --s go together");
    if (r) {
      sc.rs = GaugePair{*r, *s};
      sc.gauge = GaugeKind::Rs;
    }
    if (!gauge.empty()) sc.gauge = parse_gauge(gauge);
    if (!prescription.empty()) sc.prescription = parse_prescription(prescription);
    return sc;
  }

  std::optional<std::string> report_path() const {
    return report.empty() ? std::nullopt : std::optional<std::string>(report);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauge-invariant spectra of the noncommutative Landau problem"};
  app.require_subcommand(1);

  CommonFlags spectrum_flags, sweep_flags, audit_flags, oracle_flags;

  auto* spectrum = app.add_subcommand("spectrum", "eigenfrequencies and lowest energy levels");
  spectrum_flags.attach(spectrum, false);
  int levels = 6;
  spectrum->add_option("--levels", levels, "number of levels to list")->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "theta sweep written as CSV");
  sweep_flags.attach(sweep, true);
  std::string param = "theta";
  SweepCommandOptions sweep_opts;
  std::string out_path;
  sweep->add_option("--param", param, "swept parameter (theta)");
  sweep->add_option("--from", sweep_opts.sweep.from, "first theta");
  sweep->add_option("--to", sweep_opts.sweep.to, "last theta");
  sweep->add_option("--steps", sweep_opts.sweep.steps, "grid points");
  sweep->add_option("--out", out_path, "CSV path (stdout if absent)");

  auto* audit = app.add_subcommand("audit", "random-gauge invariance audit");
  audit_flags.attach(audit, false);
  int samples = 100;
  std::uint64_t seed = 0;
  audit->add_option("--samples", samples, "number of random (r, s) pairs");
  audit->add_option("--seed", seed, "generator seed");

  auto* oracle = app.add_subcommand("oracle", "check the spectrum against independent oracles");
  oracle_flags.attach(oracle, false);
  OracleOptions oracle_opts;
  oracle->add_option("--nmax", oracle_opts.nmax, "largest Fock truncation per mode");
  oracle->add_option("--levels", oracle_opts.levels, "levels compared")->check(CLI::PositiveNumber);
  oracle->add_option("--tol", oracle_opts.tol, "relative tolerance on energies");

  spectrum->add_flag("--paper-convention", spectrum_flags.paper_convention,
                     "use the printed C1/C2 ladder invariants");
  oracle->add_flag("--paper-convention", oracle_flags.paper_convention,
                   "use the printed C1/C2 ladder invariants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*spectrum) {
      SpectrumOptions o;
      o.scenario = spectrum_flags.scenario();
      o.levels = levels;
      o.paper_convention = spectrum_flags.paper_convention;
      o.report = spectrum_flags.report_path();
      return run_spectrum(o, std::cout, std::cerr);
    }
    if (*sweep) {
      if (param != "theta") throw UsageError("only --param theta is supported");
      sweep_opts.sweep.base = sweep_flags.scenario();
      if (!sweep_flags.gauges.empty()) {
        sweep_opts.sweep.gauges.clear();
        for (const auto& g : sweep_flags.gauges) sweep_opts.sweep.gauges.push_back(parse_gauge(g));
      }
      if (!sweep_flags.prescriptions.empty()) {
        sweep_opts.sweep.prescriptions.clear();
        for (const auto& p : sweep_flags.prescriptions)
          sweep_opts.sweep.prescriptions.push_back(parse_prescription(p));
      }
      if (!out_path.empty()) sweep_opts.out = out_path;
      sweep_opts.report = sweep_flags.report_path();
      return run_sweep_command(sweep_opts, std::cout, std::cerr);
    }
    if (*audit) {
      AuditCommandOptions o;
      o.audit.base = audit_flags.scenario();
      o.audit.samples = samples;
      o.audit.seed = seed;
      if (o.audit.base.gauge == GaugeKind::Rs) {
        if (!o.audit.base.rs) throw UsageError("--gauge rs needs --r and --s");
        o.audit.forced = o.audit.base.rs;
      }
      o.report = audit_flags.report_path();
      return run_audit_command(o, std::cout, std::cerr);
    }
    if (*oracle) {
      oracle_opts.scenario = oracle_flags.scenario();
      oracle_opts.paper_convention = oracle_flags.paper_convention;
      oracle_opts.report = oracle_flags.report_path();
      return run_oracle(oracle_opts, std::cout, std::cerr);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidArgument ? kExitUsage : kExitDomain;
  }
  return kExitUsage;
}
