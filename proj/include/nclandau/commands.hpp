#pragma once

// Subcommand bodies of the nclandau CLI. Each returns a process exit code:
// 0 ok, 1 usage/config, 2 domain, 3 audit failure, 4 oracle disagreement.

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nclandau/audit.hpp"
#include "nclandau/error.hpp"
#include "nclandau/fock_oracle.hpp"
#include "nclandau/scenario.hpp"
#include "nclandau/spectra.hpp"
#include "nclandau/sweep.hpp"

namespace nclandau {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDomain = 2,
  kExitAuditFailure = 3,
  kExitOracleDisagreement = 4,
};

struct SpectrumOptions {
  Scenario scenario;
  int levels = 6;
  bool paper_convention = false;
  std::optional<std::string> report;
};

struct SweepCommandOptions {
  SweepOptions sweep;
  std::optional<std::string> out;
  std::optional<std::string> report;
};

struct AuditCommandOptions {
  AuditOptions audit;
  std::optional<std::string> report;
};

struct OracleOptions {
  Scenario scenario;
  int nmax = 64;
  int levels = 6;
  double tol = 1e-6;
  bool paper_convention = false;
  std::optional<std::string> report;
};

namespace detail {

inline nlohmann::json scenario_json(const Scenario& sc) {
  nlohmann::json j = {{"hbar", sc.inputs.hbar},         {"m", sc.inputs.m},
                      {"omega1", sc.inputs.omega1},     {"omega2", sc.inputs.omega2},
                      {"omega_c", sc.inputs.omega_c},   {"theta", sc.inputs.theta},
                      {"prescription", to_string(sc.prescription)},
                      {"gauge", to_string(sc.gauge)}};
  if (sc.rs) {
    j["r"] = sc.rs->r;
    j["s"] = sc.rs->s;
  }
  return j;
}

inline nlohmann::json form_json(const QuadraticForm& qf) {
  return {{"M1", qf.M1()},           {"M2", qf.M2()},           {"Omega1_sq", qf.Omega1_sq()},
          {"Omega2_sq", qf.Omega2_sq()}, {"l1", qf.l1()},       {"l2", qf.l2()}};
}

inline void write_report(const std::optional<std::string>& path, const nlohmann::json& j) {
  if (!path) return;
  std::ofstream f(*path);
  if (!f) throw UsageError("cannot write report to '" + *path + "'");
  f << j.dump(2) << '\n';
}

inline std::string fmt(double x) { return format_number(x); }

inline void print_scenario(std::ostream& out, const Scenario& sc) {
  out << "prescription " << to_string(sc.prescription) << ", gauge " << to_string(sc.gauge);
  if (sc.gauge == GaugeKind::Rs && sc.rs) out << " (r=" << fmt(sc.rs->r) << ", s=" << fmt(sc.rs->s) << ")";
  out << "\nhbar=" << fmt(sc.inputs.hbar) << " m=" << fmt(sc.inputs.m)
      << " omega1=" << fmt(sc.inputs.omega1) << " omega2=" << fmt(sc.inputs.omega2)
      << " omega_c=" << fmt(sc.inputs.omega_c) << " theta=" << fmt(sc.inputs.theta) << '\n';
}

/// Runs `body`, mapping exceptions onto exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidArgument ? kExitUsage : kExitDomain;
  }
}

}  // namespace detail

inline int run_spectrum(const SpectrumOptions& opts, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    using detail::fmt;
    const Convention conv =
        opts.paper_convention ? Convention::PaperPrinted : Convention::Dynamical;
    const Analysis a = analyze(opts.scenario, conv);
    const double hbar = opts.scenario.inputs.hbar;

    detail::print_scenario(out, opts.scenario);
    if (opts.paper_convention) out << "convention: printed C1/C2 (paper convention)\n";
    out << "S = " << fmt(a.invariants.S) << "\nP = " << fmt(a.invariants.P) << '\n';
    out << "omega_tilde_1 = " << fmt(a.frequencies.omega_tilde_1) << '\n';
    out << "omega_tilde_2 = " << fmt(a.frequencies.omega_tilde_2) << '\n';
    out << "E00 = " << fmt(energy(a.frequencies, hbar, 0, 0).E) << '\n';

    nlohmann::json report = {{"command", "spectrum"},
                             {"scenario", detail::scenario_json(opts.scenario)},
                             {"form", detail::form_json(a.form)},
                             {"S", a.invariants.S},
                             {"P", a.invariants.P},
                             {"omega_tilde_1", a.frequencies.omega_tilde_1},
                             {"omega_tilde_2", a.frequencies.omega_tilde_2},
                             {"paper_convention", opts.paper_convention}};
    try {
      const auto levels = enumerate_levels(a.frequencies, hbar, opts.levels);
      out << "levels:\n";
      nlohmann::json jl = nlohmann::json::array();
      for (const auto& l : levels) {
        out << "  (" << l.n1 << ", " << l.n2 << ")  E = " << fmt(l.E) << "  group " << l.group
            << '\n';
        jl.push_back({{"n1", l.n1}, {"n2", l.n2}, {"E", l.E}, {"group", l.group}});
      }
      report["levels"] = jl;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroModeUnsupported) throw;
      out << "levels: not listed, omega_tilde_2 = 0 is a zero mode "
             "(every level infinitely degenerate)\n";
      report["levels"] = nullptr;
      report["zero_mode"] = true;
    }
    detail::write_report(opts.report, report);
    return int{kExitOk};
  });
}

inline int run_sweep_command(const SweepCommandOptions& opts, std::ostream& out,
                             std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto rows = run_sweep(opts.sweep);
    if (opts.out) {
      std::ofstream f(*opts.out);
      if (!f) throw UsageError("cannot write CSV to '" + *opts.out + "'");
      write_csv(f, rows);
      out << "wrote " << rows.size() << " rows to " << *opts.out << '\n';
    } else {
      write_csv(out, rows);
    }
    nlohmann::json counts = nlohmann::json::object();
    std::size_t ok = 0;
    for (const auto& r : rows) {
      counts[std::string(to_string(r.status))] =
          counts.value(std::string(to_string(r.status)), 0) + 1;
      ok += r.status == RowStatus::Ok;
    }
    nlohmann::json gauges = nlohmann::json::array();
    for (auto g : opts.sweep.gauges) gauges.push_back(to_string(g));
    nlohmann::json prescriptions = nlohmann::json::array();
    for (auto p : opts.sweep.prescriptions) prescriptions.push_back(to_string(p));
    detail::write_report(opts.report, {{"command", "sweep"},
                                       {"scenario", detail::scenario_json(opts.sweep.base)},
                                       {"param", "theta"},
                                       {"from", opts.sweep.from},
                                       {"to", opts.sweep.to},
                                       {"steps", opts.sweep.steps},
                                       {"gauges", gauges},
                                       {"prescriptions", prescriptions},
                                       {"rows", rows.size()},
                                       {"status_counts", counts},
                                       {"csv", opts.out ? nlohmann::json(*opts.out) : nullptr}});
    if (ok == 0) {
      err << "error: no row of the sweep is inside the domain\n";
      return int{kExitDomain};
    }
    return int{kExitOk};
  });
}

inline int run_audit_command(const AuditCommandOptions& opts, std::ostream& out,
                             std::ostream& err) {
  return detail::guarded(err, [&] {
    using detail::fmt;
    const AuditResult res = run_audit(opts.audit);
    detail::print_scenario(out, opts.audit.base);
    out << "reference (Landau gauge): S = " << fmt(res.reference.S)
        << ", P = " << fmt(res.reference.P) << '\n';
    out << "samples: " << res.samples.size() << '\n';
    out << "max |dS| = " << fmt(res.max_dS) << "\nmax |dP| = " << fmt(res.max_dP)
        << "\nmax commutator deviation = " << fmt(res.max_commutator_dev) << '\n';

    nlohmann::json report = {{"command", "audit"},
                             {"scenario", detail::scenario_json(opts.audit.base)},
                             {"seed", opts.audit.seed},
                             {"samples", res.samples.size()},
                             {"reference", {{"S", res.reference.S}, {"P", res.reference.P}}},
                             {"max_dS", res.max_dS},
                             {"max_dP", res.max_dP},
                             {"max_commutator_deviation", res.max_commutator_dev},
                             {"passed", res.passed()}};
    if (!res.passed()) {
      report["offending"] = {{"r", res.offending->r}, {"s", res.offending->s}};
      detail::write_report(opts.report, report);
      out << "FAIL: gauge (r=" << fmt(res.offending->r) << ", s=" << fmt(res.offending->s)
          << ") breaks invariance\n";
      return int{kExitAuditFailure};
    }
    detail::write_report(opts.report, report);
    out << "PASS: spectra independent of (r, s)\n";
    return int{kExitOk};
  });
}

/// 8, 16, ... up to nmax (nmax itself if below 8).
inline std::vector<int> doubling_schedule(int nmax) {
  if (nmax < 2) throw UsageError("--nmax must be >= 2");
  std::vector<int> s;
  for (int n = 8; n <= nmax; n *= 2) s.push_back(n);
  if (s.empty() || s.back() != nmax) s.push_back(nmax);
  return s;
}

inline int run_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    using detail::fmt;
    const Convention conv =
        opts.paper_convention ? Convention::PaperPrinted : Convention::Dynamical;
    const Analysis a = analyze(opts.scenario, conv);
    CompareOptions co;
    co.tol = opts.tol;
    co.levels = opts.levels;
    co.schedule = doubling_schedule(opts.nmax);
    const OracleReport rep = compare(a.frequencies, a.form, opts.scenario.inputs.hbar, co);

    detail::print_scenario(out, opts.scenario);
    if (opts.paper_convention) out << "convention: printed C1/C2 (paper convention)\n";
    out << "analytic omega_tilde = (" << fmt(a.frequencies.omega_tilde_1) << ", "
        << fmt(a.frequencies.omega_tilde_2) << ")\n";
    out << "analytic (S, P) = (" << fmt(rep.analytic_invariants.S) << ", "
        << fmt(rep.analytic_invariants.P) << ")\n";
    out << "dynamical-matrix (S, P) = (" << fmt(rep.oracle_invariants.S) << ", "
        << fmt(rep.oracle_invariants.P) << ")\n";
    out << "invariant deviation = " << fmt(rep.invariant_deviation) << '\n';

    std::optional<EigenFrequencies> oracle_freqs;
    try {
      oracle_freqs = eigenfrequencies(rep.oracle_invariants);
      out << "oracle omega_tilde = (" << fmt(oracle_freqs->omega_tilde_1) << ", "
          << fmt(oracle_freqs->omega_tilde_2) << ")\n";
    } catch (const UnstableModes&) {
      out << "oracle omega_tilde: unstable\n";
    }

    nlohmann::json levels = nlohmann::json::array();
    if (rep.fock_used) {
      out << "truncated Fock, N_max = " << rep.nmax
          << (rep.converged ? " (converged)" : " (NOT converged)") << '\n';
      for (std::size_t i = 0; i < rep.oracle.size(); ++i) {
        const auto& l = rep.analytic[i];
        out << "  (" << l.n1 << ", " << l.n2 << ")  analytic " << fmt(l.E) << "  fock "
            << fmt(rep.oracle[i]) << "  rel " << fmt(rep.rel_dev[i]) << '\n';
        levels.push_back({{"n1", l.n1}, {"n2", l.n2}, {"analytic", l.E},
                          {"oracle", rep.oracle[i]}, {"abs_dev", rep.abs_dev[i]},
                          {"rel_dev", rep.rel_dev[i]}});
      }
      out << "max relative deviation = " << fmt(rep.max_rel_dev) << " (tol " << fmt(rep.tol)
          << ")\n";
    } else {
      out << "truncated Fock skipped: " << rep.fock_skipped << '\n';
    }

    nlohmann::json report = {
        {"command", "oracle"},
        {"scenario", detail::scenario_json(opts.scenario)},
        {"paper_convention", opts.paper_convention},
        {"form", detail::form_json(a.form)},
        {"analytic", {{"omega_tilde_1", a.frequencies.omega_tilde_1},
                      {"omega_tilde_2", a.frequencies.omega_tilde_2},
                      {"S", rep.analytic_invariants.S},
                      {"P", rep.analytic_invariants.P}}},
        {"dynamical_matrix", {{"S", rep.oracle_invariants.S}, {"P", rep.oracle_invariants.P}}},
        {"invariant_deviation", rep.invariant_deviation},
        {"fock_used", rep.fock_used},
        {"fock_skipped", rep.fock_skipped},
        {"nmax", rep.nmax},
        {"converged", rep.converged},
        {"max_rel_dev", rep.max_rel_dev},
        {"tol", rep.tol},
        {"levels", levels},
        {"agrees", rep.agrees()}};
    if (oracle_freqs) {
      report["oracle_frequencies"] = {{"omega_tilde_1", oracle_freqs->omega_tilde_1},
                                      {"omega_tilde_2", oracle_freqs->omega_tilde_2}};
    }
    detail::write_report(opts.report, report);

    if (!rep.agrees()) {
      out << "MISMATCH: analytic (" << fmt(a.frequencies.omega_tilde_1) << ", "
          << fmt(a.frequencies.omega_tilde_2) << ") vs oracle ";
      if (oracle_freqs) {
        out << "(" << fmt(oracle_freqs->omega_tilde_1) << ", "
            << fmt(oracle_freqs->omega_tilde_2) << ")";
      } else {
        out << "(unstable)";
      }
      out << '\n';
      return int{kExitOracleDisagreement};
    }
    out << "AGREE\n";
    return int{kExitOk};
  });
}

}  // namespace nclandau
