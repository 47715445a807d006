#pragma once

// theta sweeps over (gauge, prescription) pairs. Rows outside a
// prescription's domain keep their place in the grid with a status flag so
// that every curve shares the same theta axis.

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "nclandau/error.hpp"
#include "nclandau/scenario.hpp"
#include "nclandau/spectra.hpp"

namespace nclandau {

enum class RowStatus { Ok, OutOfDomain, Degenerate, Unstable };

constexpr std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Ok: return "ok";
    case RowStatus::OutOfDomain: return "out_of_domain";
    case RowStatus::Degenerate: return "degenerate";
    case RowStatus::Unstable: return "unstable";
  }
  return "?";
}

struct SweepValues {
  double omega_tilde_1;
  double omega_tilde_2;
  double S;
  double P;
  double E00;
};

struct SweepRecord {
  double theta = 0.0;
  GaugeKind gauge = GaugeKind::Landau;
  PrescriptionKind prescription = PrescriptionKind::Group;
  RowStatus status = RowStatus::Ok;
  std::optional<SweepValues> values;  // present iff status == Ok
};

struct SweepOptions {
  Scenario base;
  double from = 0.0;
  double to = 1.0;
  int steps = 64;
  std::vector<GaugeKind> gauges = {GaugeKind::Symmetric, GaugeKind::Landau};
  std::vector<PrescriptionKind> prescriptions = {PrescriptionKind::Group, PrescriptionKind::Nmp};
};

/// from + i (to - from)/(steps - 1), the last point pinned to `to`.
inline std::vector<double> theta_grid(double from, double to, int steps) {
  if (!(from < to)) throw UsageError("sweep needs from < to");
  if (steps < 2) throw UsageError("sweep needs steps >= 2");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double h = (to - from) / (steps - 1);
  for (int i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = from + i * h;
  grid.back() = to;
  return grid;
}

inline SweepRecord evaluate_row(Scenario sc, double theta, GaugeKind gauge,
                                PrescriptionKind prescription) {
  sc.inputs.theta = theta;
  sc.gauge = gauge;
  sc.prescription = prescription;
  SweepRecord row{theta, gauge, prescription, RowStatus::Ok, std::nullopt};
  try {
    const Analysis a = analyze(sc);
    const double E00 = energy(a.frequencies, sc.inputs.hbar, 0, 0).E;
    row.values = SweepValues{a.frequencies.omega_tilde_1, a.frequencies.omega_tilde_2,
                             a.invariants.S, a.invariants.P, E00};
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::OutOfDomain: row.status = RowStatus::OutOfDomain; break;
      case ErrorKind::DegenerateRepresentation:
      case ErrorKind::InadmissibleGauge: row.status = RowStatus::Degenerate; break;
      case ErrorKind::DynamicallyUnstable: row.status = RowStatus::Unstable; break;
      default: throw;
    }
  }
  return row;
}

/// One row per (theta, gauge, prescription), theta-major. NMP has no rs
/// member, so (rs, nmp) pairs are skipped.
inline std::vector<SweepRecord> run_sweep(const SweepOptions& opts) {
  if (opts.gauges.empty() || opts.prescriptions.empty()) {
    throw UsageError("sweep needs at least one gauge and one prescription");
  }
  for (GaugeKind g : opts.gauges) {
    if (g == GaugeKind::Rs && !opts.base.rs) throw UsageError("--gauge rs needs --r and --s");
  }
  bool any = false;
  for (GaugeKind g : opts.gauges)
    for (PrescriptionKind p : opts.prescriptions)
      any = any || !(g == GaugeKind::Rs && p == PrescriptionKind::Nmp);
  if (!any) throw UsageError("the naive minimal prescription has no (r, s) family");

  std::vector<SweepRecord> rows;
  for (double theta : theta_grid(opts.from, opts.to, opts.steps)) {
    for (GaugeKind g : opts.gauges) {
      for (PrescriptionKind p : opts.prescriptions) {
        if (g == GaugeKind::Rs && p == PrescriptionKind::Nmp) continue;
        rows.push_back(evaluate_row(opts.base, theta, g, p));
      }
    }
  }
  return rows;
}

inline constexpr std::string_view kCsvHeader =
    "theta,gauge,prescription,omega_tilde_1,omega_tilde_2,S,P,E00,status";

/// 17 significant digits (round-trips every double).
inline std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_csv(std::ostream& out, const std::vector<SweepRecord>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.theta) << ',' << to_string(r.gauge) << ','
        << to_string(r.prescription) << ',';
    if (r.values) {
      const auto& v = *r.values;
      out << format_number(v.omega_tilde_1) << ',' << format_number(v.omega_tilde_2) << ','
          << format_number(v.S) << ',' << format_number(v.P) << ',' << format_number(v.E00);
    } else {
      out << ",,,,";
    }
    out << ',' << to_string(r.status) << '\n';
  }
}

}  // namespace nclandau
