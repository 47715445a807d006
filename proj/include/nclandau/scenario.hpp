#pragma once

// Scenario = physical inputs + prescription selector + optional gauge pair.
// This is what the command-line front end and its JSON config files describe.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nclandau/error.hpp"
#include "nclandau/hamiltonian.hpp"
#include "nclandau/representations.hpp"
#include "nclandau/spectra.hpp"

namespace nclandau {

/// Bad flags, bad config files, impossible combinations. Exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PrescriptionKind { Group, Nmp };
enum class GaugeKind { Landau, Symmetric, Rs };

constexpr std::string_view to_string(PrescriptionKind p) {
  return p == PrescriptionKind::Group ? "group" : "nmp";
}

constexpr std::string_view to_string(GaugeKind g) {
  switch (g) {
    case GaugeKind::Landau: return "landau";
    case GaugeKind::Symmetric: return "symmetric";
    case GaugeKind::Rs: return "rs";
  }
  return "?";
}

inline PrescriptionKind parse_prescription(std::string_view s) {
  if (s == "group") return PrescriptionKind::Group;
  if (s == "nmp") return PrescriptionKind::Nmp;
  throw UsageError("unknown prescription '" + std::string(s) + "' (expected group|nmp)");
}

inline GaugeKind parse_gauge(std::string_view s) {
  if (s == "landau") return GaugeKind::Landau;
  if (s == "symmetric") return GaugeKind::Symmetric;
  if (s == "rs") return GaugeKind::Rs;
  throw UsageError("unknown gauge '" + std::string(s) + "' (expected landau|symmetric|rs)");
}

struct Scenario {
  SystemInputs inputs;
  PrescriptionKind prescription = PrescriptionKind::Group;
  GaugeKind gauge = GaugeKind::Landau;
  std::optional<GaugePair> rs;

  PhysicalSystem system() const { return PhysicalSystem(inputs); }
};

/// Applies a JSON config object on top of `base`. Accepted keys:
/// hbar, m, omega1, omega2, omega_c, theta, prescription, r, s. Giving r and
/// s selects the rs gauge.
inline Scenario apply_config(const nlohmann::json& cfg, Scenario base) {
  if (!cfg.is_object()) throw UsageError("config must be a JSON object");
  auto number = [](const nlohmann::json& v, const std::string& key) {
    if (!v.is_number()) throw UsageError("config key '" + key + "' must be a number");
    return v.get<double>();
  };
  std::optional<double> r;
  std::optional<double> s;
  for (const auto& [key, value] : cfg.items()) {
    if (key == "hbar") base.inputs.hbar = number(value, key);
    else if (key == "m") base.inputs.m = number(value, key);
    else if (key == "omega1") base.inputs.omega1 = number(value, key);
    else if (key == "omega2") base.inputs.omega2 = number(value, key);
    else if (key == "omega_c") base.inputs.omega_c = number(value, key);
    else if (key == "theta") base.inputs.theta = number(value, key);
    else if (key == "r") r = number(value, key);
    else if (key == "s") s = number(value, key);
    else if (key == "prescription") {
      if (!value.is_string()) throw UsageError("config key 'prescription' must be a string");
      base.prescription = parse_prescription(value.get<std::string>());
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
  if (r.has_value() != s.has_value()) throw UsageError("config needs both r and s or neither");
  if (r) {
    base.rs = GaugePair{*r, *s};
    base.gauge = GaugeKind::Rs;
  }
  return base;
}

inline Scenario parse_config(std::string_view text, Scenario base = {}) {
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
  return apply_config(cfg, base);
}

/// The library prescription for a scenario. The symmetric gauge pair is
/// resolved against the scenario's parameters.
inline Prescription resolve_prescription(const Scenario& sc) {
  if (sc.prescription == PrescriptionKind::Nmp) {
    switch (sc.gauge) {
      case GaugeKind::Landau: return NmpLandau{};
      case GaugeKind::Symmetric: return NmpSymmetric{};
      case GaugeKind::Rs:
        throw UsageError(
            "the naive minimal prescription has no (r, s) family; use --gauge landau|symmetric");
    }
  }
  switch (sc.gauge) {
    case GaugeKind::Landau: return GroupTheoretic{landau_gauge()};
    case GaugeKind::Symmetric: return GroupTheoretic{symmetric_gauge(sc.system().nc())};
    case GaugeKind::Rs:
      if (!sc.rs) throw UsageError("--gauge rs needs --r and --s");
      return GroupTheoretic{*sc.rs};
  }
  throw UsageError("unhandled gauge");
}

/// Quadratic form for a scenario: closed-form tables for the named gauges,
/// the representation matrix for an explicit (r, s).
inline QuadraticForm scenario_form(const Scenario& sc) {
  const PhysicalSystem sys = sc.system();
  if (sc.prescription == PrescriptionKind::Nmp) return nmp_params(sys, resolve_prescription(sc));
  switch (sc.gauge) {
    case GaugeKind::Landau: return landau_params(sys);
    case GaugeKind::Symmetric: return symmetric_params(sys);
    case GaugeKind::Rs: return quadratic_form(sys, resolve_prescription(sc));
  }
  throw UsageError("unhandled gauge");
}

struct Analysis {
  QuadraticForm form;
  ModeInvariants invariants;
  EigenFrequencies frequencies;
};

inline Analysis analyze(const Scenario& sc, Convention convention = Convention::Dynamical) {
  const QuadraticForm qf = scenario_form(sc);
  const ModeInvariants inv =
      convention == Convention::PaperPrinted ? paper_invariants(qf) : invariants(qf);
  return {qf, inv, eigenfrequencies(inv)};
}

}  // namespace nclandau
