#pragma once

// Normal-mode frequencies and energy levels of a QuadraticForm.
//
// The squared eigenfrequencies are the roots of w^4 - S w^2 + P, with
//
//   S = a k1 + b k2 + 2 l1 l2
//   P = a b k1 k2 - b k1 l2^2 - a k2 l1^2 + l1^2 l2^2 = (b k1 - l1^2)(a k2 - l2^2)
//
// (a = 1/M1, b = 1/M2, k_i = M_i Omega_i^2). The printed ladder-operator
// invariants C1/C2 are kept behind `paper_invariants`; they agree with (S, P)
// only after halving the ladder coefficients c and d.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <tuple>
#include <vector>

#include "nclandau/error.hpp"
#include "nclandau/hamiltonian.hpp"

namespace nclandau {

enum class Convention { Dynamical, PaperPrinted };

struct ModeInvariants {
  double S = 0.0;
  double P = 0.0;
  Convention convention = Convention::Dynamical;
};

struct LadderCoefficients {
  double c = 0.0;
  double d = 0.0;
  bool swapped = false;  // l1 < 0 rule applied
};

struct EigenFrequencies {
  double omega_tilde_1 = 0.0;  // >= omega_tilde_2
  double omega_tilde_2 = 0.0;
};

struct EnergyLevel {
  int n1 = 0;
  int n2 = 0;
  double E = 0.0;
  std::size_t group = 0;  // index of the degenerate group in a listing
};

inline constexpr double kLevelTieTol = 1e-9;

namespace detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// x - y, or exactly zero when the difference is below the rounding error of
/// its two terms.
inline double rounded_difference(double x, double y) {
  const double diff = x - y;
  return std::abs(diff) <= 8.0 * kEps * (std::abs(x) + std::abs(y)) ? 0.0 : diff;
}

}  // namespace detail

inline ModeInvariants invariants(const QuadraticForm& qf) {
  const double a = qf.a();
  const double b = qf.b();
  const double k1 = qf.k1();
  const double k2 = qf.k2();
  const double l1 = qf.l1();
  const double l2 = qf.l2();
  const double S = a * k1 + b * k2 + 2.0 * l1 * l2;
  const double P = detail::rounded_difference(b * k1, l1 * l1) *
                   detail::rounded_difference(a * k2, l2 * l2);
  return {S, P, Convention::Dynamical};
}

/// Printed c, d. When l1 < 0 the pair is evaluated at |l1| and interchanged.
inline LadderCoefficients ladder_coefficients(const QuadraticForm& qf) {
  const double w1 = qf.M1() * qf.Omega1();
  const double w2 = qf.M2() * qf.Omega2();
  if (!(w1 > 0.0) || !(w2 > 0.0)) {
    throw Error(ErrorKind::ZeroModeUnsupported,
                "ladder coefficients need M1 Omega1 > 0 and M2 Omega2 > 0");
  }
  const double ratio = std::sqrt(w2 / w1);
  const double l1 = std::abs(qf.l1());
  const double c = l1 * ratio - qf.l2() / ratio;
  const double d = l1 * ratio + qf.l2() / ratio;
  if (qf.l1() < 0.0) return {d, c, true};
  return {c, d, false};
}

/// C1 = Omega1^2 + Omega2^2 - 2c^2 + 2d^2,
/// C2 = Omega1^2 Omega2^2 - 2 Omega1 Omega2 (c^2 + d^2) + (c^2 - d^2)^2,
/// with the hbar^2 / hbar^4 prefactors dropped so that the roots are
/// frequencies.
inline ModeInvariants printed_invariants(const LadderCoefficients& lc, double Omega1,
                                         double Omega2) {
  const double c2 = lc.c * lc.c;
  const double d2 = lc.d * lc.d;
  const double C1 = Omega1 * Omega1 + Omega2 * Omega2 - 2.0 * c2 + 2.0 * d2;
  const double C2 = Omega1 * Omega1 * Omega2 * Omega2 - 2.0 * Omega1 * Omega2 * (c2 + d2) +
                    (c2 - d2) * (c2 - d2);
  return {C1, C2, Convention::PaperPrinted};
}

inline ModeInvariants paper_invariants(const QuadraticForm& qf) {
  return printed_invariants(ladder_coefficients(qf), qf.Omega1(), qf.Omega2());
}

/// Omega~^2 = S/2 +- sqrt(S^2/4 - P), largest first. The smaller root is
/// taken as P / Omega~_1^2 to avoid cancellation.
inline EigenFrequencies eigenfrequencies(const ModeInvariants& inv) {
  const double S = inv.S;
  const double P = inv.P;
  auto unstable = [&](const char* why) {
    std::ostringstream msg;
    msg << why << " (S = " << S << ", P = " << P << ")";
    return UnstableModes(S, P, msg.str());
  };
  if (!std::isfinite(S) || !std::isfinite(P)) throw unstable("non-finite invariants");
  if (S < 0.0) throw unstable("S < 0");
  if (P < 0.0) throw unstable("P < 0");
  double disc = 0.25 * S * S - P;
  if (disc < 0.0) {
    if (-disc > 8.0 * detail::kEps * (0.25 * S * S + P)) throw unstable("S^2/4 < P");
    disc = 0.0;
  }
  const double w1sq = 0.5 * S + std::sqrt(disc);
  const double w2sq = w1sq > 0.0 ? P / w1sq : 0.0;
  return {std::sqrt(w1sq), std::sqrt(w2sq)};
}

/// (S, P) rebuilt from the frequencies.
inline ModeInvariants vieta(const EigenFrequencies& f) {
  const double a = f.omega_tilde_1 * f.omega_tilde_1;
  const double b = f.omega_tilde_2 * f.omega_tilde_2;
  return {a + b, a * b, Convention::Dynamical};
}

inline EnergyLevel energy(const EigenFrequencies& f, double hbar, int n1, int n2) {
  if (n1 < 0 || n2 < 0) {
    throw Error(ErrorKind::InvalidArgument, "quantum numbers must be >= 0");
  }
  const double E = hbar * f.omega_tilde_1 * (n1 + 0.5) + hbar * f.omega_tilde_2 * (n2 + 0.5);
  return {n1, n2, E, 0};
}

/// The `count` lowest levels, ascending in E. Levels within
/// kLevelTieTol * hbar * Omega~_1 of a group's first member share its
/// `group` index and are ordered by (n1, n2).
inline std::vector<EnergyLevel> enumerate_levels(const EigenFrequencies& f, double hbar,
                                                 int count) {
  if (count < 1) throw Error(ErrorKind::InvalidArgument, "level count must be >= 1");
  if (!(f.omega_tilde_2 > 0.0)) {
    throw Error(ErrorKind::ZeroModeUnsupported,
                "Omega~_2 = 0: every level is infinitely degenerate");
  }
  // Any level with n1 >= count or n2 >= count lies above `count` others.
  std::vector<EnergyLevel> all;
  all.reserve(static_cast<std::size_t>(count) * static_cast<std::size_t>(count));
  for (int n1 = 0; n1 < count; ++n1) {
    for (int n2 = 0; n2 < count; ++n2) all.push_back(energy(f, hbar, n1, n2));
  }
  std::sort(all.begin(), all.end(), [](const EnergyLevel& x, const EnergyLevel& y) {
    return std::tie(x.E, x.n1, x.n2) < std::tie(y.E, y.n1, y.n2);
  });

  const double tie = kLevelTieTol * hbar * f.omega_tilde_1;
  std::size_t group = 0;
  auto first = all.begin();
  while (first != all.end()) {
    auto last = std::find_if(first, all.end(),
                             [&](const EnergyLevel& l) { return l.E - first->E > tie; });
    std::sort(first, last, [](const EnergyLevel& x, const EnergyLevel& y) {
      return std::tie(x.n1, x.n2) < std::tie(y.n1, y.n2);
    });
    for (auto it = first; it != last; ++it) it->group = group;
    ++group;
    first = last;
  }
  all.resize(static_cast<std::size_t>(count));
  return all;
}

}  // namespace nclandau
