#pragma once

#include <array>
#include <random>
#include <utility>
#include <vector>

#include "nclandau/hamiltonian.hpp"

namespace nclandau::testing {

/// Trap settings used across the figure grids: pure Landau, isotropic,
/// anisotropic.
inline constexpr std::array<std::pair<double, double>, 3> kPotentials = {
    {{0.0, 0.0}, {1.0, 1.0}, {1.5, 1.0}}};

/// theta = 0, 0.1, ..., 0.9 at hbar = m = omega_c = 1.
inline std::vector<PhysicalSystem> figure_grid() {
  std::vector<PhysicalSystem> out;
  for (const auto& [w1, w2] : kPotentials) {
    for (int i = 0; i <= 9; ++i) {
      SystemInputs in;
      in.omega1 = w1;
      in.omega2 = w2;
      in.theta = 0.1 * i;
      out.emplace_back(in);
    }
  }
  return out;
}

inline PhysicalSystem make_system(double w1, double w2, double theta, double wc = 1.0,
                                  double hbar = 1.0, double m = 1.0) {
  SystemInputs in;
  in.hbar = hbar;
  in.m = m;
  in.omega1 = w1;
  in.omega2 = w2;
  in.omega_c = wc;
  in.theta = theta;
  return PhysicalSystem(in);
}

/// Random valid quadratic form with couplings of either sign.
inline QuadraticForm random_form(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(0.2, 3.0);
  std::uniform_real_distribution<double> sq(0.0, 4.0);
  std::uniform_real_distribution<double> cpl(-2.0, 2.0);
  return QuadraticForm(pos(rng), pos(rng), sq(rng), sq(rng), cpl(rng), cpl(rng));
}

}  // namespace nclandau::testing
