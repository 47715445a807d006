#pragma once

// Independent ground truth for the spectra module.
//
//  * Classical route: the linearized flow dz/dt = A z of the quadratic form.
//    Its characteristic polynomial is lambda^4 + S lambda^2 + P, so
//    S = -tr(A^2)/2 and P = det(A) without any eigensolver.
//  * Quantum route: the form written in the ladder operators of the two bare
//    oscillators and diagonalized in a truncated |n1, n2> basis. Matrix
//    elements come straight from (M_i, Omega_i, l_i), never from the printed
//    ladder coefficients c, d.

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "nclandau/error.hpp"
#include "nclandau/hamiltonian.hpp"
#include "nclandau/spectra.hpp"

namespace nclandau {

inline constexpr double kBiquadraticTol = 1e-12;
inline constexpr double kInvariantTol = 1e-12;

class DynamicalMatrix {
 public:
  explicit DynamicalMatrix(const Mat4& A) : A_(A) {
    if (!A_.allFinite()) throw Error(ErrorKind::InvalidArgument, "dynamical matrix must be finite");
  }
  const Mat4& matrix() const noexcept { return A_; }

 private:
  Mat4 A_;
};

/// Hamilton's equations over z = (x, y, p_x, p_y).
inline DynamicalMatrix dynamical_matrix(const QuadraticForm& qf) {
  Mat4 A;
  // clang-format off
  A <<  0.0,      qf.l2(),  qf.a(),   0.0,
       -qf.l1(),  0.0,      0.0,      qf.b(),
       -qf.k1(),  0.0,      0.0,      qf.l1(),
        0.0,     -qf.k2(), -qf.l2(),  0.0;
  // clang-format on
  return DynamicalMatrix(A);
}

/// Characteristic-polynomial invariants. Rejects matrices whose cubic or
/// linear coefficient does not vanish.
inline ModeInvariants oracle_invariants(const DynamicalMatrix& dm, double tol = kBiquadraticTol) {
  const Mat4& A = dm.matrix();
  const Mat4 A2 = A * A;
  const double p1 = A.trace();
  const double p2 = A2.trace();
  const double p3 = (A2 * A).trace();
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  // Newton identities: e1 = p1, e2 = (e1 p1 - p2)/2, e3 = (e2 p1 - e1 p2 + p3)/3.
  const double e1 = p1;
  const double e2 = 0.5 * (e1 * p1 - p2);
  const double e3 = (e2 * p1 - e1 * p2 + p3) / 3.0;
  if (std::abs(e1) > tol * scale || std::abs(e3) > tol * scale * scale * scale) {
    std::ostringstream msg;
    msg << "odd characteristic coefficients tr(A) = " << e1 << ", e3 = " << e3;
    throw Error(ErrorKind::NonBiquadratic, msg.str());
  }
  return {-0.5 * p2, A.determinant(), Convention::Dynamical};
}

/// Two-mode Hamiltonian over |n1, n2>, 0 <= n_i < nmax, stored at
/// n1 * nmax + n2.
class FockMatrix {
 public:
  FockMatrix(Eigen::MatrixXcd H, int nmax) : H_(std::move(H)), nmax_(nmax) {}

  const Eigen::MatrixXcd& matrix() const noexcept { return H_; }
  int nmax() const noexcept { return nmax_; }
  Eigen::Index dimension() const noexcept { return H_.rows(); }
  Eigen::Index index(int n1, int n2) const noexcept {
    return static_cast<Eigen::Index>(n1) * nmax_ + n2;
  }

 private:
  Eigen::MatrixXcd H_;
  int nmax_;
};

/// x = sqrt(hbar/2M1Omega1)(a + a^+), p_x = -i sqrt(hbar M1 Omega1/2)(a - a^+),
/// likewise y, p_y with b. The couplings become
///   -l1 x p_y + l2 y p_x = i(g1 - g2) a b + i(g2 - g1) a^+ b^+
///                          + i(g1 + g2) a^+ b - i(g1 + g2) a b^+
/// with g1 = l1 sqrt(hbar/2M1Omega1) sqrt(hbar M2 Omega2/2) and g2 likewise.
inline FockMatrix build_fock_matrix(const QuadraticForm& qf, double hbar, int nmax) {
  if (nmax < 2) throw Error(ErrorKind::InvalidArgument, "N_max must be >= 2");
  if (!(hbar > 0.0)) throw Error(ErrorKind::InvalidArgument, "hbar must be > 0");
  const double W1 = qf.Omega1();
  const double W2 = qf.Omega2();
  const double mw1 = qf.M1() * W1;
  const double mw2 = qf.M2() * W2;
  if (!(mw1 > 0.0) || !(mw2 > 0.0)) {
    throw Error(ErrorKind::ZeroModeUnsupported,
                "ladder substitution needs M1 Omega1 > 0 and M2 Omega2 > 0");
  }
  const double g1 = qf.l1() * std::sqrt(hbar / (2.0 * mw1)) * std::sqrt(hbar * mw2 / 2.0);
  const double g2 = qf.l2() * std::sqrt(hbar / (2.0 * mw2)) * std::sqrt(hbar * mw1 / 2.0);
  const std::complex<double> i1(0.0, 1.0);
  const std::complex<double> annihilate_pair = i1 * (g1 - g2);  // a b
  const std::complex<double> lower_exchange = -i1 * (g1 + g2);  // a b^+

  const Eigen::Index dim = static_cast<Eigen::Index>(nmax) * nmax;
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
  auto at = [nmax](int n1, int n2) { return static_cast<Eigen::Index>(n1) * nmax + n2; };

  for (int n1 = 0; n1 < nmax; ++n1) {
    for (int n2 = 0; n2 < nmax; ++n2) {
      const Eigen::Index k = at(n1, n2);
      H(k, k) = hbar * W1 * (n1 + 0.5) + hbar * W2 * (n2 + 0.5);
      // <n1, n2| a b |n1+1, n2+1>
      if (n1 + 1 < nmax && n2 + 1 < nmax) {
        H(k, at(n1 + 1, n2 + 1)) = annihilate_pair * std::sqrt(double(n1 + 1) * double(n2 + 1));
      }
      // <n1, n2| a b^+ |n1+1, n2-1>
      if (n1 + 1 < nmax && n2 >= 1) {
        H(k, at(n1 + 1, n2 - 1)) = lower_exchange * std::sqrt(double(n1 + 1) * double(n2));
      }
    }
  }
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = r + 1; c < dim; ++c) H(c, r) = std::conj(H(r, c));
  }
  return FockMatrix(std::move(H), nmax);
}

/// All eigenvalues of a dense Hermitian matrix, ascending.
inline std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& H) {
  if (H.rows() != H.cols()) throw Error(ErrorKind::InvalidArgument, "matrix must be square");
  if (H.size() == 0) return {};
  const double norm = H.cwiseAbs().maxCoeff();
  if ((H - H.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, norm)) {
    throw Error(ErrorKind::InvalidArgument, "matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver hit its iteration cap");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

/// Basis indices with n1 + n2 of the given parity.
inline std::vector<Eigen::Index> parity_sector(const FockMatrix& F, int parity) {
  std::vector<Eigen::Index> idx;
  for (int n1 = 0; n1 < F.nmax(); ++n1) {
    for (int n2 = 0; n2 < F.nmax(); ++n2) {
      if ((n1 + n2) % 2 == parity) idx.push_back(F.index(n1, n2));
    }
  }
  return idx;
}

/// Largest |H_jk| between states whose n1 + n2 differ by anything other
/// than 0 or 2. Zero for every matrix from build_fock_matrix.
inline double max_forbidden_coupling(const FockMatrix& F) {
  const int n = F.nmax();
  double worst = 0.0;
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2)
      for (int b1 = 0; b1 < n; ++b1)
        for (int b2 = 0; b2 < n; ++b2) {
          const int jump = std::abs((a1 + a2) - (b1 + b2));
          if (jump == 0 || jump == 2) continue;
          worst = std::max(worst, std::abs(F.matrix()(F.index(a1, a2), F.index(b1, b2))));
        }
  return worst;
}

/// Spectrum of F, solved sector by sector (the coupling conserves the parity
/// of n1 + n2), ascending.
inline std::vector<double> fock_spectrum(const FockMatrix& F) {
  std::vector<double> all;
  all.reserve(static_cast<std::size_t>(F.dimension()));
  for (int parity = 0; parity < 2; ++parity) {
    const auto idx = parity_sector(F, parity);
    const auto n = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXcd block(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) block(r, c) = F.matrix()(idx[r], idx[c]);
    const auto ev = hermitian_eigenvalues(block);
    all.insert(all.end(), ev.begin(), ev.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

struct CompareOptions {
  double tol = 1e-6;
  std::vector<int> schedule = {8, 16, 32, 64};
  int levels = 6;
  double invariant_tol = kInvariantTol;
};

struct OracleReport {
  std::vector<EnergyLevel> analytic;  // lowest analytic levels with labels
  std::vector<double> oracle;         // matching truncated-Fock eigenvalues
  std::vector<double> abs_dev;
  std::vector<double> rel_dev;
  double max_rel_dev = 0.0;
  int nmax = 0;  // truncation of the reported oracle values
  bool fock_used = false;
  bool converged = false;
  std::string fock_skipped;  // reason when fock_used is false

  ModeInvariants analytic_invariants;
  ModeInvariants oracle_invariants;
  double invariant_deviation = 0.0;

  double tol = 0.0;
  double invariant_tol = 0.0;

  bool agrees() const {
    const bool levels_ok = !fock_used || (converged && max_rel_dev <= tol);
    return levels_ok && invariant_deviation <= invariant_tol;
  }
};

/// Checks analytic frequencies against both oracles. The Fock route runs
/// whenever Omega~_2 > 0 and the form admits the ladder substitution;
/// otherwise only the dynamical-matrix invariants are compared.
inline OracleReport compare(const EigenFrequencies& analytic, const QuadraticForm& qf,
                            double hbar, const CompareOptions& opts = {}) {
  OracleReport rep;
  rep.tol = opts.tol;
  rep.invariant_tol = opts.invariant_tol;
  rep.analytic_invariants = vieta(analytic);
  rep.oracle_invariants = oracle_invariants(dynamical_matrix(qf));
  {
    const double S = rep.oracle_invariants.S;
    const double P = rep.oracle_invariants.P;
    rep.invariant_deviation =
        std::max(std::abs(rep.analytic_invariants.S - S) / std::max(1.0, std::abs(S)),
                 std::abs(rep.analytic_invariants.P - P) / std::max(1.0, std::abs(P)));
  }

  if (!(analytic.omega_tilde_2 > 0.0)) {
    rep.fock_skipped = "Omega~_2 = 0 (zero mode): no discrete level ladder";
    rep.converged = true;
    return rep;
  }
  if (!(qf.Omega1_sq() > 0.0) || !(qf.Omega2_sq() > 0.0)) {
    rep.fock_skipped = "Omega_1 or Omega_2 = 0: ladder substitution undefined";
    rep.converged = true;
    return rep;
  }
  if (opts.levels < 1 || opts.schedule.empty()) {
    throw Error(ErrorKind::InvalidArgument, "compare needs levels >= 1 and a truncation schedule");
  }

  rep.fock_used = true;
  rep.analytic = enumerate_levels(analytic, hbar, opts.levels);
  const auto k = static_cast<std::size_t>(opts.levels);
  std::vector<double> previous;
  for (int nmax : opts.schedule) {
    if (static_cast<std::size_t>(nmax) * static_cast<std::size_t>(nmax) < k) continue;
    auto spectrum = fock_spectrum(build_fock_matrix(qf, hbar, nmax));
    spectrum.resize(k);
    rep.nmax = nmax;
    rep.oracle = spectrum;
    if (!previous.empty()) {
      double change = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        change = std::max(change, std::abs(spectrum[i] - previous[i]) /
                                      std::max(std::abs(previous[i]), 1e-300));
      }
      if (change < opts.tol / 10.0) {
        rep.converged = true;
        break;
      }
    }
    previous = std::move(spectrum);
  }

  rep.abs_dev.resize(k);
  rep.rel_dev.resize(k);
  rep.max_rel_dev = 0.0;
  for (std::size_t i = 0; i < k && i < rep.oracle.size(); ++i) {
    rep.abs_dev[i] = std::abs(rep.oracle[i] - rep.analytic[i].E);
    rep.rel_dev[i] = rep.abs_dev[i] / std::abs(rep.analytic[i].E);
    rep.max_rel_dev = std::max(rep.max_rel_dev, rep.rel_dev[i]);
  }
  return rep;
}

}  // namespace nclandau
