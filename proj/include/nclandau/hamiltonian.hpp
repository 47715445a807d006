#pragma once

// Reduction of
//
//   H = (Pi_x^2 + Pi_y^2) / 2m + m (omega_1^2 X^2 + omega_2^2 Y^2) / 2
//
// to the six-parameter form over canonical operators
//
//   H = p_x^2/2M1 + p_y^2/2M2 + M1 Omega1^2 x^2/2 + M2 Omega2^2 y^2/2
//       - l1 x p_y + l2 y p_x
//
// either through a RepMatrix (any gauge) or through the closed-form tables
// for the symmetric gauge, the Landau gauge and the naive minimal
// prescription (NMP).

#include <algorithm>
#include <cmath>
#include <sstream>
#include <variant>

#include "nclandau/error.hpp"
#include "nclandau/representations.hpp"

namespace nclandau {

inline constexpr double kCrossTermTol = 1e-12;

/// Plain inputs for PhysicalSystem; defaults are the figure units
/// hbar = m = omega_c = 1 with no trap.
struct SystemInputs {
  double hbar = 1.0;
  double m = 1.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  double omega_c = 1.0;
  double theta = 0.0;
};

/// Validated physical system. B is derived as m * omega_c.
class PhysicalSystem {
 public:
  explicit PhysicalSystem(const SystemInputs& in) : in_(in) {
    auto require = [](bool ok, const char* what) {
      if (!ok) throw Error(ErrorKind::InvalidArgument, what);
    };
    require(std::isfinite(in.hbar) && in.hbar > 0.0, "hbar must be finite and > 0");
    require(std::isfinite(in.m) && in.m > 0.0, "m must be finite and > 0");
    require(std::isfinite(in.omega1) && in.omega1 >= 0.0, "omega1 must be finite and >= 0");
    require(std::isfinite(in.omega2) && in.omega2 >= 0.0, "omega2 must be finite and >= 0");
    require(std::isfinite(in.omega_c), "omega_c must be finite");
    require(std::isfinite(in.theta) && in.theta >= 0.0, "theta must be finite and >= 0");
  }

  double hbar() const noexcept { return in_.hbar; }
  double m() const noexcept { return in_.m; }
  double omega1() const noexcept { return in_.omega1; }
  double omega2() const noexcept { return in_.omega2; }
  double omega_c() const noexcept { return in_.omega_c; }
  double theta() const noexcept { return in_.theta; }
  double B() const noexcept { return in_.m * in_.omega_c; }
  const SystemInputs& inputs() const noexcept { return in_; }

  NCParameters nc() const { return NCParameters(in_.hbar, in_.theta, B(), in_.m); }

  PhysicalSystem with_theta(double theta) const {
    SystemInputs in = in_;
    in.theta = theta;
    return PhysicalSystem(in);
  }

 private:
  SystemInputs in_;
};

/// Squared frequencies are stored so that exact zeros (pure Landau) survive.
class QuadraticForm {
 public:
  QuadraticForm(double M1, double M2, double Omega1_sq, double Omega2_sq, double l1, double l2)
      : M1_(M1), M2_(M2), Omega1_sq_(Omega1_sq), Omega2_sq_(Omega2_sq), l1_(l1), l2_(l2) {
    if (!(std::isfinite(M1) && M1 > 0.0) || !(std::isfinite(M2) && M2 > 0.0)) {
      std::ostringstream msg;
      msg << "effective masses must be finite and > 0, got M1 = " << M1 << ", M2 = " << M2;
      throw Error(ErrorKind::SingularMass, msg.str());
    }
    if (!(std::isfinite(Omega1_sq) && Omega1_sq >= 0.0) ||
        !(std::isfinite(Omega2_sq) && Omega2_sq >= 0.0)) {
      std::ostringstream msg;
      msg << "squared frequencies must be finite and >= 0, got " << Omega1_sq << ", " << Omega2_sq;
      throw Error(ErrorKind::NonCanonicalForm, msg.str());
    }
    if (!std::isfinite(l1) || !std::isfinite(l2)) {
      throw Error(ErrorKind::NonCanonicalForm, "cross couplings must be finite");
    }
  }

  double M1() const noexcept { return M1_; }
  double M2() const noexcept { return M2_; }
  double Omega1_sq() const noexcept { return Omega1_sq_; }
  double Omega2_sq() const noexcept { return Omega2_sq_; }
  double Omega1() const { return std::sqrt(Omega1_sq_); }
  double Omega2() const { return std::sqrt(Omega2_sq_); }
  double l1() const noexcept { return l1_; }
  double l2() const noexcept { return l2_; }

  double a() const noexcept { return 1.0 / M1_; }
  double b() const noexcept { return 1.0 / M2_; }
  double k1() const noexcept { return M1_ * Omega1_sq_; }
  double k2() const noexcept { return M2_ * Omega2_sq_; }

  /// Symmetric G with H = z^T G z over z = (x, y, p_x, p_y).
  Mat4 coefficient_matrix() const {
    Mat4 G = Mat4::Zero();
    G(0, 0) = 0.5 * k1();
    G(1, 1) = 0.5 * k2();
    G(2, 2) = 0.5 * a();
    G(3, 3) = 0.5 * b();
    G(0, 3) = G(3, 0) = -0.5 * l1_;
    G(1, 2) = G(2, 1) = 0.5 * l2_;
    return G;
  }

  /// Largest entrywise deviation relative to max(1, |entry|).
  double max_relative_deviation(const QuadraticForm& o) const {
    auto rel = [](double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); };
    return std::max({rel(M1_, o.M1_), rel(M2_, o.M2_), rel(Omega1_sq_, o.Omega1_sq_),
                     rel(Omega2_sq_, o.Omega2_sq_), rel(l1_, o.l1_), rel(l2_, o.l2_)});
  }

 private:
  double M1_;
  double M2_;
  double Omega1_sq_;
  double Omega2_sq_;
  double l1_;
  double l2_;
};

struct GroupTheoretic {
  GaugePair gauge;
};
struct NmpSymmetric {};
struct NmpLandau {};

/// NMP kinds carry no (r, s): they are defined by their vector potential.
using Prescription = std::variant<GroupTheoretic, NmpSymmetric, NmpLandau>;

inline bool is_nmp(const Prescription& p) { return !std::holds_alternative<GroupTheoretic>(p); }

/// Symmetric 4x4 matrix G of H = z^T G z for the representation `rep`.
inline Mat4 hamiltonian_coefficients(const PhysicalSystem& sys, const RepMatrix& rep) {
  const Mat4& R = rep.matrix();
  const Row4 X = R.row(0);
  const Row4 Y = R.row(1);
  const Row4 Px = R.row(2);
  const Row4 Py = R.row(3);
  const double m = sys.m();
  const double w1 = sys.omega1();
  const double w2 = sys.omega2();
  Mat4 G = (Px.transpose() * Px + Py.transpose() * Py) / (2.0 * m) +
           (0.5 * m) * (w1 * w1 * (X.transpose() * X) + w2 * w2 * (Y.transpose() * Y));
  return 0.5 * (G + G.transpose());
}

/// Reads (M1, M2, Omega1^2, Omega2^2, l1, l2) off the coefficient matrix.
/// The representation is expected to satisfy the deformed algebra; only the
/// structural shape of the resulting form is checked here.
inline QuadraticForm assemble(const PhysicalSystem& sys, const RepMatrix& rep) {
  const Mat4 G = hamiltonian_coefficients(sys, rep);
  const double norm = G.cwiseAbs().maxCoeff();
  const double forbidden = std::max({std::abs(G(0, 1)), std::abs(G(0, 2)),
                                     std::abs(G(1, 3)), std::abs(G(2, 3))});
  if (forbidden > kCrossTermTol * norm) {
    std::ostringstream msg;
    msg << "xy, x p_x, y p_y or p_x p_y term of size " << forbidden
        << " exceeds tolerance (|G| = " << norm << ")";
    throw Error(ErrorKind::NonCanonicalForm, msg.str());
  }
  if (!(G(2, 2) > 0.0) || !(G(3, 3) > 0.0)) {
    throw Error(ErrorKind::SingularMass, "p_x^2 or p_y^2 coefficient is not positive");
  }
  const double M1 = 1.0 / (2.0 * G(2, 2));
  const double M2 = 1.0 / (2.0 * G(3, 3));
  return QuadraticForm(M1, M2, 2.0 * G(0, 0) / M1, 2.0 * G(1, 1) / M2, -2.0 * G(0, 3),
                       2.0 * G(1, 2));
}

/// Closed-form parameters in the symmetric gauge. Valid for
/// theta < hbar / (m omega_c).
inline QuadraticForm symmetric_params(const PhysicalSystem& sys) {
  const double hbar = sys.hbar();
  const double m = sys.m();
  const double th = sys.theta();
  const double wc = sys.omega_c();
  const double w1 = sys.omega1();
  const double w2 = sys.omega2();

  const double radicand = hbar * (hbar - m * wc * th);
  if (radicand < 0.0) {
    std::ostringstream msg;
    msg << "symmetric gauge: theta = " << th << " exceeds the bound hbar/(m omega_c) = "
        << hbar / (m * wc);
    throw Error(ErrorKind::OutOfDomain, msg.str());
  }
  if (sys.nc().is_degenerate()) {
    throw Error(ErrorKind::DegenerateRepresentation,
                "symmetric gauge at theta = hbar/(m omega_c)");
  }
  const double root = std::sqrt(radicand);
  const double common = 0.5 - m * wc * th / (4.0 * hbar) + root / (2.0 * hbar);
  const double tt = m * m * th * th / (4.0 * hbar * hbar);
  const double M1 = m / (common + tt * w2 * w2);
  const double M2 = m / (common + tt * w1 * w1);
  const double shifted = wc * wc * hbar * hbar / ((hbar + root) * (hbar + root));
  const double O1 = (m / M1) * (w1 * w1 + shifted);
  const double O2 = (m / M2) * (w2 * w2 + shifted);
  const double l1 = wc / 2.0 + m * w1 * w1 * th / (2.0 * hbar);
  const double l2 = wc / 2.0 + m * w2 * w2 * th / (2.0 * hbar);
  return QuadraticForm(M1, M2, O1, O2, l1, l2);
}

/// Closed-form parameters in the Landau gauge; valid on both sides of the
/// pole theta = hbar / (m omega_c).
inline QuadraticForm landau_params(const PhysicalSystem& sys) {
  const double hbar = sys.hbar();
  const double m = sys.m();
  const double th = sys.theta();
  const double wc = sys.omega_c();
  const double w1 = sys.omega1();
  const double w2 = sys.omega2();
  if (sys.nc().is_degenerate()) {
    throw Error(ErrorKind::DegenerateRepresentation,
                "Landau gauge: M2 has a pole at theta = hbar/(m omega_c)");
  }
  const double M1 = m / (1.0 + m * m * th * th * w2 * w2 / (hbar * hbar));
  const double shrink = (hbar - m * wc * th) / hbar;
  const double M2 = m / (shrink * shrink);
  const double O1 = (m / M1) * (w1 * w1 + wc * wc);
  const double O2 = (m / M2) * w2 * w2;
  const double l1 = wc - m * wc * wc * th / hbar;
  const double l2 = m * w2 * w2 * th / hbar;
  return QuadraticForm(M1, M2, O1, O2, l1, l2);
}

/// Primed NMP parameters: Bopp shift X = x - theta p_y/2hbar,
/// Y = y + theta p_x/2hbar, then Pi = p - A(X, Y) with
/// A = (-B Y/2, B X/2) (symmetric) or A = (-B Y, 0) (Landau).
inline QuadraticForm nmp_params(const PhysicalSystem& sys, const Prescription& which) {
  const double hbar = sys.hbar();
  const double m = sys.m();
  const double th = sys.theta();
  const double wc = sys.omega_c();
  const double w1 = sys.omega1();
  const double w2 = sys.omega2();
  const double tt = m * m * th * th / (4.0 * hbar * hbar);

  if (std::holds_alternative<NmpSymmetric>(which)) {
    const double quarter = wc * wc / 4.0;
    const double base = 1.0 + m * wc * th / (2.0 * hbar);
    const double M1 = m / (base + tt * (w2 * w2 + quarter));
    const double M2 = m / (base + tt * (w1 * w1 + quarter));
    const double O1 = (m / M1) * (w1 * w1 + quarter);
    const double O2 = (m / M2) * (w2 * w2 + quarter);
    const double drift = wc * (1.0 + m * wc * th / (4.0 * hbar));
    const double l1 = 0.5 * (drift + m * w1 * w1 * th / hbar);
    const double l2 = 0.5 * (drift + m * w2 * w2 * th / hbar);
    return QuadraticForm(M1, M2, O1, O2, l1, l2);
  }
  if (std::holds_alternative<NmpLandau>(which)) {
    const double M1 = m / (1.0 + m * wc * th / hbar + tt * (w2 * w2 + wc * wc));
    const double M2 = m / (1.0 + tt * w1 * w1);
    const double O1 = (m / M1) * w1 * w1;
    const double O2 = (m / M2) * (w2 * w2 + wc * wc);
    const double l1 = m * w1 * w1 * th / (2.0 * hbar);
    const double l2 = wc + m * wc * wc * th / (2.0 * hbar) + m * w2 * w2 * th / (2.0 * hbar);
    return QuadraticForm(M1, M2, O1, O2, l1, l2);
  }
  throw Error(ErrorKind::InvalidArgument,
              "nmp_params needs NmpSymmetric or NmpLandau; the group-theoretic family has its own maps");
}

/// Matrix form of the NMP substitution, for cross-checking nmp_params through
/// assemble. For theta != 0 these maps do not satisfy the deformed algebra.
inline RepMatrix nmp_representation(const PhysicalSystem& sys, const Prescription& which) {
  const double shift = sys.theta() / (2.0 * sys.hbar());
  const double B = sys.B();
  Mat4 R = Mat4::Zero();
  R.row(0) << 1.0, 0.0, 0.0, -shift;
  R.row(1) << 0.0, 1.0, shift, 0.0;
  const Row4 X = R.row(0);
  const Row4 Y = R.row(1);
  const Row4 px(0.0, 0.0, 1.0, 0.0);
  const Row4 py(0.0, 0.0, 0.0, 1.0);
  if (std::holds_alternative<NmpSymmetric>(which)) {
    R.row(2) = px + 0.5 * B * Y;
    R.row(3) = py - 0.5 * B * X;
  } else if (std::holds_alternative<NmpLandau>(which)) {
    R.row(2) = px + B * Y;
    R.row(3) = py;
  } else {
    throw Error(ErrorKind::InvalidArgument, "nmp_representation needs an NMP prescription");
  }
  return RepMatrix(R);
}

/// Quadratic form for any prescription. Group-theoretic gauges go through
/// the representation matrix.
inline QuadraticForm quadratic_form(const PhysicalSystem& sys, const Prescription& p) {
  if (const auto* g = std::get_if<GroupTheoretic>(&p)) {
    return assemble(sys, make_representation(sys.nc(), g->gauge));
  }
  return nmp_params(sys, p);
}

}  // namespace nclandau
