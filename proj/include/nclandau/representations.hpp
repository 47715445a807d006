#pragma once

// Two-parameter (r, s) family of phase-space representations of the
// deformed algebra
//
//   [X, Pi_x] = [Y, Pi_y] = i hbar,   [X, Y] = i theta,   [Pi_x, Pi_y] = i hbar B
//
// as linear maps over the canonical quadruple z = (x, y, p_x, p_y). Every
// Hamiltonian in scope is quadratic, so a representation is a plain 4x4 real
// matrix and all operator algebra reduces to the symplectic bilinear form.

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "nclandau/error.hpp"

namespace nclandau {

using Mat4 = Eigen::Matrix4d;
using Row4 = Eigen::RowVector4d;

inline constexpr double kDegeneracyTol = 1e-12;
inline constexpr double kCommutatorTol = 1e-12;

/// Rows of a RepMatrix.
enum class NcOperator : int { X = 0, Y = 1, PiX = 2, PiY = 3 };
/// Columns of a RepMatrix.
enum class Canonical : int { x = 0, y = 1, px = 2, py = 3 };

/// Physical inputs of the deformed algebra. The magnetic field is stored as
/// B with charge and light speed set to one; omega_c = B / m.
class NCParameters {
 public:
  NCParameters(double hbar, double theta, double B, double m)
      : hbar_(hbar), theta_(theta), B_(B), m_(m) {
    if (!(std::isfinite(hbar) && hbar > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "hbar must be finite and > 0");
    }
    if (!(std::isfinite(m) && m > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "m must be finite and > 0");
    }
    if (!(std::isfinite(theta) && theta >= 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "theta must be finite and >= 0");
    }
    if (!std::isfinite(B) || !std::isfinite(B / m)) {
      throw Error(ErrorKind::InvalidArgument, "B and omega_c = B/m must be finite");
    }
  }

  double hbar() const noexcept { return hbar_; }
  double theta() const noexcept { return theta_; }
  double B() const noexcept { return B_; }
  double m() const noexcept { return m_; }
  double omega_c() const noexcept { return B_ / m_; }

  /// |hbar - B theta| within `tol` relative to max(hbar, |B theta|).
  bool is_degenerate(double tol = kDegeneracyTol) const noexcept {
    const double bt = B_ * theta_;
    return std::abs(hbar_ - bt) <= tol * std::max(hbar_, std::abs(bt));
  }

 private:
  double hbar_;
  double theta_;
  double B_;
  double m_;
};

/// Free function form of NCParameters::is_degenerate.
inline bool detect_degenerate(const NCParameters& nc, double tol = kDegeneracyTol) {
  return nc.is_degenerate(tol);
}

struct GaugePair {
  double r = 1.0;
  double s = 0.0;

  friend bool operator==(const GaugePair&, const GaugePair&) = default;
};

/// The Pi_x coefficients have a pole at r = hbar / (B theta).
inline bool is_admissible(const NCParameters& nc, const GaugePair& g,
                          double tol = kDegeneracyTol) {
  if (!std::isfinite(g.r) || !std::isfinite(g.s)) return false;
  const double btr = nc.B() * nc.theta() * g.r;
  if (nc.B() * nc.theta() == 0.0) return true;
  return std::abs(nc.hbar() - btr) > tol * std::max(nc.hbar(), std::abs(btr));
}

inline GaugePair landau_gauge() { return {1.0, 0.0}; }

/// r = hbar / (hbar + sqrt(hbar (hbar - theta B))), s = 1/2. Undefined when
/// the radicand is negative.
inline GaugePair symmetric_gauge(const NCParameters& nc) {
  const double hbar = nc.hbar();
  const double radicand = hbar * (hbar - nc.theta() * nc.B());
  if (radicand < 0.0) {
    std::ostringstream msg;
    msg << "symmetric gauge requires hbar - theta B >= 0 (theta is bounded by hbar/(m omega_c)); got "
        << "hbar - theta B = " << hbar - nc.theta() * nc.B();
    throw Error(ErrorKind::OutOfDomain, msg.str());
  }
  return {hbar / (hbar + std::sqrt(radicand)), 0.5};
}

/// Linear map from (x, y, p_x, p_y) to (X, Y, Pi_x, Pi_y); row i holds the
/// coefficients of operator i.
class RepMatrix {
 public:
  explicit RepMatrix(const Mat4& rows) : rows_(rows) {
    if (!rows_.allFinite()) {
      throw Error(ErrorKind::InvalidArgument, "representation entries must be finite");
    }
  }

  static RepMatrix identity() { return RepMatrix(Mat4::Identity()); }

  const Mat4& matrix() const noexcept { return rows_; }
  Row4 row(NcOperator op) const { return rows_.row(static_cast<int>(op)); }
  double coefficient(NcOperator op, Canonical c) const {
    return rows_(static_cast<int>(op), static_cast<int>(c));
  }
  /// max |R_ij|, the scale of any bilinear form built from this map.
  double scale() const { return rows_.cwiseAbs().maxCoeff(); }

 private:
  Mat4 rows_;
};

/// [O_a, O_b] = i hbar C_ab. Antisymmetric by construction: only the upper
/// triangle is evaluated and then mirrored.
class CommutatorMatrix {
 public:
  explicit CommutatorMatrix(const Mat4& upper) : entries_(Mat4::Zero()) {
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        entries_(a, b) = upper(a, b);
        entries_(b, a) = -upper(a, b);
      }
    }
  }

  const Mat4& matrix() const noexcept { return entries_; }
  double operator()(int a, int b) const { return entries_(a, b); }
  double operator()(NcOperator a, NcOperator b) const {
    return entries_(static_cast<int>(a), static_cast<int>(b));
  }

  double max_abs_deviation(const CommutatorMatrix& other) const {
    return (entries_ - other.entries_).cwiseAbs().maxCoeff();
  }

 private:
  Mat4 entries_;
};

/// The commutators every valid representation must reproduce.
inline CommutatorMatrix target_commutators(const NCParameters& nc) {
  Mat4 upper = Mat4::Zero();
  upper(0, 1) = nc.theta() / nc.hbar();
  upper(2, 3) = nc.B();
  upper(0, 2) = 1.0;
  upper(1, 3) = 1.0;
  return CommutatorMatrix(upper);
}

/// Canonical symplectic matrix for (x, y, p_x, p_y).
inline Mat4 canonical_symplectic() {
  Mat4 J = Mat4::Zero();
  J(0, 2) = J(1, 3) = 1.0;
  J(2, 0) = J(3, 1) = -1.0;
  return J;
}

/// R J R^T, evaluated as the symplectic form of row pairs.
inline CommutatorMatrix commutator_table(const RepMatrix& rep) {
  const Mat4& R = rep.matrix();
  Mat4 upper = Mat4::Zero();
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      upper(a, b) = R(a, 0) * R(b, 2) - R(a, 2) * R(b, 0) +
                    R(a, 1) * R(b, 3) - R(a, 3) * R(b, 1);
    }
  }
  return CommutatorMatrix(upper);
}

/// max |C - T| divided by max(1, max|R_ij|)^2.
inline double commutator_deviation(const RepMatrix& rep, const NCParameters& nc) {
  const double scale = std::max(1.0, rep.scale());
  return commutator_table(rep).max_abs_deviation(target_commutators(nc)) / (scale * scale);
}

inline bool satisfies_algebra(const RepMatrix& rep, const NCParameters& nc,
                              double tol = kCommutatorTol) {
  return commutator_deviation(rep, nc) <= tol;
}

/// The (r, s) representation:
///
///   X    = x - s (theta/hbar) p_y
///   Y    = y + (1 - s)(theta/hbar) p_x
///   Pi_x = B hbar (1 - r)/(hbar - B theta r) y
///          + [B theta (r + s - r s) - hbar]/(B theta r - hbar) p_x
///   Pi_y = -r B x + [1 + r (s - 1) B theta / hbar] p_y
inline RepMatrix make_representation(const NCParameters& nc, const GaugePair& g) {
  if (nc.is_degenerate()) {
    throw Error(ErrorKind::DegenerateRepresentation,
                "hbar - B theta = 0: the representation collapses onto a line");
  }
  if (!is_admissible(nc, g)) {
    std::ostringstream msg;
    msg << "r = " << g.r << " hits the pole r = hbar/(B theta)";
    throw Error(ErrorKind::InadmissibleGauge, msg.str());
  }
  const double hbar = nc.hbar();
  const double theta = nc.theta();
  const double B = nc.B();
  const double r = g.r;
  const double s = g.s;
  const double bt = B * theta;

  Mat4 R = Mat4::Zero();
  R(0, 0) = 1.0;
  R(0, 3) = -s * theta / hbar;

  R(1, 1) = 1.0;
  R(1, 2) = (1.0 - s) * theta / hbar;

  R(2, 1) = B * hbar * (1.0 - r) / (hbar - bt * r);
  R(2, 2) = (bt * (r + s - r * s) - hbar) / (bt * r - hbar);

  R(3, 0) = -r * B;
  R(3, 3) = 1.0 + r * (s - 1.0) * bt / hbar;
  return RepMatrix(R);
}

}  // namespace nclandau
