#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "nclandau/hamiltonian.hpp"
#include "support.hpp"

using namespace nclandau;
using nclandau::testing::figure_grid;
using nclandau::testing::make_system;

namespace {

void expect_form(const QuadraticForm& q, double M1, double M2, double O1, double O2, double l1,
                 double l2, double tol = 1e-12) {
  EXPECT_NEAR(q.M1(), M1, tol);
  EXPECT_NEAR(q.M2(), M2, tol);
  EXPECT_NEAR(q.Omega1_sq(), O1, tol);
  EXPECT_NEAR(q.Omega2_sq(), O2, tol);
  EXPECT_NEAR(q.l1(), l1, tol);
  EXPECT_NEAR(q.l2(), l2, tol);
}

std::vector<PhysicalSystem> varied_systems() {
  std::vector<PhysicalSystem> out = figure_grid();
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double hbar = 0.5 + u(rng);
    const double m = 0.5 + u(rng);
    const double wc = 0.2 + 1.5 * u(rng);
    const double theta = 0.95 * u(rng) * hbar / (m * wc);
    out.push_back(make_system(2.0 * u(rng), 2.0 * u(rng), theta, wc, hbar, m));
  }
  return out;
}

}  // namespace

TEST(Assemble, LandauGaugeCommutativePureLandau) {
  const PhysicalSystem sys = make_system(0, 0, 0);
  expect_form(assemble(sys, make_representation(sys.nc(), landau_gauge())), 1, 1, 1, 0, 1, 0);
}

TEST(Assemble, SymmetricGaugeEffectiveMass) {
  const PhysicalSystem sys = make_system(0, 1, 0.5);
  const QuadraticForm q = assemble(sys, make_representation(sys.nc(), symmetric_gauge(sys.nc())));
  // 1 / (1/2 - 1/8 + sqrt(0.5)/2 + 1/16)
  EXPECT_NEAR(q.M1(), 1.0 / 0.7910533905932738, 1e-12);
  EXPECT_NEAR(1.0 / q.M1(), 0.7910534, 1e-7);
  EXPECT_NEAR(q.M1(), 1.2641367, 1e-6);
  EXPECT_NEAR(symmetric_params(sys).M1(), q.M1(), 1e-12);
}

TEST(Assemble, RejectsForbiddenCrossTerms) {
  const PhysicalSystem sys = make_system(1, 1, 0.2);
  Mat4 R = make_representation(sys.nc(), landau_gauge()).matrix();
  R(0, 1) = 0.3;  // X picks up a y component: xy term
  try {
    assemble(sys, RepMatrix(R));
    FAIL() << "expected NonCanonicalForm";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonCanonicalForm);
  }
  Mat4 P = Mat4::Identity();
  P(2, 3) = 0.5;  // Pi_x contains p_y: p_x p_y term
  EXPECT_THROW(assemble(sys, RepMatrix(P)), Error);
}

TEST(Assemble, RejectsSingularMass) {
  const PhysicalSystem sys = make_system(1, 1, 0.0);
  Mat4 R = Mat4::Identity();
  R(2, 2) = 0.0;  // nothing carries p_x
  try {
    assemble(sys, RepMatrix(R));
    FAIL() << "expected SingularMass";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularMass);
  }
}

TEST(SymmetricParams, CommutativePureLandau) {
  expect_form(symmetric_params(make_system(0, 0, 0)), 1, 1, 0.25, 0.25, 0.5, 0.5);
}

TEST(SymmetricParams, Domain) {
  try {
    symmetric_params(make_system(0, 0, 1.2));
    FAIL() << "expected OutOfDomain";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfDomain);
    EXPECT_NE(std::string(e.what()).find("bound"), std::string::npos);
  }
  try {
    symmetric_params(make_system(1, 1, 1.0));
    FAIL() << "expected DegenerateRepresentation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateRepresentation);
  }
}

TEST(LandauParams, CommutativeLimit) {
  const PhysicalSystem sys = make_system(1.5, 0.7, 0.0, 1.3, 1.0, 2.0);
  expect_form(landau_params(sys), 2.0, 2.0, 1.5 * 1.5 + 1.3 * 1.3, 0.49, 1.3, 0.0);
}

TEST(LandauParams, PureLandauHalfTheta) {
  expect_form(landau_params(make_system(0, 0, 0.5)), 1, 4, 1, 0, 0.5, 0);
}

TEST(LandauParams, ExtendedDomainAndPole) {
  EXPECT_NO_THROW(landau_params(make_system(1, 1, 1.7)));
  try {
    landau_params(make_system(1, 1, 1.0));
    FAIL() << "expected DegenerateRepresentation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateRepresentation);
  }
}

// The printed closed-form tables encode the same object as the matrix route.
TEST(ClosedForms, AgreeWithAssembledForms) {
  for (const PhysicalSystem& sys : varied_systems()) {
    const NCParameters nc = sys.nc();
    const QuadraticForm sym = assemble(sys, make_representation(nc, symmetric_gauge(nc)));
    EXPECT_LE(symmetric_params(sys).max_relative_deviation(sym), 1e-12)
        << "theta=" << sys.theta() << " w=(" << sys.omega1() << "," << sys.omega2() << ")";
    const QuadraticForm lan = assemble(sys, make_representation(nc, landau_gauge()));
    EXPECT_LE(landau_params(sys).max_relative_deviation(lan), 1e-12)
        << "theta=" << sys.theta() << " w=(" << sys.omega1() << "," << sys.omega2() << ")";
  }
  for (double theta : {1.2, 1.5, 2.0, 3.0}) {
    const PhysicalSystem sys = make_system(1.5, 1.0, theta);
    const QuadraticForm lan = assemble(sys, make_representation(sys.nc(), landau_gauge()));
    EXPECT_LE(landau_params(sys).max_relative_deviation(lan), 1e-12) << theta;
  }
}

TEST(NmpParams, CommutativeLimit) {
  const PhysicalSystem sys = make_system(1.5, 0.7, 0.0, 1.3, 1.0, 2.0);
  expect_form(nmp_params(sys, NmpLandau{}), 2.0, 2.0, 2.25, 0.49 + 1.69, 0.0, 1.3);
  const double quarter = 1.69 / 4.0;
  expect_form(nmp_params(sys, NmpSymmetric{}), 2.0, 2.0, 2.25 + quarter, 0.49 + quarter, 0.65,
              0.65);
}

TEST(NmpParams, SymmetricPureLandauHalfTheta) {
  expect_form(nmp_params(make_system(0, 0, 0.5), NmpSymmetric{}), 1.0 / 1.265625,
              1.0 / 1.265625, 0.31640625, 0.31640625, 0.5625, 0.5625);
}

TEST(NmpParams, LandauPureLandauHalfTheta) {
  // M'_1 = 1/(1 + 1/2 + 1/16), M'_2 = 1, Omega'_2^2 = omega_c^2, l'_2 = 1 + 1/4.
  expect_form(nmp_params(make_system(0, 0, 0.5), NmpLandau{}), 0.64, 1.0, 0.0, 1.0, 0.0, 1.25);
}

TEST(NmpParams, RejectsGroupPrescription) {
  try {
    nmp_params(make_system(0, 0, 0.5), GroupTheoretic{landau_gauge()});
    FAIL() << "expected InvalidArgument";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

// Bopp shift plus the stated vector potential, assembled through the
// symplectic form, reproduces the primed tables.
TEST(NmpParams, AgreeWithBoppShiftAssembly) {
  std::vector<PhysicalSystem> systems = varied_systems();
  for (double theta : {1.0, 1.5, 2.5}) systems.push_back(make_system(1.5, 1.0, theta));
  for (const PhysicalSystem& sys : systems) {
    for (Prescription p : {Prescription{NmpSymmetric{}}, Prescription{NmpLandau{}}}) {
      const QuadraticForm m = assemble(sys, nmp_representation(sys, p));
      EXPECT_LE(nmp_params(sys, p).max_relative_deviation(m), 1e-12)
          << "theta=" << sys.theta() << " nmp index " << p.index();
    }
  }
}

TEST(NmpParams, RepresentationViolatesDeformedAlgebra) {
  const PhysicalSystem sys = make_system(0, 0, 0.5);
  const CommutatorMatrix sym = commutator_table(nmp_representation(sys, NmpSymmetric{}));
  EXPECT_NEAR(sym(NcOperator::X, NcOperator::Y), 0.5, 1e-15);
  EXPECT_NEAR(sym(NcOperator::PiX, NcOperator::PiY), 1.0 + 0.5 / 4.0, 1e-15);
  const CommutatorMatrix lan = commutator_table(nmp_representation(sys, NmpLandau{}));
  EXPECT_NEAR(lan(NcOperator::PiX, NcOperator::PiY), 1.0, 1e-15);
  EXPECT_NEAR(lan(NcOperator::X, NcOperator::PiX), 1.5, 1e-15);  // 1 + B theta / hbar
  for (Prescription p : {Prescription{NmpSymmetric{}}, Prescription{NmpLandau{}}}) {
    EXPECT_FALSE(satisfies_algebra(nmp_representation(sys, p), sys.nc()));
  }
  const PhysicalSystem flat = make_system(0, 0, 0.0);
  EXPECT_TRUE(satisfies_algebra(nmp_representation(flat, NmpLandau{}), flat.nc()));
}

// No field and no noncommutativity: every prescription is the bare
// anisotropic oscillator.
TEST(Prescriptions, DecoupleWithoutFieldOrTheta) {
  const PhysicalSystem sys = make_system(1.5, 0.8, 0.0, 0.0, 1.0, 1.3);
  const std::vector<Prescription> all = {GroupTheoretic{landau_gauge()},
                                         GroupTheoretic{{0.5, 0.5}},
                                         GroupTheoretic{{-1.3, 1.9}}, NmpSymmetric{},
                                         NmpLandau{}};
  for (const Prescription& p : all) {
    expect_form(quadratic_form(sys, p), 1.3, 1.3, 2.25, 0.64, 0.0, 0.0, 1e-15);
  }
  expect_form(symmetric_params(sys), 1.3, 1.3, 2.25, 0.64, 0.0, 0.0, 1e-15);
  expect_form(landau_params(sys), 1.3, 1.3, 2.25, 0.64, 0.0, 0.0, 1e-15);
}

TEST(QuadraticFormTest, Validation) {
  EXPECT_THROW(QuadraticForm(0.0, 1.0, 1.0, 1.0, 0.0, 0.0), Error);
  EXPECT_THROW(QuadraticForm(1.0, 1.0, -1e-3, 1.0, 0.0, 0.0), Error);
  EXPECT_THROW(QuadraticForm(1.0, 1.0, 1.0, 1.0, NAN, 0.0), Error);
  const QuadraticForm q(2.0, 0.5, 3.0, 4.0, 0.1, -0.2);
  EXPECT_DOUBLE_EQ(q.a(), 0.5);
  EXPECT_DOUBLE_EQ(q.b(), 2.0);
  EXPECT_DOUBLE_EQ(q.k1(), 6.0);
  EXPECT_DOUBLE_EQ(q.k2(), 2.0);
}

TEST(PhysicalSystemTest, Validation) {
  SystemInputs in;
  in.omega1 = -1.0;
  EXPECT_THROW(PhysicalSystem{in}, Error);
  in = {};
  in.theta = -0.1;
  EXPECT_THROW(PhysicalSystem{in}, Error);
  in = {};
  in.m = 2.0;
  in.omega_c = 1.5;
  EXPECT_DOUBLE_EQ(PhysicalSystem(in).B(), 3.0);
}
