#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qmkit/units.hpp"

/// Spin-1/2 algebra, Larmor precession, Zeeman splitting and small
/// angular-momentum matrices.
namespace qmkit::spin {

using cplx = std::complex<double>;

/// z-basis amplitudes (up, down).
struct SpinState {
  cplx up;
  cplx down;

  Eigen::Vector2cd vector() const { return {up, down}; }
  double norm() const;
  /// Throws ZeroNormError for the zero spinor.
  SpinState normalized() const;
};

/// True when the two states differ only by a global phase (and scale):
/// |<a|b>| == |a| |b| within `tol` relative.
bool same_physical_state(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b, double tol = 1e-12);
bool same_physical_state(const SpinState& a, const SpinState& b, double tol = 1e-12);

struct Direction {
  double theta;
  double phi;

  Eigen::Vector3d unit() const;
  static Direction x() { return {1.5707963267948966, 0.0}; }
  static Direction y() { return {1.5707963267948966, 1.5707963267948966}; }
  static Direction z() { return {0.0, 0.0}; }
};

enum class Axis { X, Y, Z };

Eigen::Matrix2cd pauli(Axis axis);
/// (hbar / 2) sigma_axis.
Eigen::Matrix2cd spin_operator(Axis axis, double hbar = 1.0);
/// (hbar/2) [[cos t, sin t e^{-i p}], [sin t e^{i p}, -cos t]].
Eigen::Matrix2cd spin_direction_operator(const Direction& dir, double hbar = 1.0);

struct SpinEigenstates {
  SpinState plus;
  SpinState minus;
};

/// |+> = (e^{-i phi/2} cos(theta/2), e^{i phi/2} sin(theta/2)),
/// |-> = (-e^{-i phi/2} sin(theta/2), e^{i phi/2} cos(theta/2)).
SpinEigenstates spin_eigenstates(const Direction& dir);

struct Measurement {
  double p_plus;
  double p_minus;
  SpinState collapsed_plus;
  SpinState collapsed_minus;
};

/// Outcome probabilities of a spin measurement along `dir`. Throws
/// ZeroNormError for the zero state.
Measurement measure_spin(const SpinState& state, const Direction& dir);

/// <psi|A|psi> / <psi|psi>.
cplx expectation(const Eigen::Matrix2cd& op, const SpinState& state);

/// Solution of dS/dt = gamma S x B for B = B_z e_z: the transverse part turns
/// by the angle -gamma B t about z.
Eigen::Vector3d larmor_classical(const Eigen::Vector3d& s0, double gamma, double B, double t);

struct LarmorQuantum {
  SpinState state;
  Eigen::Vector3d expectation;  // <S_x>, <S_y>, <S_z>
};

/// Evolution under H = -gamma B S_z from the |+> eigenstate along `dir0`.
LarmorQuantum larmor_quantum(const Direction& dir0, double gamma, double B, double t, double hbar = 1.0);

struct Zeeman {
  double delta_E;    // gamma B hbar
  double frequency;  // delta_E / h
};

/// Throws DomainError for B < 0.
Zeeman zeeman_splitting(double B, double gamma, double hbar = 1.0);

/// E_n(hydrogen) - gamma B hbar m. Throws QuantumNumberError unless |m| <= n - 1.
double orbital_zeeman_energy(int n, int m, double B, double gamma, const UnitSystem& units = UnitSystem::si());

/// F_z = gamma S_z dB/dz on a moment M = gamma S.
double stern_gerlach_force(double gamma, double s_z, double dB_dz);

/// l = 1 matrices in the basis (m = +1, m = 0, m = -1), so L_z = hbar diag(1, 0, -1).
struct L1Matrices {
  Eigen::Matrix3cd Lx;
  Eigen::Matrix3cd Ly;
  Eigen::Matrix3cd Lz;
  Eigen::Matrix3cd L2;
};

L1Matrices l1_matrices(double hbar = 1.0);

struct HermitianEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXcd vectors; // columns, unit norm, largest component made real positive
};

/// Throws DomainError if `m` is not Hermitian to 1e-12.
HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& m);

/// AB - BA; throws ShapeError on a dimension mismatch.
Eigen::MatrixXcd matrix_commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

struct AngularMomentum {
  Eigen::MatrixXcd Jx;
  Eigen::MatrixXcd Jy;
  Eigen::MatrixXcd Jz;
};

/// (2j+1)-dimensional representation, basis m = j, j-1, ..., -j.
AngularMomentum angular_momentum_matrices(double j, double hbar = 1.0);

struct Ladder {
  Eigen::MatrixXcd plus;
  Eigen::MatrixXcd minus;
  double residual_plus;   // ||[J_z, J_+] - hbar J_+||
  double residual_minus;  // ||[J_z, J_-] + hbar J_-||
};

/// J+- = Jx +- i Jy. Throws NotAngularMomentumError (with the three
/// commutator residuals) unless [J_a, J_b] = i hbar eps_abc J_c to 1e-10.
Ladder ladder_operators(const Eigen::MatrixXcd& Jx, const Eigen::MatrixXcd& Jy, const Eigen::MatrixXcd& Jz,
                        double hbar = 1.0);

struct PauliProduct {
  Eigen::Matrix2cd lhs;  // (a.sigma)(b.sigma)
  Eigen::Matrix2cd rhs;  // (a.b) I + i sigma.(a x b)
};

PauliProduct pauli_product_check(const Eigen::Vector3d& a, const Eigen::Vector3d& b);

/// (3/4) hbar^2 I.
Eigen::Matrix2cd s_squared(double hbar = 1.0);

}  // namespace qmkit::spin
