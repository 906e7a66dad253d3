#include "qmkit/spin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qmkit/analytic.hpp"
#include "qmkit/error.hpp"

namespace qmkit::spin {

namespace {
constexpr cplx kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;
}  // namespace

double SpinState::norm() const { return std::sqrt(std::norm(up) + std::norm(down)); }

SpinState SpinState::normalized() const {
  const double n = norm();
  if (!(n > 0.0)) throw ZeroNormError("zero spinor cannot be normalized");
  return {up / n, down / n};
}

bool same_physical_state(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b, double tol) {
  if (a.size() != b.size()) throw ShapeError("state dimensions differ");
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return na == nb;
  return std::abs(std::abs(a.dot(b)) - na * nb) <= tol * na * nb;
}

bool same_physical_state(const SpinState& a, const SpinState& b, double tol) {
  return same_physical_state(Eigen::VectorXcd(a.vector()), Eigen::VectorXcd(b.vector()), tol);
}

Eigen::Vector3d Direction::unit() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

Eigen::Matrix2cd pauli(Axis axis) {
  Eigen::Matrix2cd m;
  switch (axis) {
    case Axis::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case Axis::Y:
      m << 0.0, -kI, kI, 0.0;
      break;
    case Axis::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return m;
}

Eigen::Matrix2cd spin_operator(Axis axis, double hbar) { return 0.5 * hbar * pauli(axis); }

Eigen::Matrix2cd spin_direction_operator(const Direction& dir, double hbar) {
  const double c = std::cos(dir.theta);
  const double s = std::sin(dir.theta);
  Eigen::Matrix2cd m;
  m << c, s * std::polar(1.0, -dir.phi), s * std::polar(1.0, dir.phi), -c;
  return 0.5 * hbar * m;
}

SpinEigenstates spin_eigenstates(const Direction& dir) {
  const double c = std::cos(0.5 * dir.theta);
  const double s = std::sin(0.5 * dir.theta);
  const cplx em = std::polar(1.0, -0.5 * dir.phi);
  const cplx ep = std::polar(1.0, 0.5 * dir.phi);
  return {{em * c, ep * s}, {-em * s, ep * c}};
}

Measurement measure_spin(const SpinState& state, const Direction& dir) {
  const double n2 = std::norm(state.up) + std::norm(state.down);
  if (!(n2 > 0.0)) throw ZeroNormError("cannot measure the zero spinor");
  const auto eig = spin_eigenstates(dir);
  const auto overlap = [&](const SpinState& e) { return std::conj(e.up) * state.up + std::conj(e.down) * state.down; };
  Measurement m{};
  m.p_plus = std::norm(overlap(eig.plus)) / n2;
  m.p_minus = std::norm(overlap(eig.minus)) / n2;
  m.collapsed_plus = eig.plus;
  m.collapsed_minus = eig.minus;
  return m;
}

cplx expectation(const Eigen::Matrix2cd& op, const SpinState& state) {
  const Eigen::Vector2cd v = state.vector();
  const double n2 = v.squaredNorm();
  if (!(n2 > 0.0)) throw ZeroNormError("expectation value in the zero spinor");
  return v.dot(op * v) / n2;
}

Eigen::Vector3d larmor_classical(const Eigen::Vector3d& s0, double gamma, double B, double t) {
  const double angle = -gamma * B * t;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * s0.x() - s * s0.y(), s * s0.x() + c * s0.y(), s0.z()};
}

LarmorQuantum larmor_quantum(const Direction& dir0, double gamma, double B, double t, double hbar) {
  const double e_up = -0.5 * gamma * B * hbar;
  const double e_down = 0.5 * gamma * B * hbar;
  const SpinState start = spin_eigenstates(dir0).plus;
  LarmorQuantum out{};
  out.state.up = std::polar(1.0, -e_up * t / hbar) * start.up;
  out.state.down = std::polar(1.0, -e_down * t / hbar) * start.down;
  out.expectation = {expectation(spin_operator(Axis::X, hbar), out.state).real(),
                     expectation(spin_operator(Axis::Y, hbar), out.state).real(),
                     expectation(spin_operator(Axis::Z, hbar), out.state).real()};
  return out;
}

Zeeman zeeman_splitting(double B, double gamma, double hbar) {
  if (B < 0.0) throw DomainError("magnetic field magnitude must be non-negative");
  const double de = gamma * B * hbar;
  return {de, de / (2.0 * kPi * hbar)};
}

double orbital_zeeman_energy(int n, int m, double B, double gamma, const UnitSystem& units) {
  if (n < 1 || std::abs(m) > n - 1) throw QuantumNumberError("orbital Zeeman level needs n >= 1 and |m| <= n-1");
  const double en = analytic::hydrogen_state(n, std::abs(m), m, units).energy();
  return en - gamma * B * units.hbar() * m;
}

double stern_gerlach_force(double gamma, double s_z, double dB_dz) { return gamma * s_z * dB_dz; }

L1Matrices l1_matrices(double hbar) {
  const double r = hbar / std::sqrt(2.0);
  L1Matrices l{};
  l.Lx << 0.0, r, 0.0, r, 0.0, r, 0.0, r, 0.0;
  l.Ly << 0.0, -kI * r, 0.0, kI * r, 0.0, -kI * r, 0.0, kI * r, 0.0;
  l.Lz << hbar, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -hbar;
  l.L2 = l.Lx * l.Lx + l.Ly * l.Ly + l.Lz * l.Lz;
  return l;
}

HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw ShapeError("eigen-decomposition needs a square matrix");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) throw DomainError("matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  HermitianEigen out{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index c = 0; c < out.vectors.cols(); ++c) {
    Eigen::Index imax = 0;
    out.vectors.col(c).cwiseAbs().maxCoeff(&imax);
    const cplx v = out.vectors(imax, c);
    out.vectors.col(c) *= std::abs(v) / v;
  }
  return out;
}

Eigen::MatrixXcd matrix_commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw ShapeError("commutator needs square matrices of equal dimension");
  }
  return a * b - b * a;
}

AngularMomentum angular_momentum_matrices(double j, double hbar) {
  const double twice = 2.0 * j;
  if (j < 0.0 || std::abs(twice - std::round(twice)) > 1e-12) throw DomainError("j must be a non-negative half-integer");
  const auto dim = static_cast<Eigen::Index>(std::lround(twice)) + 1;
  Eigen::MatrixXcd plus = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double m = j - static_cast<double>(i);
    jz(i, i) = hbar * m;
    if (i > 0) plus(i - 1, i) = hbar * std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  const Eigen::MatrixXcd minus = plus.adjoint();
  return {0.5 * (plus + minus), (plus - minus) / (2.0 * kI), jz};
}

Ladder ladder_operators(const Eigen::MatrixXcd& Jx, const Eigen::MatrixXcd& Jy, const Eigen::MatrixXcd& Jz,
                        double hbar) {
  const double scale = std::max({hbar * hbar, Jx.norm() * Jy.norm(), 1e-300});
  const double rxy = (matrix_commutator(Jx, Jy) - kI * hbar * Jz).norm() / scale;
  const double ryz = (matrix_commutator(Jy, Jz) - kI * hbar * Jx).norm() / scale;
  const double rzx = (matrix_commutator(Jz, Jx) - kI * hbar * Jy).norm() / scale;
  if (rxy > 1e-10 || ryz > 1e-10 || rzx > 1e-10) {
    throw NotAngularMomentumError("matrices do not satisfy [J_a, J_b] = i hbar eps_abc J_c", {rxy, ryz, rzx});
  }
  Ladder l{};
  l.plus = Jx + kI * Jy;
  l.minus = Jx - kI * Jy;
  l.residual_plus = (matrix_commutator(Jz, l.plus) - hbar * l.plus).norm();
  l.residual_minus = (matrix_commutator(Jz, l.minus) + hbar * l.minus).norm();
  return l;
}

PauliProduct pauli_product_check(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  const auto dot_sigma = [](const Eigen::Vector3d& v) {
    return Eigen::Matrix2cd(v.x() * pauli(Axis::X) + v.y() * pauli(Axis::Y) + v.z() * pauli(Axis::Z));
  };
  PauliProduct p{};
  p.lhs = dot_sigma(a) * dot_sigma(b);
  p.rhs = a.dot(b) * Eigen::Matrix2cd::Identity() + kI * dot_sigma(a.cross(b));
  return p;
}

Eigen::Matrix2cd s_squared(double hbar) { return 0.75 * hbar * hbar * Eigen::Matrix2cd::Identity(); }

}  // namespace qmkit::spin
