#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qmkit/analytic.hpp"
#include "qmkit/error.hpp"
#include "qmkit/spin.hpp"

using namespace qmkit;
using namespace qmkit::spin;
using doctest::Approx;
using std::numbers::pi;

namespace {
const cplx I(0.0, 1.0);

Direction random_direction(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {std::acos(1 - 2 * u(rng)), 2 * pi * u(rng)};
}

SpinState random_state(std::mt19937& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {{n(rng), n(rng)}, {n(rng), n(rng)}};
}
}  // namespace

TEST_CASE("spin-1/2 operators") {
  const double hbar = 1.7;
  auto Sx = spin_operator(Axis::X, hbar), Sy = spin_operator(Axis::Y, hbar), Sz = spin_operator(Axis::Z, hbar);
  Eigen::Vector2cd up(1, 0);
  CHECK((Sz * up - hbar / 2 * up).norm() == 0.0);
  CHECK((Sx * up - hbar / 2 * Eigen::Vector2cd(0, 1)).norm() == 0.0);
  for (auto S : {Sx, Sy, Sz}) {
    auto e = hermitian_eigen(S);
    CHECK(e.values(0) == Approx(-hbar / 2));
    CHECK(e.values(1) == Approx(hbar / 2));
  }
  CHECK((matrix_commutator(Sx, Sy) - I * hbar * Sz).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((matrix_commutator(Sy, Sz) - I * hbar * Sx).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((matrix_commutator(Sz, Sx) - I * hbar * Sy).cwiseAbs().maxCoeff() < 1e-12);
  Eigen::Matrix2cd sum = Sx * Sx + Sy * Sy + Sz * Sz;
  CHECK((sum - s_squared(hbar)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((s_squared(hbar) - 0.75 * hbar * hbar * Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  std::mt19937 rng(1);
  for (int i = 0; i < 5; ++i) {
    auto psi = random_state(rng).normalized();
    CHECK(std::abs(psi.vector().dot(s_squared(hbar) * psi.vector()) - 0.75 * hbar * hbar) < 1e-12);
  }
}

TEST_CASE("spin along a direction") {
  CHECK((spin_direction_operator(Direction::x()) - spin_operator(Axis::X)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((spin_direction_operator(Direction::z()) - spin_operator(Axis::Z)).cwiseAbs().maxCoeff() < 1e-15);
  std::mt19937 rng(2);
  for (int i = 0; i < 20; ++i) {
    auto d = random_direction(rng);
    Eigen::Matrix2cd S = spin_direction_operator(d);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> dense(S);
    CHECK(dense.eigenvalues()(0) == Approx(-0.5).epsilon(1e-12));
    CHECK(dense.eigenvalues()(1) == Approx(0.5).epsilon(1e-12));
    CHECK(d.unit().norm() == Approx(1.0));
    auto es = spin_eigenstates(d);
    CHECK((S * es.plus.vector() - 0.5 * es.plus.vector()).norm() < 1e-12);
    CHECK((S * es.minus.vector() + 0.5 * es.minus.vector()).norm() < 1e-12);
    CHECK(std::abs(es.plus.vector().dot(es.minus.vector())) < 1e-14);
    CHECK(es.plus.norm() == Approx(1.0));
  }
  auto z = spin_eigenstates(Direction::z());
  CHECK(same_physical_state(z.plus, SpinState{1.0, 0.0}));
  CHECK(same_physical_state(z.minus, SpinState{0.0, 1.0}));
  const double r = 1 / std::sqrt(2.0);
  auto x = spin_eigenstates(Direction::x());
  CHECK(same_physical_state(x.plus, SpinState{r, r}));
  CHECK(same_physical_state(x.minus, SpinState{r, -r}));
  auto y = spin_eigenstates(Direction::y());
  CHECK(same_physical_state(y.plus, SpinState{r, I * r}));
  CHECK(same_physical_state(y.minus, SpinState{r, -I * r}));
  CHECK_FALSE(same_physical_state(x.plus, y.plus));
}

TEST_CASE("spin measurement") {
  SpinState up{1.0, 0.0};
  CHECK(measure_spin(up, Direction::z()).p_plus == Approx(1.0));
  auto mx = measure_spin(up, Direction::x());
  CHECK(mx.p_plus == Approx(0.5));
  CHECK(mx.p_minus == Approx(0.5));
  const double r = 1 / std::sqrt(2.0);
  CHECK(measure_spin({r, r}, Direction::z()).p_plus == Approx(0.5));
  CHECK_THROWS_AS(measure_spin({0.0, 0.0}, Direction::z()), ZeroNormError);

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.0, 2 * pi);
  for (int i = 0; i < 50; ++i) {
    auto psi = random_state(rng);
    auto d = random_direction(rng);
    auto m = measure_spin(psi, d);
    CHECK(std::abs(m.p_plus + m.p_minus - 1.0) < 1e-12);
    CHECK(measure_spin(m.collapsed_plus, d).p_plus == Approx(1.0).epsilon(1e-12));
    cplx phase = std::exp(I * u(rng));
    auto shifted = measure_spin({phase * psi.up, phase * psi.down}, d);
    CHECK(std::abs(shifted.p_plus - m.p_plus) < 1e-12);
  }
}

TEST_CASE("Larmor precession") {
  Eigen::Vector3d s0(0.3, 0.0, 0.4);
  const double gamma = 2.0, B = 1.5, w = gamma * B;
  CHECK((larmor_classical(s0, gamma, B, 2 * pi / w) - s0).norm() < 1e-12);
  CHECK((larmor_classical(s0, gamma, 0.0, 7.0) - s0).norm() == 0.0);
  auto quarter = larmor_classical(s0, gamma, B, pi / (2 * w));
  CHECK(std::abs(quarter(0)) < 1e-14);
  CHECK(std::abs(std::abs(quarter(1)) - 0.3) < 1e-14);
  CHECK(quarter(2) == 0.4);
  // opposite sense for opposite gamma
  CHECK(larmor_classical(s0, -gamma, B, pi / (2 * w))(1) == Approx(-quarter(1)));
  // dS/dt = gamma S x B
  Eigen::Vector3d Bv(0, 0, B);
  const double dt = 1e-6;
  Eigen::Vector3d deriv = (larmor_classical(s0, gamma, B, dt) - larmor_classical(s0, gamma, B, -dt)) / (2 * dt);
  CHECK((deriv - gamma * s0.cross(Bv)).norm() < 1e-8);

  auto q0 = larmor_quantum(Direction::x(), 1.76e11, 0.0, 0.0);
  CHECK((q0.expectation - Eigen::Vector3d(0.5, 0, 0)).norm() < 1e-14);

  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    auto d = random_direction(rng);
    double g = 4 * u(rng) - 2, b = 3 * u(rng), t = 10 * u(rng), hbar = 0.5 + u(rng);
    auto q = larmor_quantum(d, g, b, t, hbar);
    Eigen::Vector3d classical = larmor_classical(0.5 * hbar * d.unit(), g, b, t);
    CHECK((q.expectation - classical).norm() < 1e-10);
    CHECK(q.expectation(2) == Approx(0.5 * hbar * std::cos(d.theta)));
    CHECK(q.state.norm() == Approx(1.0));
  }
}

TEST_CASE("Zeeman splitting and magnetic moments") {
  const auto c = UnitSystem::si().constants();
  auto z = zeeman_splitting(0.15, 1.76e11, c.hbar);
  CHECK(z.delta_E == Approx(2.7840695986e-24).epsilon(1e-10));
  CHECK(z.frequency == Approx(4.2016904976e9).epsilon(1e-10));
  CHECK(z.frequency == Approx(4.2e9).epsilon(0.01));
  CHECK(zeeman_splitting(0.0, 1.76e11, c.hbar).delta_E == 0.0);
  CHECK(zeeman_splitting(0.3, 1.76e11, c.hbar).delta_E == Approx(2 * z.delta_E));
  CHECK_THROWS_AS(zeeman_splitting(-1.0, 1.0), DomainError);

  const double B = 2.0, g = 1e10;
  double e2 = analytic::hydrogen_state(2, 0, 0).energy();
  CHECK(orbital_zeeman_energy(2, 0, 0.0, g) == Approx(e2));
  CHECK(orbital_zeeman_energy(2, 0, B, g) == Approx(e2));
  double lo = orbital_zeeman_energy(2, 1, B, g), mid = orbital_zeeman_energy(2, 0, B, g),
         hi = orbital_zeeman_energy(2, -1, B, g);
  CHECK(mid - lo == Approx(g * B * c.hbar).epsilon(1e-6));
  CHECK(hi - mid == Approx(g * B * c.hbar).epsilon(1e-6));
  CHECK_THROWS_AS(orbital_zeeman_energy(2, 2, B, g), QuantumNumberError);
  CHECK(stern_gerlach_force(2.0, 0.5, 3.0) == Approx(3.0));
}

TEST_CASE("l = 1 matrices") {
  const double hbar = 1.0;
  auto L = l1_matrices(hbar);
  Eigen::Matrix3cd Lx;
  Lx << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  Lx /= std::sqrt(2.0);
  CHECK((L.Lx - Lx).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((L.Lz - Eigen::Vector3cd(1, 0, -1).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((L.L2 - 2.0 * Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(matrix_commutator(L.L2, L.Lx).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((matrix_commutator(L.Lx, L.Ly) - I * hbar * L.Lz).cwiseAbs().maxCoeff() < 1e-12);

  auto e = hermitian_eigen(L.Lx);
  CHECK(e.values(0) == Approx(-1.0));
  CHECK(std::abs(e.values(1)) < 1e-14);
  CHECK(e.values(2) == Approx(1.0));
  Eigen::VectorXcd v1(3);
  v1 << 1, -std::sqrt(2.0), 1;
  CHECK(same_physical_state(e.vectors.col(0), v1, 1e-12));
  // |N|^2 (1 + 2 + 1) = 1
  CHECK(std::abs(e.vectors.col(0)(0)) == Approx(0.5));
  Eigen::MatrixXcd U = e.vectors;
  CHECK((U.adjoint() * U - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  Eigen::MatrixXcd diag = U.adjoint() * L.Lx * U;
  CHECK((diag - Eigen::Vector3cd(-1, 0, 1).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() < 1e-12);

  Eigen::MatrixXcd bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(hermitian_eigen(bad), DomainError);
  CHECK_THROWS_AS(matrix_commutator(Eigen::MatrixXcd::Identity(2, 2), Eigen::MatrixXcd::Identity(3, 3)), ShapeError);
}

TEST_CASE("ladder operators") {
  const double hbar = 1.0;
  auto Sx = spin_operator(Axis::X), Sy = spin_operator(Axis::Y), Sz = spin_operator(Axis::Z);
  auto half = ladder_operators(Sx, Sy, Sz, hbar);
  Eigen::Matrix2cd expect;
  expect << 0, 1, 0, 0;
  CHECK((half.plus - expect).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((half.minus - expect.transpose()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(half.residual_plus < 1e-12);
  CHECK(half.residual_minus < 1e-12);

  auto L = l1_matrices(hbar);
  auto one = ladder_operators(L.Lx, L.Ly, L.Lz, hbar);
  Eigen::VectorXcd m0(3), m1(3);
  m0 << 0, 1, 0;
  m1 << 1, 0, 0;
  CHECK(same_physical_state(one.plus * m0, m1));
  CHECK(one.residual_plus < 1e-12);

  for (double j : {0.5, 1.0, 1.5, 2.0}) {
    auto J = angular_momentum_matrices(j, 0.8);
    auto lad = ladder_operators(J.Jx, J.Jy, J.Jz, 0.8);
    CHECK(lad.residual_plus < 1e-12);
    Eigen::MatrixXcd J2 = J.Jx * J.Jx + J.Jy * J.Jy + J.Jz * J.Jz;
    Eigen::MatrixXcd target = 0.64 * j * (j + 1) * Eigen::MatrixXcd::Identity(J2.rows(), J2.cols());
    CHECK((J2 - target).cwiseAbs().maxCoeff() < 1e-12);
  }
  try {
    ladder_operators(Sx, Sz, Sy, hbar);
    FAIL("expected NotAngularMomentumError");
  } catch (const NotAngularMomentumError& e) {
    CHECK(e.residuals().size() == 3);
  }
}

TEST_CASE("Pauli product identity") {
  auto zz = pauli_product_check(Eigen::Vector3d::UnitZ(), Eigen::Vector3d::UnitZ());
  CHECK((zz.lhs - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((zz.rhs - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  auto xy = pauli_product_check(Eigen::Vector3d::UnitX(), Eigen::Vector3d::UnitY());
  CHECK((xy.lhs - I * pauli(Axis::Z)).cwiseAbs().maxCoeff() < 1e-15);
  std::mt19937 rng(6);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    Eigen::Vector3d a(n(rng), n(rng), n(rng)), b(n(rng), n(rng), n(rng));
    auto p = pauli_product_check(a, b);
    Eigen::Matrix2cd as = a(0) * pauli(Axis::X) + a(1) * pauli(Axis::Y) + a(2) * pauli(Axis::Z);
    Eigen::Matrix2cd bs = b(0) * pauli(Axis::X) + b(1) * pauli(Axis::Y) + b(2) * pauli(Axis::Z);
    CHECK((as * bs - p.rhs).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((p.lhs - p.rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}
