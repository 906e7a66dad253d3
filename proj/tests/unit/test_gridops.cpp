#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qmkit/analytic.hpp"
#include "qmkit/error.hpp"
#include "qmkit/fourier.hpp"
#include "qmkit/hamiltonian.hpp"
#include "qmkit/observables.hpp"
#include "qmkit/operators.hpp"

using namespace qmkit;
using namespace qmkit::gridops;
using doctest::Approx;
using std::numbers::pi;

namespace {

WaveFunction random_function(const Grid1D& grid, std::mt19937& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<cplx> v(grid.size());
  for (auto& z : v) z = {n(rng), n(rng)};
  return WaveFunction(grid, v);
}

// Smooth packet that vanishes at the ends of [-10, 10].
WaveFunction random_packet(const Grid1D& grid, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double x0 = 2 * u(rng), p0 = 3 * u(rng), s = 0.7 + 0.4 * (u(rng) + 1);
  double c = u(rng);
  return WaveFunction::sample(grid, [=](double x) {
    return std::exp(-(x - x0) * (x - x0) / (4 * s * s)) * (1.0 + c * x) * std::exp(cplx(0, p0 * x));
  });
}

Spectrum sho_spectrum(std::size_t k, std::size_t n = 4001) {
  Grid1D grid(-12.0, 12.0, n);
  auto h = assemble_hamiltonian(grid, [](double x) { return 0.5 * x * x; }, 1.0);
  return solve_eigen(h, k, BoundaryKind::Truncated);
}

}  // namespace

TEST_CASE("grid construction") {
  Grid1D g(0.0, 2.0, 5);
  CHECK(g.dx() == 0.5);
  CHECK(g.x(4) == 2.0);
  CHECK(g.points().size() == 5);
  CHECK_FALSE(g.is_symmetric());
  CHECK(Grid1D(-1, 1, 11).is_symmetric());
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 2), DomainError);
  CHECK_THROWS_AS(Grid1D(1.0, 0.0, 10), DomainError);
  CHECK_THROWS_AS(WaveFunction(g, std::vector<double>(4, 1.0)), ShapeError);
}

TEST_CASE("inner product and normalization") {
  std::mt19937 rng(7);
  Grid1D g(0.0, 1.0, 501);
  auto f1 = random_function(g, rng), f2 = random_function(g, rng), h = random_function(g, rng);
  cplx a(0.3, -1.2), b(2.0, 0.5);
  auto lhs = inner_product(a * f1 + b * f2, h);
  auto rhs = std::conj(a) * inner_product(f1, h) + std::conj(b) * inner_product(f2, h);
  CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
  CHECK(std::abs(inner_product(f1, h) - std::conj(inner_product(h, f1))) < 1e-12);

  auto psi1 = analytic::box_state(1, 1.0, 1.0).sample(g);
  auto psi2 = analytic::box_state(2, 1.0, 1.0).sample(g);
  CHECK(inner_product(psi1, psi1).real() == Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(inner_product(psi1, psi2)) < 1e-8);

  auto n = normalize(WaveFunction(Grid1D(0, 2, 101), std::vector<double>(101, 1.0)));
  CHECK(n[50].real() == Approx(1.0 / std::sqrt(2.0)));
  auto s = normalize(WaveFunction::sample(g, [](double x) { return 3.0 * std::sin(pi * x); }));
  CHECK(s[250].real() == Approx(std::sqrt(2.0)).epsilon(1e-6));
  auto once = normalize(f1);
  auto twice = normalize(once);
  CHECK(std::abs(once.norm_squared() - 1.0) < 1e-12);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(once[i] - twice[i]) < 1e-14);
  CHECK_THROWS_AS(normalize(WaveFunction::zeros(g)), ZeroNormError);
  CHECK_THROWS_AS(inner_product(f1, WaveFunction::zeros(Grid1D(0, 1, 500))), ShapeError);
}

TEST_CASE("operator actions") {
  Grid1D g(0.0, 1.0, 1001);
  auto e7 = WaveFunction::sample(g, [](double x) { return std::exp(7 * x); });
  auto d = GridOperator::derivative().apply(e7);
  for (std::size_t i = 1; i + 1 < g.size(); i += 50)
    CHECK(std::abs(d[i] / e7[i] - 7.0) < 49.0 * 7.0 * g.dx() * g.dx());
  CHECK(std::abs(d[0] / e7[0] - 7.0) < 1e-3);

  auto x = GridOperator::position().apply(e7);
  CHECK(x[300] == e7[300] * g.x(300));

  Grid1D s(-1.0, 1.0, 201);
  auto lin = WaveFunction::sample(s, [](double x) { return x; });
  auto r = GridOperator::parity().apply(lin);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(r[i] + lin[i]) < 1e-14);
  CHECK_THROWS_AS(GridOperator::parity().apply(e7), DomainError);

  auto A = GridOperator::position(), B = GridOperator::derivative();
  auto lin_left = (2.0 * A + cplx(0, 1) * B).apply(e7);
  auto lin_right = 2.0 * A.apply(e7) + cplx(0, 1) * B.apply(e7);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(lin_left[i] - lin_right[i]) < 1e-9);
}

TEST_CASE("commutators") {
  Grid1D g(-2.0, 2.0, 801);
  auto X = GridOperator::position(), D = GridOperator::derivative();
  auto x2 = WaveFunction::sample(g, [](double x) { return x * x; });
  auto c = commutator_apply(X, D, x2);
  // central differences give D x^3 = 3 x^2 + dx^2 exactly
  for (std::size_t i = 2; i + 2 < g.size(); ++i) CHECK(std::abs(c[i] + x2[i] + g.dx() * g.dx()) < 1e-9);

  auto f = WaveFunction::sample(g, [](double x) { return std::exp(-x * x) * std::cos(3 * x); });
  const double hbar = 1.3;
  auto xp = commutator_apply(X, GridOperator::momentum(hbar), f);
  for (std::size_t i = 2; i + 2 < g.size(); ++i)
    CHECK(std::abs(xp[i] - cplx(0, hbar) * f[i]) < 20 * g.dx() * g.dx());

  auto zero = commutator_apply(X, X * X, f);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(zero[i]) < 1e-14);

  auto rd = commutator_apply(GridOperator::parity(), GridOperator::second_derivative(), f);
  for (std::size_t i = 3; i + 3 < g.size(); ++i) CHECK(std::abs(rd[i]) < 1e-8);
}

TEST_CASE("Hamiltonian assembly") {
  Grid1D g(0.0, 2.0, 5);  // dx = 0.5
  auto h = assemble_hamiltonian(g, std::vector<double>(5, 0.0), 1.0);
  CHECK(h.diagonal()[0] == Approx(4.0));
  CHECK(h.off_diagonal() == Approx(-2.0));
  auto m = h.dense();
  CHECK((m - m.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(assemble_hamiltonian(g, std::vector<double>(4, 0.0), 1.0), ShapeError);
  CHECK_THROWS_AS(assemble_hamiltonian(g, std::vector<double>(5, 0.0), -1.0), DomainError);

  std::mt19937 rng(3);
  Grid1D big(-10.0, 10.0, 801);
  auto H = GridOperator::hamiltonian(assemble_hamiltonian(big, [](double x) { return 0.1 * x * x; }, 1.0));
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_function(big, rng), k = random_function(big, rng);
    f[0] = f[800] = k[0] = k[800] = 0.0;
    auto a = inner_product(H.apply(f), k), b = inner_product(f, H.apply(k));
    CHECK(std::abs(a - b) < 1e-9 * f.norm() * k.norm());
  }
  auto P = GridOperator::momentum(1.0);
  Grid1D wide(-20.0, 20.0, 1601);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_packet(wide, rng), k = random_packet(wide, rng);
    CHECK(std::abs(inner_product(P.apply(f), k) - inner_product(f, P.apply(k))) < 1e-8);
  }
}

TEST_CASE("box spectrum") {
  Grid1D g(0.0, 1.0, 2001);
  auto h = assemble_hamiltonian(g, std::vector<double>(g.size(), 0.0), 1.0);
  auto sp = solve_eigen(h, 5);
  REQUIRE(sp.size() == 5);
  for (int n = 1; n <= 5; ++n) CHECK(sp.energies[n - 1] == Approx(n * n * pi * pi / 2).epsilon(1e-3));
  CHECK(sp.energies[0] == Approx(4.9348).epsilon(1e-4));
  CHECK(sp.warnings.empty());

  auto dense = oracle::dense_fd_eigenvalues([](double) { return 0.0; }, 0.0, 1.0, 401);
  auto small = solve_eigen(assemble_hamiltonian(Grid1D(0, 1, 401), std::vector<double>(401, 0.0), 1.0), 8);
  for (int i = 0; i < 8; ++i) CHECK(small.energies[i] == Approx(dense(i)).epsilon(1e-11));

  for (std::size_t i = 0; i < sp.size(); ++i) {
    CHECK(sp.residuals[i] < 1e-10 * h.matrix_norm());
    for (std::size_t j = 0; j < sp.size(); ++j)
      CHECK(std::abs(inner_product(sp.states[i], sp.states[j]) - (i == j ? 1.0 : 0.0)) < 1e-8);
    double vmax = 0.0;
    for (const auto& v : sp.states[i].values()) vmax = std::max(vmax, std::abs(v));
    for (const auto& v : sp.states[i].values())
      if (std::abs(v) >= vmax * (1 - 1e-8)) {
        CHECK(v.real() > 0.0);
        break;
      }
  }

  auto shifted = solve_eigen(h.shifted(3.25), 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(std::abs(shifted.energies[i] - sp.energies[i] - 3.25) < 1e-10);
    CHECK(std::abs(inner_product(shifted.states[i], sp.states[i]).real() - 1.0) < 1e-8);
  }
  CHECK_THROWS_AS(solve_eigen(h, 0), DomainError);
  CHECK_THROWS_AS(solve_eigen(h, g.size() - 1), DomainError);
}

TEST_CASE("box ground energy converges at second order") {
  std::vector<double> err;
  for (std::size_t n : {101u, 201u, 401u}) {
    auto h = assemble_hamiltonian(Grid1D(0, 1, n), std::vector<double>(n, 0.0), 1.0);
    err.push_back(std::abs(solve_eigen(h, 1).energies[0] - pi * pi / 2));
  }
  CHECK(err[0] / err[1] == Approx(4.0).epsilon(0.2));
  CHECK(err[1] / err[2] == Approx(4.0).epsilon(0.2));
}

TEST_CASE("oscillator spectrum and truncation warnings") {
  auto sp = sho_spectrum(6);
  for (int n = 0; n < 6; ++n) CHECK(sp.energies[n] == Approx(n + 0.5).epsilon(1e-3));
  CHECK(sp.warnings.empty());
  for (int n = 0; n < 6; ++n) {
    auto exact = analytic::sho_wavefunction(n, 1.0, 1.0).sample(sp.grid);
    CHECK(std::abs(inner_product(exact, sp.states[n])) >= 0.9999);
  }
  Grid1D narrow(-3.0, 3.0, 601);
  auto cut = solve_eigen(assemble_hamiltonian(narrow, [](double x) { return 0.5 * x * x; }, 1.0), 6,
                         BoundaryKind::Truncated);
  CHECK_FALSE(cut.warnings.empty());
}

TEST_CASE("time evolution") {
  auto sp = sho_spectrum(4, 1201);
  const std::vector<cplx> c = {1 / std::sqrt(2.0), 1 / std::sqrt(2.0)};
  auto H = GridOperator::hamiltonian(assemble_hamiltonian(sp.grid, [](double x) { return 0.5 * x * x; }, 1.0));
  double n0 = evolve(sp, c, 0.0).norm();
  for (double t : {0.0, 0.37, 2.0, 31.4, 1e4}) {
    auto psi = evolve(sp, c, t);
    CHECK(std::abs(psi.norm() - n0) < 1e-12);
    CHECK(expectation(H, psi).real() == Approx(0.5 * (sp.energies[0] + sp.energies[1])).epsilon(1e-9));
  }
  CHECK(expectation(H, evolve(sp, c, 0.0)).real() == Approx(1.0).epsilon(1e-3));
  auto single = evolve(sp, {0.0, 1.0}, 0.0), later = evolve(sp, {0.0, 1.0}, 5.3);
  for (std::size_t i = 0; i < single.size(); ++i) CHECK(std::abs(std::abs(single[i]) - std::abs(later[i])) < 1e-12);
  auto zero_t = evolve(sp, {0.6, 0.8}, 0.0);
  for (std::size_t i = 0; i < zero_t.size(); i += 97)
    CHECK(std::abs(zero_t[i] - (0.6 * sp.states[0][i] + 0.8 * sp.states[1][i])) < 1e-14);
}

TEST_CASE("expectations and uncertainties") {
  Grid1D s(-8.0, 8.0, 1601);
  auto X = GridOperator::position();
  auto even = WaveFunction::sample(s, [](double x) { return std::exp(-x * x); });
  auto odd = WaveFunction::sample(s, [](double x) { return x * std::exp(-x * x); });
  CHECK(std::abs(expectation(X, even)) < 1e-10);
  CHECK(std::abs(expectation(X, odd)) < 1e-10);

  Grid1D box(0.0, 1.0, 2001);
  CHECK(expectation(X, analytic::box_state(1, 1.0, 1.0).sample(box)).real() == Approx(0.5).epsilon(1e-10));

  auto gauss = WaveFunction::sample(s, [](double x) { return std::exp(-x * x / 4.0); });
  CHECK(uncertainty(X, gauss).delta == Approx(1.0).epsilon(1e-3));

  Grid1D unit(-0.5, 0.5, 1001);
  WaveFunction flat(unit, std::vector<double>(unit.size(), 1.0));
  auto u = uncertainty(X, flat);
  CHECK(u.variance + u.mean * u.mean == Approx(1.0 / 12).epsilon(1e-5));
  CHECK(std::abs(u.mean) < 1e-12);

  std::vector<double> widths;
  for (double w : {0.5, 0.1, 0.02}) {
    auto spike = WaveFunction::sample(s, [w](double x) { return std::exp(-x * x / (4 * w * w)); });
    widths.push_back(uncertainty(X, spike).delta);
  }
  CHECK(widths[1] < widths[0]);
  CHECK(widths[2] < widths[1]);
}

TEST_CASE("uncertainty floor on random packets") {
  std::mt19937 rng(20240);
  Grid1D g(-10.0, 10.0, 2001);
  auto X = GridOperator::position(), P = GridOperator::momentum(1.0);
  for (int trial = 0; trial < 100; ++trial) {
    auto psi = normalize(random_packet(g, rng));
    const double dx = uncertainty(X, psi).delta;
    const double dp = std::sqrt(fourier::fourier_transform(psi).variance());
    CHECK(dx * dp >= 0.5 - 1e-9);
    // the central-difference P underestimates the spread at O(dx^2)
    CHECK(uncertainty(P, psi).delta == Approx(dp).epsilon(1e-3));
  }
}

TEST_CASE("probability current") {
  Grid1D g(0.0, 10.0, 2001);
  const double k = 1.7, m = 2.0;
  cplx A(0.6, 0.3);
  auto wave = WaveFunction::sample(g, [&](double x) { return A * std::exp(cplx(0, k * x)); });
  auto j = probability_current(wave, m);
  for (std::size_t i = 1; i + 1 < g.size(); i += 100) CHECK(j[i] == Approx(k * std::norm(A) / m).epsilon(1e-4));
  auto standing = WaveFunction::sample(g, [&](double x) { return std::sin(k * x); });
  for (double v : probability_current(standing, m)) CHECK(v == 0.0);
}

TEST_CASE("interval probabilities") {
  Grid1D g(0.0, 1.0, 2001);
  auto psi = analytic::box_state(1, 1.0, 1.0).sample(g);
  CHECK(position_probability(psi, 0.0, 1.0).probability == Approx(1.0).epsilon(1e-9));
  CHECK(position_probability(psi, 0.0, 0.5).probability == Approx(0.5).epsilon(1e-9));
  double quarter = oracle::simpson([](double x) { return 2 * std::pow(std::sin(pi * x), 2); }, 0.0, 0.25);
  CHECK(position_probability(psi, 0.0, 0.25).probability == Approx(quarter).epsilon(1e-5));
  CHECK(quarter == Approx(0.0908451).epsilon(1e-6));
  auto off = position_probability(psi, 0.123456, 0.654321);
  double expect = oracle::simpson([](double x) { return 2 * std::pow(std::sin(pi * x), 2); }, 0.123456, 0.654321);
  CHECK(off.probability == Approx(expect).epsilon(1e-5));
  auto clipped = position_probability(psi, -1.0, 0.5);
  CHECK(clipped.warnings.size() == 1);
  CHECK(clipped.a == 0.0);
  CHECK_THROWS_AS(position_probability(psi, 0.5, 0.2), DomainError);
}

TEST_CASE("Ehrenfest relation") {
  auto sp = sho_spectrum(3, 1201);
  auto h = assemble_hamiltonian(sp.grid, [](double x) { return 0.5 * x * x; }, 1.0);
  const std::vector<cplx> c = {1 / std::sqrt(2.0), 1 / std::sqrt(2.0)};
  auto id = ehrenfest_check(sp, h, c, GridOperator::identity(), 0.7, 1e-4);
  CHECK(std::abs(id.lhs) < 1e-9);
  CHECK(std::abs(id.rhs) < 1e-12);
  auto en = ehrenfest_check(sp, h, c, GridOperator::hamiltonian(h), 0.7, 1e-4);
  CHECK(std::abs(en.lhs) < 1e-7);
  CHECK(std::abs(en.rhs) < 1e-9);
  auto x = ehrenfest_check(sp, h, c, GridOperator::position(), 0.7, 1e-4);
  CHECK(std::abs(x.rhs) > 0.1);
  CHECK(x.lhs == Approx(x.rhs).epsilon(1e-4));
}

TEST_CASE("parity split") {
  Grid1D g(-3.0, 3.0, 601);
  const double a = 2.3;
  auto psi = WaveFunction::sample(g, [a](double x) { return std::exp(cplx(0, a * x)); });
  auto parts = parity_split(psi);
  auto R = GridOperator::parity();
  auto re = R.apply(parts.even), ro = R.apply(parts.odd);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(std::abs(parts.even[i] - std::cos(a * g.x(i))) < 1e-12);
    CHECK(std::abs(parts.odd[i] - cplx(0, std::sin(a * g.x(i)))) < 1e-12);
    CHECK(std::abs(parts.even[i] + parts.odd[i] - psi[i]) < 1e-15);
    CHECK(std::abs(re[i] - parts.even[i]) < 1e-15);
    CHECK(std::abs(ro[i] + parts.odd[i]) < 1e-15);
  }
  auto gauss = WaveFunction::sample(g, [](double x) { return std::exp(-x * x); });
  for (const auto& v : parity_split(gauss).odd.values()) CHECK(std::abs(v) < 1e-15);
  CHECK_THROWS_AS(parity_split(WaveFunction::zeros(Grid1D(0, 1, 11))), DomainError);
}
