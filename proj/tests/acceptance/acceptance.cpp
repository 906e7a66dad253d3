// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qmkit/analytic.hpp"
#include "qmkit/bands.hpp"
#include "qmkit/error.hpp"
#include "qmkit/exercises.hpp"
#include "qmkit/fourier.hpp"
#include "qmkit/hamiltonian.hpp"
#include "qmkit/manybody.hpp"
#include "qmkit/observables.hpp"
#include "qmkit/operators.hpp"
#include "qmkit/scattering.hpp"
#include "qmkit/spin.hpp"
#include "qmkit/units.hpp"

using namespace qmkit;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const char* fmt, double value, double tol) {
    char buf[160];
    std::snprintf(buf, sizeof buf, fmt, value, tol);
    if (!detail.empty()) detail += "; ";
    detail += buf;
    if (!ok) pass = false;
  }
  void flag(bool ok, const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? " ok" : " FAILED");
    if (!ok) pass = false;
  }
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome box_spectrum() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  gridops::Grid1D g(0.0, 1.0, 2001);
  auto sp = gridops::solve_eigen(gridops::assemble_hamiltonian(g, std::vector<double>(g.size(), 0.0), 1.0), 5);
  double worst = 0.0;
  for (int n = 1; n <= 5; ++n) worst = std::max(worst, rel(sp.energies[n - 1], n * n * pi * pi / 2));
  const double dt = seconds_since(t0);
  o.require(worst < 1e-3, "max rel err %.2e (tol %.0e)", worst, 1e-3);
  o.require(dt < 5.0, "runtime %.3f s (limit %.0f s)", dt, 5.0);
  return o;
}

Outcome oscillator_spectrum() {
  Outcome o;
  gridops::Grid1D g(-12.0, 12.0, 4001);
  auto sp = gridops::solve_eigen(gridops::assemble_hamiltonian(g, [](double x) { return 0.5 * x * x; }, 1.0), 6,
                                 gridops::BoundaryKind::Truncated);
  double worst = 0.0, overlap = 1.0;
  for (int n = 0; n <= 5; ++n) {
    worst = std::max(worst, rel(sp.energies[n], n + 0.5));
    auto ladder = analytic::sho_wavefunction(n, 1.0, 1.0).sample(g);
    overlap = std::min(overlap, std::abs(gridops::inner_product(ladder, sp.states[n])));
  }
  o.require(worst < 1e-3, "max rel err %.2e (tol %.0e)", worst, 1e-3);
  o.require(overlap >= 0.9999, "min overlap %.8f (floor %.4f)", overlap, 0.9999);
  return o;
}

Outcome hydrogen() {
  Outcome o;
  const auto c = UnitSystem::si().constants();
  auto s1 = analytic::hydrogen_state(1, 0, 0);
  o.require(rel(-s1.energy() / c.eV, 13.6) < 2e-3, "E0 rel dev %.2e (tol %.0e)", rel(-s1.energy() / c.eV, 13.6), 2e-3);
  o.require(rel(s1.length_scale(), 0.529e-10) < 2e-3, "Bohr radius rel dev %.2e (tol %.0e)",
            rel(s1.length_scale(), 0.529e-10), 2e-3);
  auto nat = UnitSystem::natural();
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l < n; ++l) {
      auto st = analytic::hydrogen_state(n, l, 0, nat);
      auto u = [&](double x) { return x * st.radial(x); };
      const double h = 1e-3;
      double err = 0.0, scale = 0.0;
      for (double r = 0.2; r < 30.0; r += 0.173) {
        double upp = (u(r + h) - 2 * u(r) + u(r - h)) / (h * h);
        double lhs = -0.5 * upp + (-1.0 / r + l * (l + 1) / (2 * r * r)) * u(r);
        err = std::max(err, std::abs(lhs - st.energy() * u(r)));
        scale = std::max(scale, std::abs(st.energy() * u(r)));
      }
      worst = std::max(worst, err / scale);
    }
  o.require(worst < 1e-4, "radial residual %.2e over n <= 3 (tol %.0e)", worst, 1e-4);
  return o;
}

Outcome gaussian_pair() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  double worst_width = 0.0, worst_product = 0.0;
  for (double sigma : {0.5, 1.0, 2.0}) {
    gridops::Grid1D g(-25.0, 25.0, 2048);
    auto psi = fourier::gaussian_packet(g, sigma);
    auto phi = fourier::fourier_transform(psi);
    const double sp = std::sqrt(phi.variance());
    const double sx = gridops::uncertainty(gridops::GridOperator::position(), psi).delta;
    worst_width = std::max(worst_width, rel(sp, 1 / (2 * sigma)));
    worst_product = std::max(worst_product, rel(sx * sp, 0.5));
  }
  const double dt = seconds_since(t0);
  o.require(worst_width < 0.01, "momentum width rel dev %.2e (tol %.0e)", worst_width, 0.01);
  o.require(worst_product < 0.01, "dX dP rel dev %.2e (tol %.0e)", worst_product, 0.01);
  o.require(dt < 10.0, "runtime %.3f s (limit %.0f s)", dt, 10.0);
  return o;
}

Outcome uncertainty_floor() {
  Outcome o;
  std::mt19937 rng(20240);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  gridops::Grid1D g(-10.0, 10.0, 2001);
  auto X = gridops::GridOperator::position();
  double smallest = 1e300;
  for (int trial = 0; trial < 100; ++trial) {
    const double x0 = 2 * u(rng), p0 = 3 * u(rng), s = 0.7 + 0.4 * (u(rng) + 1), c = u(rng);
    auto psi = gridops::WaveFunction::sample(g, [=](double x) {
      return std::exp(-(x - x0) * (x - x0) / (4 * s * s)) * (1.0 + c * x) * std::exp(gridops::cplx(0, p0 * x));
    });
    const double dp = std::sqrt(fourier::fourier_transform(psi).variance());
    smallest = std::min(smallest, gridops::uncertainty(X, psi).delta * dp);
  }
  o.require(smallest >= 0.5 - 1e-9, "min dX dP (momentum-space dP) over 100 packets %.10f (floor %.10f)", smallest, 0.5 - 1e-9);
  return o;
}

Outcome scattering_checks() {
  Outcome o;
  double worst = 0.0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const double E = 0.1 + 0.5 * i, V = 0.45 * j + 0.05;
      auto b = scattering::barrier_transmission(E, V, 0.7, 1.0);
      worst = std::max(worst, std::abs(b.R + b.T - 1.0));
    }
  o.require(worst < 1e-10, "max |R + T - 1| %.2e over 100 points (tol %.0e)", worst, 1e-10);

  const auto c = UnitSystem::si().constants();
  auto ex = scattering::barrier_transmission(6 * c.eV, 8 * c.eV, 0.5e-10, c.m_e, c.hbar);
  auto oracle_T = oracle::barrier_matching(6 * c.eV, 8 * c.eV, 0.5e-10, c.m_e, c.hbar).T;
  o.require(rel(ex.T, oracle_T) < 5e-3, "barrier T rel dev %.2e vs matching solve (tol %.0e)", rel(ex.T, oracle_T), 5e-3);

  auto step = scattering::step_scatter(2000 * c.eV, 10 * c.eV, c.m_p, c.hbar);
  const double r = std::sqrt(0.995), oracle_R = std::pow((1 - r) / (1 + r), 2);
  o.require(rel(step.R, oracle_R) < 0.01, "proton step R rel dev %.2e (tol %.0e)", rel(step.R, oracle_R), 0.01);
  return o;
}

Outcome transfer_matrix() {
  Outcome o;
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  auto track = [&](double a, double b) { worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), std::abs(b))); };
  for (int i = 0; i < 200; ++i) {
    const double E = 0.05 + 4 * u(rng), V = 4 * u(rng) - 0.5, a = 0.1 + u(rng);
    auto b = scattering::barrier_transmission(E, V, a, 1.0);
    auto tb = scattering::transfer_matrix_scatter(scattering::PiecewisePotential::barrier(V, a), E, 1.0);
    track(b.T, tb.T);
    track(b.R, tb.R);
    if (E > V) {
      auto s = scattering::step_scatter(E, V, 1.0);
      auto ts = scattering::transfer_matrix_scatter(scattering::PiecewisePotential::step(V), E, 1.0);
      track(s.T, ts.T);
      track(s.R, ts.R);
    }
  }
  o.require(worst < 1e-10, "max rel diff %.2e over 200 draws (tol %.0e)", worst, 1e-10);
  return o;
}

Outcome spin_algebra() {
  Outcome o;
  const spin::cplx I(0.0, 1.0);
  auto Sx = spin::spin_operator(spin::Axis::X), Sy = spin::spin_operator(spin::Axis::Y),
       Sz = spin::spin_operator(spin::Axis::Z);
  const double comm = (spin::matrix_commutator(Sx, Sy) - I * Sz).cwiseAbs().maxCoeff();
  const double s2 = (Sx * Sx + Sy * Sy + Sz * Sz - 0.75 * Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  auto L = spin::l1_matrices();
  const double l2x = spin::matrix_commutator(L.L2, L.Lx).cwiseAbs().maxCoeff();
  o.require(comm < 1e-12, "[Sx,Sy] - i Sz %.1e (tol %.0e)", comm, 1e-12);
  o.require(s2 < 1e-12, "S^2 - 3/4 %.1e (tol %.0e)", s2, 1e-12);
  o.require(l2x < 1e-12, "[L^2,Lx] %.1e (tol %.0e)", l2x, 1e-12);
  auto e = spin::hermitian_eigen(L.Lx);
  const double ev = std::max({std::abs(e.values(0) + 1), std::abs(e.values(1)), std::abs(e.values(2) - 1)});
  o.require(ev < 1e-12, "Lx eigenvalue dev %.1e (tol %.0e)", ev, 1e-12);
  Eigen::VectorXcd v(3);
  v << 1, -std::sqrt(2.0), 1;
  o.flag(spin::same_physical_state(e.vectors.col(0), v, 1e-12), "eigenvector (1,-sqrt2,1)");
  return o;
}

Outcome larmor() {
  Outcome o;
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    spin::Direction d{std::acos(1 - 2 * u(rng)), 2 * pi * u(rng)};
    const double g = 4 * u(rng) - 2, b = 3 * u(rng), t = 10 * u(rng), hbar = 0.5 + u(rng);
    auto q = spin::larmor_quantum(d, g, b, t, hbar);
    worst = std::max(worst, (q.expectation - spin::larmor_classical(0.5 * hbar * d.unit(), g, b, t)).norm());
  }
  o.require(worst < 1e-10, "max |<S>q - S_classical| %.2e (tol %.0e)", worst, 1e-10);
  const auto c = UnitSystem::si().constants();
  const double f = spin::zeeman_splitting(0.15, 1.76e11, c.hbar).frequency;
  const double oracle_f = 1.76e11 * 0.15 / (2 * pi);  // gamma B hbar / h
  o.require(rel(f, oracle_f) < 0.01, "Zeeman frequency rel dev %.2e (tol %.0e)", rel(f, oracle_f), 0.01);
  o.require(rel(f, 4.2e9) < 0.01, "vs 4.2 GHz %.2e (tol %.0e)", rel(f, 4.2e9), 0.01);
  return o;
}

Outcome many_body() {
  Outcome o;
  namespace mb = manybody;
  auto zero = mb::antisymmetrize({"a", "b", "a"});
  o.flag(zero.is_zero() && zero.terms().empty(), "duplicate labels give the zero state");

  bool exchange_ok = true;
  for (std::size_t n = 2; n <= 4; ++n) {
    mb::Configuration labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    auto anti = mb::antisymmetrize(labels);
    auto sym = mb::symmetrize(labels);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        exchange_ok = exchange_ok && mb::exchange_eigenvalue(anti, i, j) == -1 && mb::exchange_eigenvalue(sym, i, j) == 1;
  }
  o.flag(exchange_ok, "exchange eigenvalues N <= 4");

  double ph = 0.0;
  for (double d : {0.0, 1e-3, 0.01, 0.05, 0.2}) {
    mb::OccupationModel fd{mb::Statistics::FermiDirac, 300.0, 0.5};
    ph = std::max(ph, std::abs(mb::occupation(0.5 + d, fd) + mb::occupation(0.5 - d, fd) - 1.0));
  }
  o.require(ph < 1e-15, "particle-hole |n+ + n- - 1| %.1e (tol %.0e)", ph, 1e-15);

  double sun = 0.0;
  for (const auto& e : exercises::catalogue())
    if (e.id == "sun-excitation-ratio") sun = e.compute();
  const double sun_ref = exercises::reference_value("sun-excitation-ratio");
  o.require(rel(sun, sun_ref) < 0.02, "sun ratio rel dev %.2e vs oracle (tol %.0e)", rel(sun, sun_ref), 0.02);
  return o;
}

Outcome kronig_penney() {
  Outcome o;
  const bands::KPParams p{1.0, 0.3, 10.0};
  auto bs = bands::kp_bands(p, 60.0);
  o.require(bs.bands.size() >= 2, "%.0f bands (need >= %.0f)", static_cast<double>(bs.bands.size()), 2);
  o.require(bs.gaps.size() >= 1, "%.0f gaps (need >= %.0f)", static_cast<double>(bs.gaps.size()), 1);
  o.require(bs.max_edge_residual < 1e-8, "edge residual %.1e (tol %.0e)", bs.max_edge_residual, 1e-8);

  double prev = 1e300;
  bool monotone = true;
  for (double V : {1.0, 0.1, 0.01}) {
    auto s = bands::kp_bands({1.0, 0.3, V}, 20.0);
    double widest = 0.0;
    for (const auto& g : s.gaps) widest = std::max(widest, g.width());
    monotone = monotone && widest < prev;
    prev = widest;
  }
  o.flag(monotone, "gaps shrink along V = 1, 0.1, 0.01");
  const bands::KPParams free{1.0, 0.3, 0.0};
  double cos_dev = 0.0;
  for (double E = 0.05; E < 60.0; E += 0.37)
    cos_dev = std::max(cos_dev, std::abs(bands::kp_dispersion(E, free) - std::cos(std::sqrt(2 * E) * free.period())));
  auto fb = bands::kp_bands(free, 60.0);
  o.flag(fb.gaps.empty() && fb.bands.size() == 1, "V = 0 has no gaps");
  o.require(cos_dev < 1e-12, "V = 0 vs cos(kc) %.1e (tol %.0e)", cos_dev, 1e-12);

  const double eps = 1e-6 * p.V;
  const double jump = std::abs(bands::kp_dispersion(p.V - eps, p) - bands::kp_dispersion(p.V + eps, p));
  o.require(jump < 1e-3, "branch jump at E = V %.1e (tol %.0e)", jump, 1e-3);
  return o;
}

Outcome exercise_harness() {
  Outcome o;
  auto report = exercises::run();
  std::string failed;
  for (const auto& r : report.results)
    if (!r.passed) failed += " " + r.id;
  o.require(report.all_passed(), "%.0f entries, all within tolerance (%.0f failures)",
            static_cast<double>(report.results.size()), static_cast<double>(report.failures()));
  if (!failed.empty()) o.detail += " [" + failed + " ]";
  o.require(report.seconds < 60.0, "runtime %.3f s (limit %.0f s)", report.seconds, 60.0);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"box spectrum", box_spectrum},
      {"oscillator spectrum", oscillator_spectrum},
      {"hydrogen", hydrogen},
      {"Gaussian Fourier pair", gaussian_pair},
      {"uncertainty floor", uncertainty_floor},
      {"scattering", scattering_checks},
      {"transfer-matrix equivalence", transfer_matrix},
      {"spin algebra", spin_algebra},
      {"Larmor and Zeeman", larmor},
      {"many-body", many_body},
      {"Kronig-Penney", kronig_penney},
      {"exercise harness", exercise_harness},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %2zu %-28s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                seconds_since(t0));
    if (!o.pass) ++failures;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
