#include "qmkit/exercises.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <numbers>

#include "qmkit/analytic.hpp"
#include "qmkit/bands.hpp"
#include "qmkit/error.hpp"
#include "qmkit/fourier.hpp"
#include "qmkit/hamiltonian.hpp"
#include "qmkit/manybody.hpp"
#include "qmkit/observables.hpp"
#include "qmkit/operators.hpp"
#include "qmkit/quanta.hpp"
#include "qmkit/scattering.hpp"
#include "qmkit/spin.hpp"

namespace qmkit::exercises {

namespace {

using std::numbers::pi;
using gridops::Grid1D;
using gridops::GridOperator;
using gridops::WaveFunction;

const std::map<std::string, double>& references() {
  static const std::map<std::string, double> table = {
#include "exercise_oracles.inc"
  };
  return table;
}

const PhysicalConstants& si() {
  static const PhysicalConstants c = UnitSystem::si().constants();
  return c;
}

double hydrogen_ev(int n) { return analytic::hydrogen_state(n, 0, 0).energy() / si().eV; }

std::vector<Exercise> build() {
  const double eV = si().eV;
  const double hbar = si().hbar;
  std::vector<Exercise> list;
  auto add = [&](std::string id, int chapter, std::string description, double tol, std::function<double()> f) {
    list.push_back({std::move(id), chapter, std::move(description), tol, std::move(f)});
  };

  add("photon-energy", 1, "red photon, f = 450 THz: E (J)", 1e-12,
      [] { return quanta::photon_props(450e12).energy; });
  add("photon-wavelength", 1, "red photon: wavelength (m)", 1e-12,
      [] { return quanta::photon_props(450e12).wavelength; });
  add("photon-momentum", 1, "red photon: momentum (kg m/s)", 1e-12,
      [] { return quanta::photon_props(450e12).momentum; });
  add("photon-count", 1, "red photons carrying 1 kg m/s in total", 1e-12,
      [] { return 1.0 / quanta::photon_props(450e12).momentum; });
  add("electron-wavelength", 1, "electron at 0.727 m/s: wavelength (m)", 1e-12,
      [] { return quanta::matter_wave(si().m_e, 0.727).wavelength; });
  add("fringe-spacing", 1, "two slits, lambda = 1 mm, L = 1 m, d = 1 cm: spacing (m)", 1e-12,
      [] { return quanta::fringe_positions(1e-3, 1.0, 0.01, 2).spacing; });
  add("fringe-spacing-visible", 1, "two slits, lambda = 500 nm, L = 2 m, d = 0.1 mm: spacing (m)", 1e-12,
      [] { return quanta::fringe_positions(500e-9, 2.0, 1e-4, 2).spacing; });
  add("proton-wavelength", 1, "proton at 1000 m/s: wavelength (m)", 1e-12,
      [] { return quanta::matter_wave(si().m_p, 1000.0).wavelength; });
  add("photoelectric-kinetic", 1, "silver, 4.6 eV, f = 2e15 Hz: kinetic energy (eV)", 1e-12,
      [] { return quanta::photoelectric_kinetic(2e15, 4.6); });
  add("photoelectric-threshold", 1, "silver threshold frequency (Hz)", 1e-12,
      [] { return quanta::photoelectric_threshold(4.6); });
  add("light-speed", 1, "c from mu0 and epsilon0 (m/s)", 1e-3, [] { return quanta::light_speed_check(); });

  add("box-ground-numeric", 2, "finite-difference box [0,1], 2001 points: E1", 1e-3, [] {
    Grid1D grid(0.0, 1.0, 2001);
    auto h = gridops::assemble_hamiltonian(grid, std::vector<double>(grid.size(), 0.0), 1.0);
    return gridops::solve_eigen(h, 1).energies[0];
  });
  add("box-electron-e2", 2, "electron in a 10 nm box: E2 (eV)", 1e-12,
      [=] { return analytic::box_state(2, 1e-8, si().m_e, hbar).energy / eV; });
  add("box-neutron-e3-e1", 2, "neutron in a 1 fm box: E3 - E1 (eV)", 1e-12, [=] {
    return (analytic::box_state(3, 1e-15, si().m_n, hbar).energy - analytic::box_state(1, 1e-15, si().m_n, hbar).energy) /
           eV;
  });

  add("box-mean-position", 5, "box ground state, L = 1: <X>", 1e-9, [] {
    Grid1D grid(0.0, 1.0, 2001);
    auto psi = analytic::box_state(1, 1.0, 1.0).sample(grid);
    return gridops::expectation(GridOperator::position(), psi).real();
  });
  add("box-quarter-probability", 5, "box ground state: P(0 < x < L/4)", 1e-5, [] {
    Grid1D grid(0.0, 1.0, 2001);
    auto psi = analytic::box_state(1, 1.0, 1.0).sample(grid);
    return gridops::position_probability(psi, 0.0, 0.25).probability;
  });
  add("uniform-x2", 8, "uniform state on [-1/2, 1/2]: <X^2>", 1e-5, [] {
    Grid1D grid(-0.5, 0.5, 1001);
    WaveFunction psi(grid, std::vector<double>(grid.size(), 1.0));
    auto u = gridops::uncertainty(GridOperator::position(), psi);
    return u.variance + u.mean * u.mean;
  });

  add("hydrogen-binding", 6, "hydrogen binding energy E0 (eV)", 1e-10, [] { return -hydrogen_ev(1); });
  add("bohr-radius", 6, "Bohr radius (m)", 1e-10, [] { return quanta::bohr_orbit(1).radius; });
  add("rydberg-3-4", 6, "hydrogen line n = 4 -> 3: wavelength (m)", 1e-10,
      [] { return quanta::rydberg_wavelength(3, quanta::Level(4)).wavelength; });
  add("ionization", 6, "ionization from n = 1 (eV)", 1e-10,
      [=] { return quanta::rydberg_wavelength(1, quanta::Level::infinity()).photon_energy / eV; });
  add("helium-ion-ground", 6, "He+ ground level (eV)", 1e-10,
      [=] { return analytic::hydrogen_state(1, 0, 0, UnitSystem::si(), 2.0).energy() / eV; });
  add("box3d-ground", 6, "electron in a 1 nm cube: ground level (eV)", 1e-12,
      [=] { return analytic::box3d_energy(1, 1, 1, 1e-9, si().m_e, hbar) / eV; });
  add("muonic-binding", 6, "muonic atom (200 electron masses): binding energy (eV)", 1e-10,
      [=] { return analytic::mass_scaled_atom(200.0).binding_energy / eV; });
  add("muonic-radius", 6, "muonic atom: orbit radius (m)", 1e-10,
      [] { return analytic::mass_scaled_atom(200.0).radius; });
  add("hydrogen-degeneracy-3", 6, "hydrogen n = 3 degeneracy", 0.0,
      [] { return static_cast<double>(analytic::hydrogen_degeneracy(3)); });

  add("square-wave-b1", 7, "square wave: first sine coefficient", 1e-6, [] {
    auto square = [](double x) { return (x == 0.0 || std::abs(x) == pi) ? 0.0 : (x > 0.0 ? 1.0 : -1.0); };
    return fourier::fourier_series(square, 8, 4096).b[0];
  });
  add("box-momentum-zero", 7, "box ground state in momentum space at p = 0", 1e-10,
      [] { return std::abs(fourier::box_momentum_rep(1, 1.0, 0.0)); });
  add("delta-sifting", 7, "integral of cos(x) against the width-1/16 rectangle", 1e-6, [] {
    Grid1D grid(-1.0, 1.0, 3201);
    auto chi = fourier::delta_approximant(16, grid);
    auto c = WaveFunction::sample(grid, [](double x) { return std::cos(x); });
    return gridops::inner_product(c, chi).real();
  });

  add("gaussian-momentum-spread", 8, "Gaussian, sigma = 1: Delta P from the transform", 1e-3, [] {
    Grid1D grid(-20.0, 20.0, 2048);
    auto phi = fourier::fourier_transform(fourier::gaussian_packet(grid, 1.0));
    return std::sqrt(phi.variance());
  });
  add("sho-first-excited-product", 8, "oscillator n = 1: Delta X Delta P / hbar", 1e-12,
      [] { return analytic::sho_uncertainties(1, 1.0, 1.0).product; });

  add("evanescent-decay", 9, "electron, E = 6 eV under V = 8 eV: decay constant (1/m)", 1e-12,
      [=] { return scattering::wavenumbers(6 * eV, 8 * eV, si().m_e, hbar).value; });
  add("step-transmission", 9, "step, E = 2, V = 1: T", 1e-12, [] { return scattering::step_scatter(2.0, 1.0, 1.0).T; });
  add("proton-step-reflection", 9, "proton, 2000 eV onto a 10 V step: R", 1e-8,
      [=] { return scattering::step_scatter(2000 * eV, 10 * eV, si().m_p, hbar).R; });
  add("barrier-transmission", 9, "electron, E = 6 eV, V = 8 eV, width 1e-10 m: T", 1e-10,
      [=] { return scattering::barrier_transmission(6 * eV, 8 * eV, 0.5e-10, si().m_e, hbar).T; });
  add("teacup-log10", 9, "same barrier 1 cm wide: log10 T", 1e-12,
      [=] { return scattering::barrier_transmission(6 * eV, 8 * eV, 0.005, si().m_e, hbar).log10_T; });
  add("wide-barrier-mu-a-3", 9, "thick-barrier estimate, mu a = 3, E/V = 1/2: T", 1e-12,
      [] { return scattering::barrier_transmission_wide(0.5, 1.0, 3.0, 1.0).T; });
  add("finite-well-shallow", 9, "finite well V = 50, L = 1: ground level above the bottom", 1e-9,
      [] { return scattering::finite_well_bound_states(50.0, 1.0, 1.0).front().energy + 50.0; });
  add("finite-well-deep", 9, "finite well V = 2e4: ground level above the bottom vs box value", 0.02,
      [] { return scattering::finite_well_bound_states(2e4, 1.0, 1.0).front().energy + 2e4; });

  add("zeeman-splitting", 10, "electron spin, B = 0.15 T: splitting (J)", 1e-12,
      [=] { return spin::zeeman_splitting(0.15, 1.76e11, hbar).delta_E; });
  add("zeeman-frequency", 10, "electron spin, B = 0.15 T: photon frequency (Hz)", 1e-12,
      [=] { return spin::zeeman_splitting(0.15, 1.76e11, hbar).frequency; });

  add("fermi-energy", 11, "electron gas, 1e27 per m^3: Fermi energy (eV)", 1e-12,
      [=] { return manybody::fermi_energy(1e27, 1.0, si().m_e, hbar) / eV; });
  add("two-oscillator-energy", 11, "two fermions in oscillator levels 0 and 1: energy / hbar omega", 1e-12,
      [] { return manybody::two_oscillator_eigen(0, 1, 1.0).energy; });

  add("fd-mb-deviation", 12, "Fermi-Dirac vs Maxwell-Boltzmann at (E - mu)/kT = 5", 1e-10, [] {
    manybody::OccupationModel fd{manybody::Statistics::FermiDirac, 1.0, 0.0, 1.0};
    manybody::OccupationModel mb{manybody::Statistics::MaxwellBoltzmann, 1.0, 0.0, 1.0};
    double n_mb = manybody::occupation(5.0, mb);
    return std::abs(manybody::occupation(5.0, fd) - n_mb) / n_mb;
  });
  add("sun-excitation-ratio", 12, "hydrogen n = 2 vs n = 1 population at 5800 K", 0.02,
      [] { return manybody::boltzmann_ratio(hydrogen_ev(2), hydrogen_ev(1), 5800.0); });
  add("kp-first-band-bottom", 12, "Kronig-Penney a = 1, b = 0.3, V = 10: first band bottom", 1e-8,
      [] { return bands::kp_bands({1.0, 0.3, 10.0}, 60.0).bands.at(0).lo; });
  add("kp-first-band-top", 12, "Kronig-Penney a = 1, b = 0.3, V = 10: first band top", 1e-8,
      [] { return bands::kp_bands({1.0, 0.3, 10.0}, 60.0).bands.at(0).hi; });
  return list;
}

}  // namespace

bool ExerciseReport::all_passed() const { return failures() == 0; }

std::size_t ExerciseReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.passed ? 0 : 1;
  return n;
}

const std::vector<Exercise>& catalogue() {
  static const std::vector<Exercise> list = build();
  return list;
}

double reference_value(const std::string& id) {
  auto it = references().find(id);
  if (it == references().end()) throw DomainError("no reference value for exercise '" + id + "'");
  return it->second;
}

ExerciseReport run(std::optional<int> chapter) {
  ExerciseReport report;
  auto start = std::chrono::steady_clock::now();
  for (const auto& ex : catalogue()) {
    if (chapter && ex.chapter != *chapter) continue;
    ExerciseResult r{ex.id, ex.chapter, ex.description, NAN, reference_value(ex.id), NAN, ex.tolerance, false, {}};
    try {
      r.value = ex.compute();
      double diff = std::abs(r.value - r.reference);
      r.deviation = r.reference == 0.0 ? diff : diff / std::abs(r.reference);
      r.passed = r.deviation <= ex.tolerance;
    } catch (const Error& e) {
      r.error = e.what();
    }
    report.results.push_back(std::move(r));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qmkit::exercises
