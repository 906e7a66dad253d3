#include "qmkit/quanta.hpp"

#include <cmath>
#include <numbers>

#include "qmkit/error.hpp"

namespace qmkit::quanta {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive");
}
}  // namespace

PhotonProps photon_props(double frequency, const UnitSystem& units) {
  require_positive(frequency, "frequency");
  const auto& c = units.constants();
  PhotonProps p{};
  p.energy = c.h * frequency;
  p.momentum = p.energy / c.c;
  p.wavelength = c.c / frequency;
  p.omega = kTwoPi * frequency;
  p.k = kTwoPi / p.wavelength;
  return p;
}

MatterWave matter_wave(double mass, double speed, const UnitSystem& units) {
  require_positive(mass, "mass");
  require_positive(speed, "speed");
  MatterWave w{};
  w.momentum = mass * speed;
  w.wavelength = units.constants().h / w.momentum;
  w.k = kTwoPi / w.wavelength;
  return w;
}

double momentum_from_wavelength(double wavelength, const UnitSystem& units) {
  require_positive(wavelength, "wavelength");
  return units.constants().h / wavelength;
}

double photoelectric_threshold(double work_function_ev, const UnitSystem& units) {
  require_positive(work_function_ev, "work function");
  return work_function_ev / units.constants().h_ev();
}

double photoelectric_kinetic(double frequency, double work_function_ev, const UnitSystem& units) {
  require_positive(frequency, "frequency");
  require_positive(work_function_ev, "work function");
  const double photon_ev = units.constants().h_ev() * frequency;
  const double kinetic = photon_ev - work_function_ev;
  // exact threshold is a boundary case, not an error
  if (kinetic < -1e-12 * work_function_ev) {
    throw BelowThresholdError("photon energy below the work function: no electrons are released",
                              photoelectric_threshold(work_function_ev, units));
  }
  return kinetic > 0.0 ? kinetic : 0.0;
}

FringePattern fringe_positions(double wavelength, double screen_distance, double slit_separation, int n_max) {
  require_positive(wavelength, "wavelength");
  require_positive(screen_distance, "screen distance");
  require_positive(slit_separation, "slit separation");
  if (n_max < 0) throw DomainError("n_max must be non-negative");

  FringePattern out;
  out.spacing = wavelength * screen_distance / slit_separation;
  for (int n = -n_max; n <= n_max; ++n) {
    out.orders.push_back(n);
    out.positions.push_back(n * out.spacing);
  }
  if (n_max * out.spacing / screen_distance > 0.2) {
    out.warnings.emplace_back("x_nmax / L > 0.2: small-angle approximation is poor for the outer fringes");
  }
  return out;
}

BohrOrbit bohr_orbit(int n, const UnitSystem& units) {
  if (n < 1) throw DomainError("Bohr orbit needs n >= 1");
  const auto& c = units.constants();
  const double ke2 = c.k_coulomb * c.q_e * c.q_e;
  BohrOrbit o{};
  o.n = n;
  // r m v = n hbar together with m v^2 / r = k e^2 / r^2
  o.speed = ke2 / (n * c.hbar);
  o.radius = static_cast<double>(n) * n * c.bohr_radius();
  o.energy = -c.rydberg_energy() / (static_cast<double>(n) * n);
  return o;
}

double Level::inverse_square() const {
  if (infinite_) return 0.0;
  return 1.0 / (static_cast<double>(n_) * n_);
}

RydbergLine rydberg_wavelength(int n1, Level n2, const UnitSystem& units) {
  if (n1 < 1) throw DomainError("Rydberg formula needs n1 >= 1");
  if (!n2.is_infinite() && n2.n() <= n1) throw DomainError("Rydberg formula needs n1 < n2");
  const auto& c = units.constants();
  const double e0 = c.rydberg_energy();
  const double r_h = e0 / (c.h * c.c);
  RydbergLine line{};
  const double factor = 1.0 / (static_cast<double>(n1) * n1) - n2.inverse_square();
  line.inverse_wavelength = r_h * factor;
  line.wavelength = 1.0 / line.inverse_wavelength;
  line.photon_energy = e0 * factor;
  return line;
}

double light_speed_check(const UnitSystem& units) {
  const auto& c = units.constants();
  return 1.0 / std::sqrt(c.mu0 * c.epsilon0);
}

}  // namespace qmkit::quanta
