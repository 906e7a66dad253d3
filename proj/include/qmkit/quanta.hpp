#pragma once

#include <string>
#include <vector>

#include "qmkit/units.hpp"

/// Closed-form relations of early quantum theory: photons, matter waves, the
/// photoelectric effect, two-slit fringes, Bohr orbits and Rydberg lines.
namespace qmkit::quanta {

struct PhotonProps {
  double energy;      // h f
  double momentum;    // E / c
  double wavelength;  // c / f
  double omega;       // 2 pi f
  double k;           // 2 pi / lambda
};

/// Throws DomainError for non-positive frequency.
PhotonProps photon_props(double frequency, const UnitSystem& units = UnitSystem::si());

struct MatterWave {
  double momentum;
  double wavelength;
  double k;
};

MatterWave matter_wave(double mass, double speed, const UnitSystem& units = UnitSystem::si());

/// Inverse de Broglie relation p = h / lambda.
double momentum_from_wavelength(double wavelength, const UnitSystem& units = UnitSystem::si());

/// Kinetic energy (eV) of an electron released by a photon of `frequency`
/// from a metal with the given work function (eV). Throws BelowThresholdError,
/// carrying the threshold frequency, when no electron is released.
double photoelectric_kinetic(double frequency, double work_function_ev,
                             const UnitSystem& units = UnitSystem::si());

/// Phi / h.
double photoelectric_threshold(double work_function_ev, const UnitSystem& units = UnitSystem::si());

struct FringePattern {
  std::vector<int> orders;         // -n_max .. n_max
  std::vector<double> positions;   // x_n = n lambda L / d
  double spacing;                  // lambda L / d
  std::vector<std::string> warnings;
};

/// Bright fringes of a two-slit experiment in the small-angle approximation.
/// Warns (does not fail) when x_nmax / L exceeds 0.2.
FringePattern fringe_positions(double wavelength, double screen_distance, double slit_separation, int n_max);

struct BohrOrbit {
  int n;
  double radius;
  double speed;
  double energy;
};

BohrOrbit bohr_orbit(int n, const UnitSystem& units = UnitSystem::si());

/// Principal quantum number that may be infinite (ionization).
class Level {
 public:
  constexpr explicit Level(int n) : n_(n), infinite_(false) {}
  static constexpr Level infinity() { return Level(); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr int n() const { return n_; }
  /// 1 / n^2, zero for the ionization limit.
  double inverse_square() const;

 private:
  constexpr Level() : n_(0), infinite_(true) {}
  int n_;
  bool infinite_;
};

struct RydbergLine {
  double wavelength;        // m; +inf never occurs since n1 < n2
  double photon_energy;     // |E(n2) - E(n1)|
  double inverse_wavelength;
};

/// 1 / lambda = R_H (1/n1^2 - 1/n2^2), R_H = E0 / (h c). Requires 1 <= n1 < n2.
RydbergLine rydberg_wavelength(int n1, Level n2, const UnitSystem& units = UnitSystem::si());

/// c = 1 / sqrt(mu0 epsilon0) from the stored vacuum constants.
double light_speed_check(const UnitSystem& units = UnitSystem::si());

}  // namespace qmkit::quanta
