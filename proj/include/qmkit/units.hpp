#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qmkit {

/// Physical constants in a consistent unit system. `hbar` is always kept equal
/// to `h / 2pi`; the remaining fields are independent.
struct PhysicalConstants {
  double h;                  // J s
  double hbar;               // J s
  double m_e;                // kg
  double m_p;                // kg
  double m_n;                // kg
  double q_e;                // C
  double k_coulomb;          // N m^2 / C^2
  double k_boltzmann;        // J / K
  double k_boltzmann_ev;     // eV / K
  double c;                  // m / s
  double eV;                 // J per eV
  double epsilon0;           // F / m
  double mu0;                // N / A^2

  /// CODATA 2018 values.
  static PhysicalConstants codata();
  /// Atomic units: hbar = m_e = e = k_coulomb = k_B = 1.
  static PhysicalConstants atomic();

  /// a = hbar^2 / (m_e k e^2)
  double bohr_radius() const;
  /// E0 = m_e k^2 e^4 / (2 hbar^2), the hydrogen binding energy.
  double rydberg_energy() const;
  /// Planck constant expressed in eV s.
  double h_ev() const;
};

enum class UnitMode { SI, Natural };

/// Immutable selection of constants. Every formula in the library reads its
/// constants from here, so the same code serves SI and natural-unit runs.
class UnitSystem {
 public:
  static UnitSystem si();
  static UnitSystem natural();

  /// Returns a copy with one named constant replaced. Overriding `h` also
  /// updates `hbar` and vice versa. Throws DomainError on an unknown name or a
  /// non-positive value.
  UnitSystem with_override(std::string_view name, double value) const;

  UnitMode mode() const noexcept { return mode_; }
  const PhysicalConstants& constants() const noexcept { return constants_; }
  double hbar() const noexcept { return constants_.hbar; }
  /// Energy of one eV in this system's energy unit.
  double ev() const noexcept { return constants_.eV; }
  const std::vector<std::string>& overridden() const noexcept { return overridden_; }

  /// Names accepted by with_override, in dump order.
  static const std::vector<std::string>& constant_names();
  /// Value by name (same names as with_override).
  double get(std::string_view name) const;

 private:
  UnitSystem(UnitMode mode, PhysicalConstants c) : mode_(mode), constants_(c) {}

  UnitMode mode_;
  PhysicalConstants constants_;
  std::vector<std::string> overridden_;
};

}  // namespace qmkit
