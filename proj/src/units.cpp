#include "qmkit/units.hpp"

#include <cmath>
#include <numbers>

#include "qmkit/error.hpp"

namespace qmkit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double* field(PhysicalConstants& c, std::string_view name) {
  if (name == "h") return &c.h;
  if (name == "hbar") return &c.hbar;
  if (name == "m_e") return &c.m_e;
  if (name == "m_p") return &c.m_p;
  if (name == "m_n") return &c.m_n;
  if (name == "q_e") return &c.q_e;
  if (name == "k_coulomb") return &c.k_coulomb;
  if (name == "k_boltzmann") return &c.k_boltzmann;
  if (name == "k_boltzmann_ev") return &c.k_boltzmann_ev;
  if (name == "c") return &c.c;
  if (name == "eV") return &c.eV;
  if (name == "epsilon0") return &c.epsilon0;
  if (name == "mu0") return &c.mu0;
  return nullptr;
}

}  // namespace

PhysicalConstants PhysicalConstants::codata() {
  PhysicalConstants c{};
  c.h = 6.62607015e-34;
  c.hbar = c.h / kTwoPi;
  c.m_e = 9.1093837015e-31;
  c.m_p = 1.67262192369e-27;
  c.m_n = 1.67492749804e-27;
  c.q_e = 1.602176634e-19;
  c.epsilon0 = 8.8541878128e-12;
  c.mu0 = 1.25663706212e-6;
  c.k_coulomb = 1.0 / (2.0 * kTwoPi * c.epsilon0);
  c.k_boltzmann = 1.380649e-23;
  c.eV = c.q_e;  // 1 eV = q_e * 1 V
  c.k_boltzmann_ev = c.k_boltzmann / c.eV;
  c.c = 299792458.0;
  return c;
}

PhysicalConstants PhysicalConstants::atomic() {
  PhysicalConstants c{};
  c.hbar = 1.0;
  c.h = kTwoPi;
  c.m_e = 1.0;
  c.m_p = 1836.15267343;
  c.m_n = 1838.68366173;
  c.q_e = 1.0;
  c.k_coulomb = 1.0;
  c.k_boltzmann = 1.0;
  c.k_boltzmann_ev = 1.0;
  c.eV = 1.0;
  c.c = 137.035999084;
  c.epsilon0 = 1.0 / (2.0 * kTwoPi);
  c.mu0 = 1.0 / (c.c * c.c * c.epsilon0);
  return c;
}

double PhysicalConstants::bohr_radius() const { return hbar * hbar / (m_e * k_coulomb * q_e * q_e); }

double PhysicalConstants::rydberg_energy() const {
  const double ke2 = k_coulomb * q_e * q_e;
  return m_e * ke2 * ke2 / (2.0 * hbar * hbar);
}

double PhysicalConstants::h_ev() const { return h / eV; }

UnitSystem UnitSystem::si() { return UnitSystem(UnitMode::SI, PhysicalConstants::codata()); }

UnitSystem UnitSystem::natural() { return UnitSystem(UnitMode::Natural, PhysicalConstants::atomic()); }

UnitSystem UnitSystem::with_override(std::string_view name, double value) const {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError("constant override for '" + std::string(name) + "' must be positive and finite");
  }
  UnitSystem copy = *this;
  double* slot = field(copy.constants_, name);
  if (slot == nullptr) throw DomainError("unknown constant '" + std::string(name) + "'");
  *slot = value;
  if (name == "h") copy.constants_.hbar = value / kTwoPi;
  if (name == "hbar") copy.constants_.h = value * kTwoPi;
  copy.overridden_.emplace_back(name);
  return copy;
}

const std::vector<std::string>& UnitSystem::constant_names() {
  static const std::vector<std::string> names{"h",  "hbar",        "m_e",            "m_p", "m_n",
                                              "q_e", "k_coulomb",  "k_boltzmann",    "k_boltzmann_ev",
                                              "c",   "eV",         "epsilon0",       "mu0"};
  return names;
}

double UnitSystem::get(std::string_view name) const {
  PhysicalConstants copy = constants_;
  const double* slot = field(copy, name);
  if (slot == nullptr) throw DomainError("unknown constant '" + std::string(name) + "'");
  return *slot;
}

}  // namespace qmkit
