#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qmkit/grid.hpp"
#include "qmkit/units.hpp"

/// Closed-form solutions: particle in a box, harmonic oscillator, hydrogen.
namespace qmkit::analytic {

using cplx = std::complex<double>;

struct BoxState {
  int n;
  double L;
  double mass;
  double hbar;
  double energy;

  /// sqrt(2/L) sin(n pi x / L) on [0, L], zero outside.
  double operator()(double x) const;
  gridops::WaveFunction sample(const gridops::Grid1D& grid) const;
};

/// E_n = n^2 hbar^2 pi^2 / (2 m L^2). Throws DomainError for n < 1 or L, mass <= 0.
BoxState box_state(int n, double L, double mass, double hbar = 1.0);

/// (hbar^2 pi^2 / 2 m L^2)(n1^2 + n2^2 + n3^2) for a cubic box of side L.
double box3d_energy(int n1, int n2, int n3, double L, double mass, double hbar = 1.0);

/// Oscillator eigenfunction psi_n(x) = (alpha/pi)^{1/4} h_n(xi) exp(-xi^2/2)
/// with alpha = m omega / hbar and xi = sqrt(alpha) x. The polynomial h_n is
/// produced by applying the raising operator n times to h_0 = 1:
/// h_{n+1} = (2 xi h_n - h_n') / sqrt(2 (n+1)).
class ShoWavefunction {
 public:
  ShoWavefunction(int n, double mass, double omega, double hbar);

  int n() const noexcept { return n_; }
  double energy() const noexcept { return energy_; }
  /// Coefficients of h_n in powers of xi.
  const std::vector<double>& polynomial() const noexcept { return coeffs_; }

  double operator()(double x) const;
  gridops::WaveFunction sample(const gridops::Grid1D& grid) const;

 private:
  int n_;
  double alpha_;
  double prefactor_;
  double energy_;
  std::vector<double> coeffs_;
};

ShoWavefunction sho_wavefunction(int n, double mass, double omega, double hbar = 1.0);

/// Truncated number-basis matrices. Only the last row/column of products such
/// as a a^dagger feel the truncation.
struct OscillatorBasis {
  int dim;
  double mass;
  double omega;
  double hbar;
  Eigen::MatrixXcd a;
  Eigen::MatrixXcd a_dagger;
  Eigen::MatrixXcd number;
  Eigen::MatrixXcd hamiltonian;
  Eigen::MatrixXcd x;
  Eigen::MatrixXcd p;
};

OscillatorBasis oscillator_basis(int dim, double mass, double omega, double hbar = 1.0);

struct ShoUncertainty {
  double delta_x;
  double delta_p;
  double product;
};

/// Sandwiches <n|X^2|n>, <n|P^2|n> in a basis large enough to be exact.
ShoUncertainty sho_uncertainties(int n, double mass, double omega, double hbar = 1.0);

/// Table entries for l <= 2 with the sign convention
/// Y_1^{+-1} = -+ sqrt(3/8pi) sin(theta) e^{+-i phi}. Throws DomainError
/// outside the table.
cplx spherical_harmonic(int l, int m, double theta, double phi);

/// Generalized Laguerre polynomial L_beta^alpha(x) by the three-term
/// recurrence. Throws DomainError for negative orders.
double laguerre(int alpha, int beta, double x);

class HydrogenState {
 public:
  HydrogenState(int n, int l, int m, double Z, double mass, const UnitSystem& units);

  int n() const noexcept { return n_; }
  int l() const noexcept { return l_; }
  int m() const noexcept { return m_; }
  double Z() const noexcept { return Z_; }
  double mass() const noexcept { return mass_; }
  double energy() const noexcept { return energy_; }
  /// hbar^2 / (mass k Z e^2)
  double length_scale() const noexcept { return a_; }
  /// b = 1 / (n a)
  double decay() const noexcept { return b_; }

  /// R(r) = N r^l L^{2l+1}_{n-l-1}(2 b r) e^{-b r}, with int R^2 r^2 dr = 1.
  double radial(double r) const;
  cplx angular(double theta, double phi) const;
  cplx operator()(double r, double theta, double phi) const;

  /// Maximum of the leading term r^{n-1} e^{-r/(n a)}: r = n^2 a - n a.
  double leading_term_peak() const noexcept { return n_ * (n_ - 1.0) * a_; }

 private:
  int n_, l_, m_;
  double Z_, mass_;
  double a_, b_, energy_;
  double radial_scale_;  // b^{3/2} / sqrt(I), multiplies rho^l L(2 rho) e^{-rho}
};

/// Throws QuantumNumberError unless 1 <= n, 0 <= l < n, |m| <= l.
/// `mass` defaults to the electron mass of `units`.
HydrogenState hydrogen_state(int n, int l, int m, const UnitSystem& units = UnitSystem::si(), double Z = 1.0,
                             std::optional<double> mass = std::nullopt);

/// sum_{l=0}^{n-1} (2l + 1).
int hydrogen_degeneracy(int n);

/// "2p" style label. Letters beyond f follow g, h, i, k, l, m, ...
std::string orbital_label(int n, int l);

struct ScaledAtom {
  double binding_energy;  // E0 * ratio
  double radius;          // a / ratio
};

/// Hydrogen with the orbiting particle `mass_ratio` times heavier than the electron.
ScaledAtom mass_scaled_atom(double mass_ratio, const UnitSystem& units = UnitSystem::si());

}  // namespace qmkit::analytic
