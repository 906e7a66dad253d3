#include "qmkit/analytic.hpp"

#include <cmath>
#include <numbers>

#include "qmkit/error.hpp"

namespace qmkit::analytic {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive");
}

double horner(const std::vector<double>& c, double x) {
  double s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
  return s;
}

}  // namespace

double BoxState::operator()(double x) const {
  if (x < 0.0 || x > L) return 0.0;
  return std::sqrt(2.0 / L) * std::sin(n * kPi * x / L);
}

gridops::WaveFunction BoxState::sample(const gridops::Grid1D& grid) const {
  return gridops::WaveFunction::sample(grid, [this](double x) { return cplx{(*this)(x)}; });
}

BoxState box_state(int n, double L, double mass, double hbar) {
  if (n < 1) throw DomainError("box state needs n >= 1");
  require_positive(L, "box length");
  require_positive(mass, "mass");
  require_positive(hbar, "hbar");
  const double e = n * n * hbar * hbar * kPi * kPi / (2.0 * mass * L * L);
  return {n, L, mass, hbar, e};
}

double box3d_energy(int n1, int n2, int n3, double L, double mass, double hbar) {
  if (n1 < 1 || n2 < 1 || n3 < 1) throw DomainError("3D box needs all quantum numbers >= 1");
  require_positive(L, "box length");
  require_positive(mass, "mass");
  require_positive(hbar, "hbar");
  return hbar * hbar * kPi * kPi / (2.0 * mass * L * L) * (n1 * n1 + n2 * n2 + n3 * n3);
}

ShoWavefunction::ShoWavefunction(int n, double mass, double omega, double hbar) : n_(n) {
  if (n < 0) throw DomainError("oscillator level must be >= 0");
  require_positive(mass, "mass");
  require_positive(omega, "omega");
  require_positive(hbar, "hbar");
  alpha_ = mass * omega / hbar;
  prefactor_ = std::pow(alpha_ / kPi, 0.25);
  energy_ = hbar * omega * (n + 0.5);
  coeffs_ = {1.0};
  for (int k = 0; k < n; ++k) {
    std::vector<double> next(coeffs_.size() + 1, 0.0);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) next[j + 1] += 2.0 * coeffs_[j];
    for (std::size_t j = 1; j < coeffs_.size(); ++j) next[j - 1] -= static_cast<double>(j) * coeffs_[j];
    const double norm = 1.0 / std::sqrt(2.0 * (k + 1));
    for (auto& c : next) c *= norm;
    coeffs_ = std::move(next);
  }
}

double ShoWavefunction::operator()(double x) const {
  const double xi = std::sqrt(alpha_) * x;
  return prefactor_ * horner(coeffs_, xi) * std::exp(-0.5 * xi * xi);
}

gridops::WaveFunction ShoWavefunction::sample(const gridops::Grid1D& grid) const {
  return gridops::WaveFunction::sample(grid, [this](double x) { return cplx{(*this)(x)}; });
}

ShoWavefunction sho_wavefunction(int n, double mass, double omega, double hbar) {
  return ShoWavefunction(n, mass, omega, hbar);
}

OscillatorBasis oscillator_basis(int dim, double mass, double omega, double hbar) {
  if (dim < 2) throw DomainError("oscillator basis needs dim >= 2");
  require_positive(mass, "mass");
  require_positive(omega, "omega");
  require_positive(hbar, "hbar");
  OscillatorBasis b{dim, mass, omega, hbar, {}, {}, {}, {}, {}, {}};
  b.a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) b.a(n - 1, n) = std::sqrt(static_cast<double>(n));
  b.a_dagger = b.a.adjoint();
  b.number = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) b.number(n, n) = static_cast<double>(n);
  b.hamiltonian = hbar * omega * (b.number + 0.5 * Eigen::MatrixXcd::Identity(dim, dim));
  b.x = std::sqrt(hbar / (2.0 * mass * omega)) * (b.a + b.a_dagger);
  b.p = cplx{0.0, std::sqrt(mass * hbar * omega / 2.0)} * (b.a_dagger - b.a);
  return b;
}

ShoUncertainty sho_uncertainties(int n, double mass, double omega, double hbar) {
  if (n < 0) throw DomainError("oscillator level must be >= 0");
  const OscillatorBasis b = oscillator_basis(n + 2, mass, omega, hbar);
  const Eigen::MatrixXcd x2 = b.x * b.x;
  const Eigen::MatrixXcd p2 = b.p * b.p;
  const double mx = b.x(n, n).real();
  const double mp = b.p(n, n).real();
  ShoUncertainty u{};
  u.delta_x = std::sqrt(x2(n, n).real() - mx * mx);
  u.delta_p = std::sqrt(p2(n, n).real() - mp * mp);
  u.product = u.delta_x * u.delta_p;
  return u;
}

cplx spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || l > 2 || std::abs(m) > l) throw DomainError("spherical harmonic table covers l <= 2, |m| <= l");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const cplx e = std::polar(1.0, m * phi);
  switch (l) {
    case 0:
      return std::sqrt(1.0 / (4.0 * kPi));
    case 1:
      if (m == 0) return std::sqrt(3.0 / (4.0 * kPi)) * c;
      return -static_cast<double>(m) * std::sqrt(3.0 / (8.0 * kPi)) * s * e;
    default:
      if (m == 0) return std::sqrt(5.0 / (16.0 * kPi)) * (3.0 * c * c - 1.0);
      if (std::abs(m) == 1) return std::sqrt(15.0 / (8.0 * kPi)) * c * s * e;
      return std::sqrt(15.0 / (32.0 * kPi)) * s * s * e;
  }
}

double laguerre(int alpha, int beta, double x) {
  if (alpha < 0 || beta < 0) throw DomainError("Laguerre orders must be non-negative");
  double prev = 1.0;
  if (beta == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < beta; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

HydrogenState::HydrogenState(int n, int l, int m, double Z, double mass, const UnitSystem& units)
    : n_(n), l_(l), m_(m), Z_(Z), mass_(mass) {
  if (n < 1 || l < 0 || l >= n || std::abs(m) > l) {
    throw QuantumNumberError("hydrogen state needs 1 <= n, 0 <= l <= n-1, |m| <= l");
  }
  require_positive(Z, "nuclear charge");
  require_positive(mass, "mass");
  const auto& c = units.constants();
  const double kze2 = c.k_coulomb * Z * c.q_e * c.q_e;
  a_ = c.hbar * c.hbar / (mass * kze2);
  b_ = 1.0 / (n * a_);
  energy_ = -mass * kze2 * kze2 / (2.0 * c.hbar * c.hbar * n * n);

  // I = int_0^inf rho^{2l+2} L(2 rho)^2 e^{-2 rho} d rho by composite Simpson
  const double rho_max = 20.0 * n + 60.0;
  const int intervals = 20000;
  const double h = rho_max / intervals;
  const auto f = [&](double rho) {
    const double lag = laguerre(2 * l + 1, n - l - 1, 2.0 * rho);
    return std::pow(rho, 2 * l + 2) * lag * lag * std::exp(-2.0 * rho);
  };
  double sum = f(0.0) + f(rho_max);
  for (int i = 1; i < intervals; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(i * h);
  const double integral = sum * h / 3.0;
  radial_scale_ = std::pow(b_, 1.5) / std::sqrt(integral);
}

double HydrogenState::radial(double r) const {
  if (r < 0.0) throw DomainError("radius must be non-negative");
  const double rho = b_ * r;
  return radial_scale_ * std::pow(rho, l_) * laguerre(2 * l_ + 1, n_ - l_ - 1, 2.0 * rho) * std::exp(-rho);
}

cplx HydrogenState::angular(double theta, double phi) const { return spherical_harmonic(l_, m_, theta, phi); }

cplx HydrogenState::operator()(double r, double theta, double phi) const { return radial(r) * angular(theta, phi); }

HydrogenState hydrogen_state(int n, int l, int m, const UnitSystem& units, double Z, std::optional<double> mass) {
  return HydrogenState(n, l, m, Z, mass.value_or(units.constants().m_e), units);
}

int hydrogen_degeneracy(int n) {
  if (n < 1) throw QuantumNumberError("degeneracy needs n >= 1");
  int count = 0;
  for (int l = 0; l < n; ++l) count += 2 * l + 1;
  return count;
}

std::string orbital_label(int n, int l) {
  static const char kLetters[] = "spdfghiklmnoqrtuvwxyz";
  if (n < 1 || l < 0 || l >= n) throw QuantumNumberError("orbital label needs 0 <= l <= n-1");
  if (l >= static_cast<int>(sizeof(kLetters) - 1)) throw QuantumNumberError("no spectroscopic letter for this l");
  return std::to_string(n) + kLetters[l];
}

ScaledAtom mass_scaled_atom(double mass_ratio, const UnitSystem& units) {
  require_positive(mass_ratio, "mass ratio");
  const auto& c = units.constants();
  return {c.rydberg_energy() * mass_ratio, c.bohr_radius() / mass_ratio};
}

}  // namespace qmkit::analytic
