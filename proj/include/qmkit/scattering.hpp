#pragma once

#include <complex>
#include <string>
#include <vector>

/// Stationary scattering on piecewise-constant potentials. The incoming wave
/// arrives from the left with unit amplitude.
namespace qmkit::scattering {

using cplx = std::complex<double>;

enum class Regime {
  Propagating,  // E > V: value is k
  Evanescent,   // E < V: value is mu
  Flat,         // E == V: value is 0
};

struct Wavenumber {
  double value;
  Regime regime;
};

Wavenumber wavenumbers(double E, double V, double mass, double hbar = 1.0);

struct Currents {
  double incoming;
  double reflected;
  double transmitted;
};

struct ScatterResult {
  double E;
  cplx k_left;
  cplx k_right;    // imaginary (i mu) when the right side is closed
  cplx reflected;  // B1
  cplx transmitted;
  double R;
  double T;
  double log10_T;  // finite even when T underflows to 0
  Currents currents;
  std::vector<std::string> warnings;
};

/// Step from V = 0 (left) to V_right (right). Below the step R = 1, T = 0 and
/// `transmitted` is the evanescent amplitude. Throws DomainError for E <= 0.
ScatterResult step_scatter(double E, double V_right, double mass, double hbar = 1.0);

/// Rectangular barrier of height V on (-a, a). One formula covers E < V and
/// E > V (mu -> i k2) and is continuous through E = V. Throws DomainError for
/// E <= 0 or a <= 0.
ScatterResult barrier_transmission(double E, double V, double a, double mass, double hbar = 1.0);

struct WideBarrier {
  double T;
  double log10_T;
  double mu_a;
  std::vector<std::string> warnings;
};

/// Thick-barrier limit T ~ 16 e^{-4 mu a} (E/V)(1 - E/V), evaluated in log
/// space. Warns when mu a < 1. Throws DomainError unless 0 < E < V.
WideBarrier barrier_transmission_wide(double E, double V, double a, double mass, double hbar = 1.0);

/// values[0] on (-inf, breakpoints[0]), values[i] on (breakpoints[i-1],
/// breakpoints[i]), values.back() on (breakpoints.back(), inf).
struct PiecewisePotential {
  std::vector<double> breakpoints;
  std::vector<double> values;

  /// Throws DomainError unless breakpoints ascend strictly and
  /// values.size() == breakpoints.size() + 1.
  PiecewisePotential(std::vector<double> breakpoints, std::vector<double> values);

  static PiecewisePotential step(double V_right);
  static PiecewisePotential barrier(double V, double a);
};

/// General solver: 2x2 matching matrices for psi and psi' at every breakpoint.
/// Throws NoChannelError if either outer region is closed (E <= V there).
ScatterResult transfer_matrix_scatter(const PiecewisePotential& potential, double E, double mass, double hbar = 1.0);

struct BoundState {
  double energy;  // in (-V, 0)
  bool even;
  double z;  // k L inside the well
};

/// Bound states of the well V(x) = -V on (-L, L), ascending. The even ground
/// state always exists.
std::vector<BoundState> finite_well_bound_states(double V, double L, double mass, double hbar = 1.0);

/// hbar k |A|^2 / m.
double plane_wave_current(cplx amplitude, double k, double mass, double hbar = 1.0);

}  // namespace qmkit::scattering
