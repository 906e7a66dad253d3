#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

/// Identical-particle states, exchange symmetry and occupation statistics.
namespace qmkit::manybody {

using cplx = std::complex<double>;
/// Single-particle state label; distinct labels are orthonormal.
using Label = std::string;
/// One label per particle, particle 1 first.
using Configuration = std::vector<Label>;

enum class Symmetry { None, Symmetric, Antisymmetric };

/// Superposition of product states. The zero state is explicit: it has no
/// terms and carries the reason it vanished.
class ManyBodyState {
 public:
  ManyBodyState(std::size_t particles, Symmetry symmetry = Symmetry::None);

  static ManyBodyState product(const Configuration& labels, cplx amplitude = 1.0);
  static ManyBodyState zero(std::size_t particles, Symmetry symmetry, std::string reason);

  /// Adds amplitude to a product term; terms that cancel exactly are removed.
  void add(const Configuration& labels, cplx amplitude);

  std::size_t particle_count() const noexcept { return particles_; }
  Symmetry symmetry() const noexcept { return symmetry_; }
  const std::map<Configuration, cplx>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::string& zero_reason() const noexcept { return zero_reason_; }

  cplx inner(const ManyBodyState& other) const;
  double norm() const;
  ManyBodyState scaled(cplx s) const;
  /// Max amplitude difference over the union of terms.
  double distance(const ManyBodyState& other) const;

 private:
  std::size_t particles_;
  Symmetry symmetry_;
  std::map<Configuration, cplx> terms_;
  std::string zero_reason_;
};

/// Swaps particles i and j (0-based) in every term. Throws DomainError for
/// i == j or an index out of range.
ManyBodyState exchange(const ManyBodyState& state, std::size_t i, std::size_t j);

/// sum over permutations of sign(P) P|labels> / sqrt(N!). Repeated labels
/// give the explicit zero state. Throws DomainError for N == 0 or N > 8.
ManyBodyState antisymmetrize(const Configuration& labels);

/// sum over permutations P|labels> / sqrt(N! prod n_label!), i.e. each
/// distinct arrangement once with weight sqrt(prod n! / N!).
ManyBodyState symmetrize(const Configuration& labels);

/// (1/N!) sum sign(P) P |state>: leaves antisymmetric states unchanged.
ManyBodyState antisymmetric_projection(const ManyBodyState& state);
/// (1/N!) sum P |state>.
ManyBodyState symmetric_projection(const ManyBodyState& state);

/// +1 or -1 when exchange(i, j) maps the state to +-itself within tol,
/// nothing otherwise.
std::optional<int> exchange_eigenvalue(const ManyBodyState& state, std::size_t i, std::size_t j, double tol = 1e-12);

struct TwoOscillator {
  double energy;  // hbar omega (n + m + 1)
  ManyBodyState state;
  bool forbidden;  // n == m for fermions
};

/// Two identical fermions in one oscillator, levels n and m.
TwoOscillator two_oscillator_eigen(int n, int m, double omega, double hbar = 1.0);

/// state * exp(-i E t / hbar).
ManyBodyState evolve(const ManyBodyState& state, double energy, double t, double hbar = 1.0);

enum class Statistics { MaxwellBoltzmann, BoseEinstein, FermiDirac };

/// Boltzmann constant in eV/K, the default energy unit of this module.
inline constexpr double kBoltzmannEv = 8.617333262e-5;

struct OccupationModel {
  Statistics statistics;
  double temperature;
  double mu;
  double k_boltzmann = kBoltzmannEv;
};

/// MB: e^{-(E-mu)/kT}; BE: 1/(e^{(E-mu)/kT} - 1); FD: 1/(e^{(E-mu)/kT} + 1).
/// Throws DomainError for T <= 0 and for BE with E <= mu.
double occupation(double E, const OccupationModel& model);

/// n_i / n_j = e^{-(E_i - E_j)/kT}.
double boltzmann_ratio(double E_i, double E_j, double T, double k_boltzmann = kBoltzmannEv);

struct Level {
  double energy;
  double degeneracy;
};

/// mu with sum_i g_i n(E_i; mu) = N to 1e-10 relative. Throws InfeasibleError
/// when no mu exists (FD with N >= sum g, N <= 0).
double solve_chemical_potential(const std::vector<Level>& levels, double N, double T, Statistics statistics,
                                double k_boltzmann = kBoltzmannEv);

/// (hbar^2 / 2m)(3 pi^2 N / V)^{2/3}.
double fermi_energy(double N, double volume, double mass, double hbar);

/// Continuum count of spin-1/2 states with |n| <= R, n_i >= 1: 2 (1/8)(4/3) pi R^3.
double fermi_sphere_states(double R);

struct Subshell {
  int n;
  int l;
  std::string label;
  int occupancy;
};

/// Fills (n, l) subshells in order of n, then l, with capacity 2(2l+1).
/// Throws DomainError for Z < 1.
std::vector<Subshell> fill_shells(int electrons);
/// "1s2 2s2 2p6 3s2"
std::string configuration_string(const std::vector<Subshell>& shells);

}  // namespace qmkit::manybody
