#include "qmkit/manybody.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

#include "qmkit/analytic.hpp"
#include "qmkit/error.hpp"

namespace qmkit::manybody {

namespace {

constexpr std::size_t kMaxParticles = 8;

int permutation_sign(const std::vector<std::size_t>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  }
  return inversions % 2 == 0 ? 1 : -1;
}

void check_size(std::size_t n) {
  if (n == 0) throw DomainError("need at least one particle");
  if (n > kMaxParticles) throw DomainError("permutation expansions are capped at 8 particles");
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

// Calls f(permuted labels, sign) for every permutation of the particle slots.
void for_each_permutation(const Configuration& labels, const std::function<void(const Configuration&, int)>& f) {
  std::vector<std::size_t> p(labels.size());
  std::iota(p.begin(), p.end(), 0);
  Configuration permuted(labels.size());
  do {
    for (std::size_t k = 0; k < p.size(); ++k) permuted[k] = labels[p[k]];
    f(permuted, permutation_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

ManyBodyState project(const ManyBodyState& state, bool antisymmetric) {
  const std::size_t n = state.particle_count();
  check_size(n);
  const Symmetry sym = antisymmetric ? Symmetry::Antisymmetric : Symmetry::Symmetric;
  ManyBodyState out(n, sym);
  const double w = 1.0 / factorial(n);
  for (const auto& [labels, amp] : state.terms()) {
    for_each_permutation(labels, [&](const Configuration& c, int sign) {
      out.add(c, (antisymmetric ? static_cast<double>(sign) : 1.0) * w * amp);
    });
  }
  if (out.is_zero()) {
    return ManyBodyState::zero(n, sym, antisymmetric ? "projection onto antisymmetric states vanishes"
                                                     : "projection onto symmetric states vanishes");
  }
  return out;
}

}  // namespace

ManyBodyState::ManyBodyState(std::size_t particles, Symmetry symmetry) : particles_(particles), symmetry_(symmetry) {}

ManyBodyState ManyBodyState::product(const Configuration& labels, cplx amplitude) {
  ManyBodyState s(labels.size());
  s.add(labels, amplitude);
  return s;
}

ManyBodyState ManyBodyState::zero(std::size_t particles, Symmetry symmetry, std::string reason) {
  ManyBodyState s(particles, symmetry);
  s.zero_reason_ = std::move(reason);
  return s;
}

void ManyBodyState::add(const Configuration& labels, cplx amplitude) {
  if (labels.size() != particles_) throw DomainError("product term has the wrong number of particles");
  auto [it, inserted] = terms_.try_emplace(labels, amplitude);
  if (!inserted) it->second += amplitude;
  // exact cancellation, or round-off remains of it
  if (std::abs(it->second) <= 1e-15 * std::max(1.0, std::abs(amplitude))) terms_.erase(it);
}

cplx ManyBodyState::inner(const ManyBodyState& other) const {
  if (other.particles_ != particles_) throw ShapeError("states have different particle numbers");
  cplx s{};
  for (const auto& [labels, amp] : terms_) {
    const auto it = other.terms_.find(labels);
    if (it != other.terms_.end()) s += std::conj(amp) * it->second;
  }
  return s;
}

double ManyBodyState::norm() const { return std::sqrt(inner(*this).real()); }

ManyBodyState ManyBodyState::scaled(cplx s) const {
  ManyBodyState out = *this;
  for (auto& [labels, amp] : out.terms_) amp *= s;
  return out;
}

double ManyBodyState::distance(const ManyBodyState& other) const {
  double d = 0.0;
  for (const auto& [labels, amp] : terms_) {
    const auto it = other.terms_.find(labels);
    d = std::max(d, std::abs(amp - (it == other.terms_.end() ? cplx{} : it->second)));
  }
  for (const auto& [labels, amp] : other.terms_) {
    if (terms_.find(labels) == terms_.end()) d = std::max(d, std::abs(amp));
  }
  return d;
}

ManyBodyState exchange(const ManyBodyState& state, std::size_t i, std::size_t j) {
  const std::size_t n = state.particle_count();
  if (i == j || i >= n || j >= n) throw DomainError("exchange needs two distinct particle indices in range");
  if (state.is_zero()) return state;
  ManyBodyState out(n, state.symmetry());
  for (const auto& [labels, amp] : state.terms()) {
    Configuration swapped = labels;
    std::swap(swapped[i], swapped[j]);
    out.add(swapped, amp);
  }
  return out;
}

ManyBodyState antisymmetrize(const Configuration& labels) {
  check_size(labels.size());
  Configuration sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return ManyBodyState::zero(labels.size(), Symmetry::Antisymmetric,
                               "two fermions in the same single-particle state (Pauli exclusion)");
  }
  ManyBodyState out(labels.size(), Symmetry::Antisymmetric);
  const double w = 1.0 / std::sqrt(factorial(labels.size()));
  for_each_permutation(labels, [&](const Configuration& c, int sign) { out.add(c, sign * w); });
  return out;
}

ManyBodyState symmetrize(const Configuration& labels) {
  check_size(labels.size());
  std::map<Label, std::size_t> counts;
  for (const auto& l : labels) ++counts[l];
  double multiplicity = 1.0;
  for (const auto& [l, c] : counts) multiplicity *= factorial(c);
  ManyBodyState out(labels.size(), Symmetry::Symmetric);
  const double w = 1.0 / std::sqrt(factorial(labels.size()) * multiplicity);
  for_each_permutation(labels, [&](const Configuration& c, int) { out.add(c, w); });
  return out;
}

ManyBodyState antisymmetric_projection(const ManyBodyState& state) { return project(state, true); }

ManyBodyState symmetric_projection(const ManyBodyState& state) { return project(state, false); }

std::optional<int> exchange_eigenvalue(const ManyBodyState& state, std::size_t i, std::size_t j, double tol) {
  if (state.is_zero()) return std::nullopt;
  const ManyBodyState swapped = exchange(state, i, j);
  const double scale = std::max(state.norm(), 1e-300);
  if (swapped.distance(state) <= tol * scale) return 1;
  if (swapped.distance(state.scaled(-1.0)) <= tol * scale) return -1;
  return std::nullopt;
}

TwoOscillator two_oscillator_eigen(int n, int m, double omega, double hbar) {
  if (n < 0 || m < 0) throw DomainError("oscillator levels must be >= 0");
  if (!(omega > 0.0) || !(hbar > 0.0)) throw DomainError("omega and hbar must be positive");
  TwoOscillator out{hbar * omega * (n + m + 1.0), antisymmetrize({std::to_string(n), std::to_string(m)}), n == m};
  return out;
}

ManyBodyState evolve(const ManyBodyState& state, double energy, double t, double hbar) {
  return state.scaled(std::polar(1.0, -energy * t / hbar));
}

double occupation(double E, const OccupationModel& model) {
  if (!(model.temperature > 0.0)) throw DomainError("temperature must be positive");
  if (!(model.k_boltzmann > 0.0)) throw DomainError("Boltzmann constant must be positive");
  const double x = (E - model.mu) / (model.k_boltzmann * model.temperature);
  switch (model.statistics) {
    case Statistics::MaxwellBoltzmann:
      return std::exp(-x);
    case Statistics::BoseEinstein:
      if (!(x > 0.0)) throw DomainError("Bose-Einstein occupation needs E > mu");
      return 1.0 / std::expm1(x);
    case Statistics::FermiDirac:
      if (x > 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
      }
      return 1.0 / (std::exp(x) + 1.0);
  }
  throw Error("unknown statistics");
}

double boltzmann_ratio(double E_i, double E_j, double T, double k_boltzmann) {
  if (!(T > 0.0)) throw DomainError("temperature must be positive");
  return std::exp(-(E_i - E_j) / (k_boltzmann * T));
}

double solve_chemical_potential(const std::vector<Level>& levels, double N, double T, Statistics statistics,
                                double k_boltzmann) {
  if (levels.empty()) throw InfeasibleError("no levels to occupy");
  if (!(T > 0.0)) throw DomainError("temperature must be positive");
  if (!(N > 0.0)) throw InfeasibleError("particle number must be positive");
  const double kT = k_boltzmann * T;
  double e_min = levels.front().energy;
  double e_max = e_min;
  double total = 0.0;
  for (const auto& l : levels) {
    if (!(l.degeneracy > 0.0)) throw DomainError("degeneracies must be positive");
    e_min = std::min(e_min, l.energy);
    e_max = std::max(e_max, l.energy);
    total += l.degeneracy;
  }
  const auto count = [&](double mu) {
    double s = 0.0;
    for (const auto& l : levels) s += l.degeneracy * occupation(l.energy, {statistics, T, mu, k_boltzmann});
    return s;
  };

  if (statistics == Statistics::MaxwellBoltzmann) {
    double z = 0.0;
    for (const auto& l : levels) z += l.degeneracy * std::exp(-(l.energy - e_min) / kT);
    return e_min + kT * std::log(N / z);
  }

  if (statistics == Statistics::FermiDirac) {
    if (N >= total) throw InfeasibleError("Fermi-Dirac filling cannot exceed the total degeneracy");
    double lo = e_min - kT;
    double hi = e_max + kT;
    while (count(lo) > N) lo -= 2.0 * (hi - lo);
    while (count(hi) < N) hi += 2.0 * (hi - lo);
    for (int it = 0; it < 400; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double c = count(mid);
      if (std::abs(c - N) <= 1e-12 * N) return mid;
      (c < N ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }

  // Bose-Einstein: mu = e_min - s with s > 0, bisected in log s
  const auto count_s = [&](double log_s) { return count(e_min - std::exp(log_s)); };
  double lo = std::log(kT) - 600.0;
  double hi = std::log(kT) + 1.0;
  if (count_s(lo) < N) throw InfeasibleError("particle number too large to reach below the lowest level");
  while (count_s(hi) > N) hi += 2.0;
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double c = count_s(mid);
    if (std::abs(c - N) <= 1e-12 * N) return e_min - std::exp(mid);
    (c > N ? lo : hi) = mid;
  }
  return e_min - std::exp(0.5 * (lo + hi));
}

double fermi_energy(double N, double volume, double mass, double hbar) {
  if (!(N > 0.0) || !(volume > 0.0) || !(mass > 0.0) || !(hbar > 0.0)) {
    throw DomainError("Fermi energy needs positive N, volume, mass and hbar");
  }
  const double pi = std::numbers::pi;
  return hbar * hbar / (2.0 * mass) * std::pow(3.0 * pi * pi * N / volume, 2.0 / 3.0);
}

double fermi_sphere_states(double R) {
  if (R < 0.0) throw DomainError("sphere radius must be non-negative");
  return 2.0 * (1.0 / 8.0) * (4.0 / 3.0) * std::numbers::pi * R * R * R;
}

std::vector<Subshell> fill_shells(int electrons) {
  if (electrons < 1) throw DomainError("need at least one electron");
  std::vector<Subshell> shells;
  int left = electrons;
  for (int n = 1; left > 0; ++n) {
    for (int l = 0; l < n && left > 0; ++l) {
      const int take = std::min(left, 2 * (2 * l + 1));
      shells.push_back({n, l, analytic::orbital_label(n, l), take});
      left -= take;
    }
  }
  return shells;
}

std::string configuration_string(const std::vector<Subshell>& shells) {
  std::string s;
  for (const auto& sh : shells) {
    if (!s.empty()) s += ' ';
    s += sh.label + std::to_string(sh.occupancy);
  }
  return s;
}

}  // namespace qmkit::manybody
