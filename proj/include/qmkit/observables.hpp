#pragma once

#include <string>
#include <vector>

#include "qmkit/grid.hpp"
#include "qmkit/hamiltonian.hpp"
#include "qmkit/operators.hpp"

namespace qmkit::gridops {

/// <f, g> = sum conj(f_i) g_i w_i with trapezoid weights. Throws ShapeError on
/// grid mismatch.
cplx inner_product(const WaveFunction& f, const WaveFunction& g);

/// Throws ZeroNormError for the zero function.
WaveFunction normalize(const WaveFunction& psi);

/// <psi|O|psi> / <psi|psi>.
cplx expectation(const GridOperator& op, const WaveFunction& psi);

struct Uncertainty {
  double mean;
  double variance;
  double delta;  // sqrt(variance)
};

/// Spread of a Hermitian observable. Tiny negative variances from round-off
/// are clamped to zero; below -1e-10 relative a ConsistencyError is thrown.
Uncertainty uncertainty(const GridOperator& op, const WaveFunction& psi);

/// j_i = (hbar / m) Im(conj(psi_i) psi'_i) with the grid derivative.
std::vector<double> probability_current(const WaveFunction& psi, double mass, double hbar = 1.0);

struct IntervalProbability {
  double probability;
  double a;  // interval actually integrated, after clipping to the grid
  double b;
  std::vector<std::string> warnings;
};

/// Trapezoid integral of |psi|^2 over [a, b]. Partial cells at the ends use
/// linear interpolation of |psi|^2; an interval reaching outside the grid is
/// clipped with a warning. Throws DomainError unless a < b.
IntervalProbability position_probability(const WaveFunction& psi, double a, double b);

struct EhrenfestResult {
  double lhs;  // centred difference of <O>(t)
  double rhs;  // (i / hbar) <[H, O]> at time t
};

/// Compares d<O>/dt of the evolved state with the commutator sandwich.
/// `h` must be the Hamiltonian that produced `spectrum`.
EhrenfestResult ehrenfest_check(const Spectrum& spectrum, const Hamiltonian& h, const std::vector<cplx>& coefficients,
                                const GridOperator& op, double t, double dt);

struct ParitySplit {
  WaveFunction even;
  WaveFunction odd;
};

/// even = (psi(x) + psi(-x)) / 2, odd = (psi(x) - psi(-x)) / 2. Throws
/// DomainError on an asymmetric grid.
ParitySplit parity_split(const WaveFunction& psi);

}  // namespace qmkit::gridops
