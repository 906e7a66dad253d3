#include "qmkit/observables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qmkit/error.hpp"

namespace qmkit::gridops {

cplx inner_product(const WaveFunction& f, const WaveFunction& g) {
  require_same_grid(f.grid(), g.grid());
  cplx s{};
  for (std::size_t i = 0; i < f.size(); ++i) s += std::conj(f[i]) * g[i] * trapezoid_weight(f.grid(), i);
  return s;
}

WaveFunction normalize(const WaveFunction& psi) {
  const double n = psi.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw ZeroNormError("cannot normalize a zero (or non-finite) wave function");
  WaveFunction out = psi;
  out *= 1.0 / n;
  return out;
}

cplx expectation(const GridOperator& op, const WaveFunction& psi) {
  const double n2 = psi.norm_squared();
  if (!(n2 > 0.0)) throw ZeroNormError("expectation value of a zero wave function");
  return inner_product(psi, op.apply(psi)) / n2;
}

Uncertainty uncertainty(const GridOperator& op, const WaveFunction& psi) {
  const double n2 = psi.norm_squared();
  if (!(n2 > 0.0)) throw ZeroNormError("uncertainty of a zero wave function");
  const WaveFunction o_psi = op.apply(psi);
  const double mean = (inner_product(psi, o_psi) / n2).real();
  const double second = (inner_product(psi, op.apply(o_psi)) / n2).real();
  double var = second - mean * mean;
  if (var < 0.0) {
    if (var < -1e-10 * std::max(std::abs(second), 1e-300)) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "negative variance %.3e: operator is not Hermitian on this state", var);
      throw ConsistencyError(buf);
    }
    var = 0.0;
  }
  return {mean, var, std::sqrt(var)};
}

std::vector<double> probability_current(const WaveFunction& psi, double mass, double hbar) {
  if (!(mass > 0.0)) throw DomainError("probability current needs mass > 0");
  const WaveFunction d = GridOperator::derivative().apply(psi);
  std::vector<double> j(psi.size());
  for (std::size_t i = 0; i < j.size(); ++i) j[i] = hbar / mass * (std::conj(psi[i]) * d[i]).imag();
  return j;
}

IntervalProbability position_probability(const WaveFunction& psi, double a, double b) {
  if (!(a < b)) throw DomainError("position probability needs a < b");
  const Grid1D& g = psi.grid();
  IntervalProbability out{0.0, a, b, {}};
  if (a < g.x_min() || b > g.x_max()) {
    out.a = std::max(a, g.x_min());
    out.b = std::min(b, g.x_max());
    out.warnings.emplace_back("interval clipped to the grid domain");
    if (!(out.a < out.b)) return out;
  }
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < psi.size(); ++i) {
    const double x0 = g.x(i);
    const double x1 = g.x(i + 1);
    const double l = std::max(out.a, x0);
    const double r = std::min(out.b, x1);
    if (!(r > l)) continue;
    const double rho0 = std::norm(psi[i]);
    const double rho1 = std::norm(psi[i + 1]);
    const auto rho = [&](double x) { return rho0 + (rho1 - rho0) * (x - x0) / (x1 - x0); };
    total += 0.5 * (rho(l) + rho(r)) * (r - l);
  }
  out.probability = total;
  return out;
}

EhrenfestResult ehrenfest_check(const Spectrum& spectrum, const Hamiltonian& h, const std::vector<cplx>& coefficients,
                                const GridOperator& op, double t, double dt) {
  if (!(dt > 0.0)) throw DomainError("Ehrenfest check needs dt > 0");
  const auto mean_at = [&](double time) { return expectation(op, evolve(spectrum, coefficients, time)).real(); };
  EhrenfestResult r{};
  r.lhs = (mean_at(t + dt) - mean_at(t - dt)) / (2.0 * dt);
  const WaveFunction psi = evolve(spectrum, coefficients, t);
  const GridOperator hop = GridOperator::hamiltonian(h);
  const cplx sandwich = inner_product(psi, commutator_apply(hop, op, psi)) / psi.norm_squared();
  r.rhs = (cplx{0.0, 1.0} / h.hbar() * sandwich).real();
  return r;
}

ParitySplit parity_split(const WaveFunction& psi) {
  if (!psi.grid().is_symmetric()) throw DomainError("parity split needs a grid symmetric about x = 0");
  const std::size_t n = psi.size();
  WaveFunction even = psi;
  WaveFunction odd = psi;
  for (std::size_t i = 0; i < n; ++i) {
    even[i] = 0.5 * (psi[i] + psi[n - 1 - i]);
    odd[i] = psi[i] - even[i];
  }
  return {even, odd};
}

}  // namespace qmkit::gridops
