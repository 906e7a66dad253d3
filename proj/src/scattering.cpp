#include "qmkit/scattering.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "qmkit/error.hpp"

namespace qmkit::scattering {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive");
}

// C(s) = cosh(w sqrt s) and S(s) = sinh(w sqrt s)/sqrt s, continued to s < 0
// as cos and sin; a short series covers |s| w^2 small.
struct BarrierFunctions {
  double C;
  double S;
};

BarrierFunctions barrier_functions(double s, double w) {
  const double t = s * w * w;
  if (std::abs(t) < 1e-3) {
    const double C = 1.0 + t / 2.0 + t * t / 24.0 + t * t * t / 720.0;
    const double S = w * (1.0 + t / 6.0 + t * t / 120.0 + t * t * t / 5040.0);
    return {C, S};
  }
  if (s > 0.0) {
    const double r = std::sqrt(s);
    return {std::cosh(w * r), std::sinh(w * r) / r};
  }
  const double r = std::sqrt(-s);
  return {std::cos(w * r), std::sin(w * r) / r};
}

void fill_currents(ScatterResult& r, double mass, double hbar) {
  const double kl = r.k_left.real();
  r.currents.incoming = hbar * kl / mass;
  r.currents.reflected = hbar * kl * std::norm(r.reflected) / mass;
  r.currents.transmitted = r.k_right.imag() == 0.0 ? hbar * r.k_right.real() * std::norm(r.transmitted) / mass : 0.0;
}

}  // namespace

Wavenumber wavenumbers(double E, double V, double mass, double hbar) {
  require_positive(mass, "mass");
  require_positive(hbar, "hbar");
  if (E > V) return {std::sqrt(2.0 * mass * (E - V)) / hbar, Regime::Propagating};
  if (E < V) return {std::sqrt(2.0 * mass * (V - E)) / hbar, Regime::Evanescent};
  return {0.0, Regime::Flat};
}

ScatterResult step_scatter(double E, double V_right, double mass, double hbar) {
  require_positive(E, "energy");
  require_positive(mass, "mass");
  require_positive(hbar, "hbar");
  const double k1 = std::sqrt(2.0 * mass * E) / hbar;
  const Wavenumber w2 = wavenumbers(E, V_right, mass, hbar);
  const cplx k2 = w2.regime == Regime::Evanescent ? cplx{0.0, w2.value} : cplx{w2.value, 0.0};

  ScatterResult r{};
  r.E = E;
  r.k_left = k1;
  r.k_right = k2;
  r.reflected = (k1 - k2) / (k1 + k2);
  r.transmitted = 2.0 * k1 / (k1 + k2);
  if (w2.regime == Regime::Propagating) {
    r.R = std::norm(r.reflected);
    r.T = 4.0 * k1 * k2.real() / ((k1 + k2.real()) * (k1 + k2.real()));
  } else {
    r.R = 1.0;
    r.T = 0.0;
  }
  r.log10_T = std::log10(r.T);
  fill_currents(r, mass, hbar);
  return r;
}

ScatterResult barrier_transmission(double E, double V, double a, double mass, double hbar) {
  require_positive(E, "energy");
  require_positive(a, "barrier half-width");
  require_positive(mass, "mass");
  require_positive(hbar, "hbar");
  const double k = std::sqrt(2.0 * mass * E) / hbar;
  const double s = 2.0 * mass * (V - E) / (hbar * hbar);  // mu^2, negative above the barrier
  const double w = 2.0 * a;
  const cplx phase = std::polar(1.0, -2.0 * k * a);

  ScatterResult r{};
  r.E = E;
  r.k_left = k;
  r.k_right = k;

  const double x = s > 0.0 ? w * std::sqrt(s) : 0.0;
  if (x > 300.0) {
    // cosh ~ sinh ~ e^x / 2; keep T in log space
    const double mu = std::sqrt(s);
    const double q = (s + k * k) / (2.0 * k * mu);
    const double d = (s - k * k) / (2.0 * k * mu);
    const double log_t = -2.0 * x + std::log(4.0) - 2.0 * std::log(q);
    r.reflected = -kI * q * phase / (1.0 + kI * d);
    r.transmitted = 0.0;
    r.T = std::exp(log_t);
    r.R = 1.0 - r.T;
    r.log10_T = log_t / std::log(10.0);
  } else {
    const auto [C, S] = barrier_functions(s, w);
    const cplx D = C + kI * (s - k * k) / (2.0 * k) * S;
    r.transmitted = phase / D;
    r.reflected = -kI * (s + k * k) / (2.0 * k) * S * phase / D;
    r.T = 1.0 / std::norm(D);
    r.R = std::norm(r.reflected);
    r.log10_T = -std::log10(std::norm(D));
  }
  fill_currents(r, mass, hbar);
  return r;
}

WideBarrier barrier_transmission_wide(double E, double V, double a, double mass, double hbar) {
  require_positive(E, "energy");
  require_positive(a, "barrier half-width");
  require_positive(mass, "mass");
  require_positive(hbar, "hbar");
  if (E >= V) throw DomainError("wide-barrier formula needs E < V");
  const double mu = std::sqrt(2.0 * mass * (V - E)) / hbar;
  const double ratio = E / V;
  WideBarrier out{};
  out.mu_a = mu * a;
  const double log_t = std::log(16.0 * ratio * (1.0 - ratio)) - 4.0 * mu * a;
  out.T = std::exp(log_t);
  out.log10_T = log_t / std::log(10.0);
  if (out.mu_a < 1.0) out.warnings.emplace_back("mu a < 1: barrier is not wide, use the exact formula");
  return out;
}

PiecewisePotential::PiecewisePotential(std::vector<double> bp, std::vector<double> v)
    : breakpoints(std::move(bp)), values(std::move(v)) {
  if (values.size() != breakpoints.size() + 1) throw DomainError("need one more potential value than breakpoints");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1])) throw DomainError("breakpoints must be strictly ascending");
  }
}

PiecewisePotential PiecewisePotential::step(double V_right) { return PiecewisePotential({0.0}, {0.0, V_right}); }

PiecewisePotential PiecewisePotential::barrier(double V, double a) {
  return PiecewisePotential({-a, a}, {0.0, V, 0.0});
}

namespace {

using Mat2 = Eigen::Matrix2cd;

// Rows: psi and psi' of the two basis solutions at x.
Mat2 matching_matrix(cplx k, double x) {
  Mat2 m;
  if (std::abs(k) == 0.0) {
    m << 1.0, x, 0.0, 1.0;
    return m;
  }
  const cplx ep = std::exp(kI * k * x);
  const cplx em = std::exp(-kI * k * x);
  m << ep, em, kI * k * ep, -kI * k * em;
  return m;
}

}  // namespace

ScatterResult transfer_matrix_scatter(const PiecewisePotential& potential, double E, double mass, double hbar) {
  require_positive(mass, "mass");
  require_positive(hbar, "hbar");
  const auto& v = potential.values;
  if (!(E > v.front()) || !(E > v.back())) {
    throw NoChannelError("transfer matrix needs propagating waves on both sides (E above both outer potentials)");
  }
  std::vector<cplx> k(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) k[j] = std::sqrt(cplx{2.0 * mass * (E - v[j]), 0.0}) / hbar;

  Mat2 total = Mat2::Identity();
  for (std::size_t j = 0; j < potential.breakpoints.size(); ++j) {
    const double xb = potential.breakpoints[j];
    total = matching_matrix(k[j + 1], xb).inverse() * matching_matrix(k[j], xb) * total;
  }
  ScatterResult r{};
  r.E = E;
  r.k_left = k.front();
  r.k_right = k.back();
  r.reflected = -total(1, 0) / total(1, 1);
  r.transmitted = total.determinant() / total(1, 1);
  r.R = std::norm(r.reflected);
  r.T = k.back().real() / k.front().real() * std::norm(r.transmitted);
  r.log10_T = std::log10(r.T);
  fill_currents(r, mass, hbar);
  return r;
}

std::vector<BoundState> finite_well_bound_states(double V, double L, double mass, double hbar) {
  require_positive(V, "well depth");
  require_positive(L, "well half-width");
  require_positive(mass, "mass");
  require_positive(hbar, "hbar");
  const double z0 = L * std::sqrt(2.0 * mass * V) / hbar;
  const auto outside = [z0](double z) { return std::sqrt(std::max(z0 * z0 - z * z, 0.0)); };
  const auto even = [&](double z) { return z * std::sin(z) - outside(z) * std::cos(z); };
  const auto odd = [&](double z) { return z * std::cos(z) + outside(z) * std::sin(z); };

  const auto bisect = [](const auto& f, double lo, double hi) {
    double flo = f(lo);
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double fm = f(mid);
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  std::vector<BoundState> states;
  const double to_energy = hbar * hbar / (2.0 * mass * L * L);
  for (int j = 0;; ++j) {
    const double start = j * kPi;
    if (start >= z0) break;
    const double end_even = std::min(start + kPi / 2.0, z0);
    const double ze = bisect(even, start, end_even);
    states.push_back({to_energy * ze * ze - V, true, ze});
    const double start_odd = start + kPi / 2.0;
    if (start_odd >= z0) break;
    const double zo = bisect(odd, start_odd, std::min(start + kPi, z0));
    states.push_back({to_energy * zo * zo - V, false, zo});
  }
  return states;
}

double plane_wave_current(cplx amplitude, double k, double mass, double hbar) {
  require_positive(mass, "mass");
  return hbar * k * std::norm(amplitude) / mass;
}

}  // namespace qmkit::scattering
