#include "qmkit/bands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qmkit/error.hpp"

namespace qmkit::bands {

namespace {

constexpr double kAllowedSlack = 1e-12;

// cosh(w sqrt s) and sinh(w sqrt s)/sqrt s, continued to s < 0
void continued(double s, double w, double& C, double& S) {
  const double t = s * w * w;
  if (std::abs(t) < 1e-3) {
    C = 1.0 + t / 2.0 + t * t / 24.0 + t * t * t / 720.0;
    S = w * (1.0 + t / 6.0 + t * t / 120.0 + t * t * t / 5040.0);
  } else if (s > 0.0) {
    const double r = std::sqrt(s);
    C = std::cosh(w * r);
    S = std::sinh(w * r) / r;
  } else {
    const double r = std::sqrt(-s);
    C = std::cos(w * r);
    S = std::sin(w * r) / r;
  }
}

double excess(double E, const KPParams& p) { return std::abs(kp_dispersion(E, p)) - 1.0; }

bool allowed(double E, const KPParams& p) { return excess(E, p) <= kAllowedSlack; }

// Locates the allowed/forbidden boundary inside [lo, hi] (classes differ at
// the two ends) and returns the endpoint on the allowed side.
double refine_edge(double lo, double hi, const KPParams& p, double tol) {
  const bool lo_allowed = allowed(lo, p);
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (allowed(mid, p) == lo_allowed) {
      lo = mid;
    } else {
      hi = mid;
    }
    const double edge = lo_allowed ? lo : hi;
    if (hi - lo <= tol && std::abs(excess(edge, p)) <= kAllowedSlack) break;
  }
  return lo_allowed ? lo : hi;
}

// Golden-section search for the maximum of |f| on [lo, hi].
double maximize_abs_f(double lo, double hi, const KPParams& p) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - g * (hi - lo);
  double x2 = lo + g * (hi - lo);
  double f1 = excess(x1, p);
  double f2 = excess(x2, p);
  for (int it = 0; it < 120 && hi - lo > 1e-15 * hi; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = excess(x2, p);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = excess(x1, p);
    }
  }
  return f1 > f2 ? x1 : x2;
}

}  // namespace

void KPParams::validate() const {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("Kronig-Penney widths a and b must be positive");
  if (!(V >= 0.0) || !std::isfinite(V)) throw DomainError("Kronig-Penney barrier height must be >= 0");
  if (!(mass > 0.0) || !(hbar > 0.0)) throw DomainError("mass and hbar must be positive");
}

double kp_dispersion(double E, const KPParams& params) {
  params.validate();
  if (!(E > 0.0)) throw DomainError("dispersion is defined for E > 0");
  const double k = std::sqrt(2.0 * params.mass * E) / params.hbar;
  const double s = 2.0 * params.mass * (params.V - E) / (params.hbar * params.hbar);
  double C = 0.0;
  double S = 0.0;
  continued(s, params.b, C, S);
  return std::cos(2.0 * k * params.a) * C + (s - k * k) / (2.0 * k) * std::sin(2.0 * k * params.a) * S;
}

BandStructure kp_bands(const KPParams& params, double e_max, std::size_t n_scan) {
  params.validate();
  if (!(e_max > 0.0)) throw DomainError("scan range E_max must be positive");
  if (n_scan < 2) throw DomainError("scan needs at least 2 intervals");

  BandStructure out{};
  out.e_max = e_max;
  out.n_scan = n_scan;
  out.tolerance = 1e-10 * e_max;
  if (n_scan < 1000) out.warnings.emplace_back("fewer than 1000 scan points: narrow bands may be missed");

  const double e0 = e_max * 1e-9;
  std::vector<double> es(n_scan + 1);
  std::vector<double> gs(n_scan + 1);
  for (std::size_t j = 0; j <= n_scan; ++j) {
    es[j] = j == 0 ? e0 : e_max * static_cast<double>(j) / static_cast<double>(n_scan);
    gs[j] = excess(es[j], params);
  }
  // narrow gaps can hide between scan points at allowed local maxima of |f|
  std::vector<double> extra;
  for (std::size_t j = 1; j < n_scan; ++j) {
    if (gs[j] <= kAllowedSlack && gs[j] >= gs[j - 1] && gs[j] >= gs[j + 1]) {
      const double peak = maximize_abs_f(es[j - 1], es[j + 1], params);
      if (!allowed(peak, params)) extra.push_back(peak);
    }
  }
  es.insert(es.end(), extra.begin(), extra.end());
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());

  std::vector<char> cls(es.size());
  for (std::size_t j = 0; j < es.size(); ++j) cls[j] = allowed(es[j], params);

  bool in_band = cls[0];
  double band_lo = es[0];
  for (std::size_t j = 1; j < es.size(); ++j) {
    if (cls[j] == cls[j - 1]) continue;
    const double edge = refine_edge(es[j - 1], es[j], params, out.tolerance);
    out.max_edge_residual = std::max(out.max_edge_residual, std::abs(excess(edge, params)));
    if (cls[j]) {
      band_lo = edge;
    } else {
      out.bands.push_back({band_lo, edge});
    }
    in_band = cls[j];
  }
  if (in_band) {
    out.bands.push_back({band_lo, e_max});
    out.last_band_open = true;
  }
  if (out.bands.empty()) {
    out.warnings.emplace_back("no allowed energies below E_max");
    out.bottom_gap = Interval{0.0, e_max};
    return out;
  }
  if (!cls[0]) out.bottom_gap = Interval{0.0, out.bands.front().lo};
  for (std::size_t i = 1; i < out.bands.size(); ++i) out.gaps.push_back({out.bands[i - 1].hi, out.bands[i].lo});
  return out;
}

double bloch_k(double E, const KPParams& params) {
  const double f = kp_dispersion(E, params);
  if (std::abs(f) > 1.0 + kAllowedSlack) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "energy %.6g lies in a gap (f = %.6g)", E, f);
    throw GapEnergyError(buf, f);
  }
  return std::acos(std::clamp(f, -1.0, 1.0)) / params.period();
}

}  // namespace qmkit::bands
