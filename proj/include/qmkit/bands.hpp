#pragma once

#include <optional>
#include <string>
#include <vector>

/// Kronig-Penney chain: free regions of width 2a separated by barriers of
/// width b and height V, period c = 2a + b.
namespace qmkit::bands {

struct KPParams {
  double a;
  double b;
  double V;
  double mass = 1.0;
  double hbar = 1.0;

  /// Throws DomainError unless a, b, mass, hbar > 0 and V >= 0 (V = 0 is the
  /// free-particle limit).
  void validate() const;
  double period() const noexcept { return 2.0 * a + b; }
};

/// f(E) with cos(Kc) = f(E). For E < V
///   f = cos(2ka) cosh(kappa b) + (kappa^2 - k^2)/(2 kappa k) sin(2ka) sinh(kappa b),
/// continued to E > V through kappa = i k2 and evaluated by series near E = V.
/// Throws DomainError for E <= 0.
double kp_dispersion(double E, const KPParams& params);

struct Interval {
  double lo;
  double hi;
  double width() const noexcept { return hi - lo; }
};

struct BandStructure {
  std::vector<Interval> bands;
  /// Forbidden intervals between consecutive bands.
  std::vector<Interval> gaps;
  /// Forbidden interval from 0 up to the first band, if any.
  std::optional<Interval> bottom_gap;
  /// True when the last band is cut off by E_max rather than ending at an edge.
  bool last_band_open = false;
  double e_max;
  std::size_t n_scan;
  double tolerance;
  /// max ||f(E)| - 1| over the reported band edges.
  double max_edge_residual = 0.0;
  std::vector<std::string> warnings;
};

/// Scans (0, E_max] with n_scan uniform steps, refines local maxima of |f| so
/// that narrow gaps between scan points are not missed, and bisects every
/// change of sign of |f| - 1. A point counts as allowed when |f| <= 1 + 1e-12.
BandStructure kp_bands(const KPParams& params, double e_max, std::size_t n_scan = 8000);

/// K = arccos(f(E)) / c in [0, pi/c]. Throws GapEnergyError when |f(E)| > 1.
double bloch_k(double E, const KPParams& params);

}  // namespace qmkit::bands
