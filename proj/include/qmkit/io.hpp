#pragma once

#include <iosfwd>
#include <string>

#include "qmkit/fourier.hpp"
#include "qmkit/grid.hpp"
#include "qmkit/hamiltonian.hpp"

namespace qmkit::io {

/// printf("%.*e") with `significant` digits (3..17).
std::string format_sci(double v, int significant);

/// CSV with header `x,re,im`, one row per grid node.
void write_wavefunction_csv(std::ostream& out, const gridops::WaveFunction& psi, int significant = 17);

/// Reads the `x,re,im` format back. The x column must be a uniform grid (to
/// 1e-3 of the spacing). Throws ParseError on malformed input.
gridops::WaveFunction read_wavefunction_csv(std::istream& in);

/// CSV with header `p,re,im`.
void write_momentum_csv(std::ostream& out, const fourier::MomentumWaveFunction& phi, int significant = 17);

/// {"energies": [...], "grid": {"x_min", "x_max", "n_points"}, "mass", "hbar",
///  "description", "residuals", "warnings"}
std::string spectrum_json(const gridops::Spectrum& spectrum, int indent = 2);

}  // namespace qmkit::io
