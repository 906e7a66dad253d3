#include "qmkit/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "qmkit/error.hpp"

namespace qmkit::io {

std::string format_sci(double v, int significant) {
  if (significant < 3 || significant > 17) throw DomainError("precision must be in 3..17");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", significant - 1, v);
  return buf;
}

void write_wavefunction_csv(std::ostream& out, const gridops::WaveFunction& psi, int significant) {
  out << "x,re,im\n";
  for (std::size_t i = 0; i < psi.size(); ++i) {
    out << format_sci(psi.grid().x(i), significant) << ',' << format_sci(psi[i].real(), significant) << ','
        << format_sci(psi[i].imag(), significant) << '\n';
  }
}

gridops::WaveFunction read_wavefunction_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty wave function file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,re,im") throw ParseError("expected header 'x,re,im', got '" + line + "'");
  std::vector<double> xs;
  std::vector<gridops::cplx> vals;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    double x = 0.0;
    double re = 0.0;
    double im = 0.0;
    char c1 = 0;
    char c2 = 0;
    std::istringstream ss(line);
    if (!(ss >> x >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',') {
      throw ParseError("malformed row " + std::to_string(row) + ": '" + line + "'");
    }
    xs.push_back(x);
    vals.emplace_back(re, im);
  }
  if (xs.size() < 3) throw ParseError("wave function file needs at least 3 rows");
  const gridops::Grid1D grid(xs.front(), xs.back(), xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (std::abs(xs[i] - grid.x(i)) > 1e-3 * grid.dx()) throw ParseError("x column is not a uniform grid");
  }
  return gridops::WaveFunction(grid, std::move(vals));
}

void write_momentum_csv(std::ostream& out, const fourier::MomentumWaveFunction& phi, int significant) {
  out << "p,re,im\n";
  for (std::size_t k = 0; k < phi.size(); ++k) {
    out << format_sci(phi.p(k), significant) << ',' << format_sci(phi.values()[k].real(), significant) << ','
        << format_sci(phi.values()[k].imag(), significant) << '\n';
  }
}

std::string spectrum_json(const gridops::Spectrum& spectrum, int indent) {
  nlohmann::ordered_json j;
  j["energies"] = spectrum.energies;
  j["grid"] = {{"x_min", spectrum.grid.x_min()},
               {"x_max", spectrum.grid.x_max()},
               {"n_points", spectrum.grid.size()}};
  j["mass"] = spectrum.mass;
  j["hbar"] = spectrum.hbar;
  j["description"] = spectrum.description;
  j["residuals"] = spectrum.residuals;
  j["warnings"] = spectrum.warnings;
  return j.dump(indent);
}

}  // namespace qmkit::io
