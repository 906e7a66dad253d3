#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmkit/analytic.hpp"
#include "qmkit/bands.hpp"
#include "qmkit/error.hpp"
#include "qmkit/exercises.hpp"
#include "qmkit/fourier.hpp"
#include "qmkit/hamiltonian.hpp"
#include "qmkit/io.hpp"
#include "qmkit/manybody.hpp"
#include "qmkit/quanta.hpp"
#include "qmkit/scattering.hpp"
#include "qmkit/spin.hpp"
#include "qmkit/units.hpp"

using namespace qmkit;
using json = nlohmann::ordered_json;

namespace {

/// Bad flag values that CLI11 cannot validate on its own; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Table, Csv, Json };

using Cell = std::variant<double, long long, std::string>;
using Record = std::vector<std::pair<std::string, Cell>>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Config {
  std::string units = "si";
  std::string out = "table";
  int precision = 10;
  std::string output;
  unsigned seed = 1;
  std::vector<std::string> overrides;

  Format format() const { return out == "csv" ? Format::Csv : out == "json" ? Format::Json : Format::Table; }

  UnitSystem unit_system() const {
    UnitSystem u = units == "natural" ? UnitSystem::natural() : UnitSystem::si();
    for (const auto& o : overrides) {
      const auto eq = o.find('=');
      if (eq == std::string::npos) throw UsageError("--set expects NAME=VALUE, got '" + o + "'");
      double v = 0.0;
      try {
        v = std::stod(o.substr(eq + 1));
      } catch (const std::exception&) {
        throw UsageError("--set value is not a number: '" + o + "'");
      }
      u = u.with_override(o.substr(0, eq), v);
    }
    return u;
  }
};

class Printer {
 public:
  Printer(const Config& cfg, std::ostream& os) : cfg_(cfg), os_(os) {}

  std::ostream& stream() { return os_; }
  int precision() const { return cfg_.precision; }
  Format format() const { return cfg_.format(); }

  std::string text(const Cell& c) const {
    if (const auto* d = std::get_if<double>(&c)) return io::format_sci(*d, cfg_.precision);
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
  }

  static json to_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? json(*d) : json(nullptr);
    if (const auto* i = std::get_if<long long>(&c)) return *i;
    return std::get<std::string>(c);
  }

  void record(const Record& r) {
    switch (format()) {
      case Format::Json: {
        json j = json::object();
        for (const auto& [k, v] : r) j[k] = to_json(v);
        os_ << j.dump(2) << '\n';
        break;
      }
      case Format::Csv: {
        for (std::size_t i = 0; i < r.size(); ++i) os_ << (i ? "," : "") << r[i].first;
        os_ << '\n';
        for (std::size_t i = 0; i < r.size(); ++i) os_ << (i ? "," : "") << text(r[i].second);
        os_ << '\n';
        break;
      }
      case Format::Table: {
        std::size_t w = 0;
        for (const auto& f : r) w = std::max(w, f.first.size());
        for (const auto& [k, v] : r) os_ << k << std::string(w - k.size(), ' ') << " = " << text(v) << '\n';
        break;
      }
    }
  }

  void table(const Table& t) {
    switch (format()) {
      case Format::Json: {
        json arr = json::array();
        for (const auto& row : t.rows) {
          json j = json::object();
          for (std::size_t i = 0; i < t.columns.size(); ++i) j[t.columns[i]] = to_json(row[i]);
          arr.push_back(std::move(j));
        }
        os_ << arr.dump(2) << '\n';
        break;
      }
      case Format::Csv:
        csv(t);
        break;
      case Format::Table: {
        std::vector<std::size_t> w(t.columns.size());
        std::vector<std::vector<std::string>> cells;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = t.columns[i].size();
        for (const auto& row : t.rows) {
          cells.emplace_back();
          for (std::size_t i = 0; i < row.size(); ++i) {
            cells.back().push_back(text(row[i]));
            w[i] = std::max(w[i], cells.back().back().size());
          }
        }
        auto line = [&](const std::vector<std::string>& v) {
          std::string s;
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += "  ";
            s += std::string(w[i] - v[i].size(), ' ') + v[i];
          }
          os_ << s << '\n';
        };
        line(t.columns);
        for (const auto& c : cells) line(c);
        break;
      }
    }
  }

  /// Plot-ready data: CSV unless JSON was requested.
  void data(const Table& t) {
    if (format() == Format::Json) {
      table(t);
    } else {
      csv(t);
    }
  }

  void json_value(const json& j) { os_ << j.dump(2) << '\n'; }

 private:
  void csv(const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os_ << (i ? "," : "") << t.columns[i];
    os_ << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os_ << (i ? "," : "") << text(row[i]);
      os_ << '\n';
    }
  }

  const Config& cfg_;
  std::ostream& os_;
};

void warn(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

double parse_number(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError(what + ": '" + s + "' is not a number");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

/// "start:stop:count", inclusive. A trailing `unit_suffix` on start or stop
/// multiplies it by `unit`.
std::vector<double> parse_range(const std::string& spec, const std::string& what, char unit_suffix = 0,
                                double unit = 1.0) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw UsageError(what + " expects start:stop:count, got '" + spec + "'");
  auto value = [&](std::string s) {
    double scale = 1.0;
    if (unit_suffix && !s.empty() && s.back() == unit_suffix) {
      s.pop_back();
      scale = unit;
      if (s.empty()) s = "1";
    }
    return parse_number(s, what) * scale;
  };
  const double a = value(parts[0]);
  const double b = value(parts[1]);
  const double n = parse_number(parts[2], what);
  if (n < 1 || n != std::floor(n)) throw UsageError(what + ": count must be a positive integer");
  const auto count = static_cast<std::size_t>(n);
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = count == 1 ? a : a + (b - a) * static_cast<double>(i) / (count - 1.0);
  return v;
}

json matrix_json(const Eigen::MatrixXcd& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array(), c = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      r.push_back(m(i, j).real());
      c.push_back(m(i, j).imag());
    }
    re.push_back(std::move(r));
    im.push_back(std::move(c));
  }
  return {{"re", re}, {"im", im}};
}

void matrix_rows(Table& t, const std::string& name, const Eigen::MatrixXcd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      t.rows.push_back({name, static_cast<long long>(i), static_cast<long long>(j), m(i, j).real(), m(i, j).imag()});
}

double particle_mass(const PhysicalConstants& c, const std::string& particle, std::optional<double> mass) {
  if (mass) return *mass;
  if (particle == "proton") return c.m_p;
  if (particle == "neutron") return c.m_n;
  return c.m_e;
}

// Potential file: header `x,V`, uniform x column.
std::pair<gridops::Grid1D, std::vector<double>> read_potential_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open potential file '" + path + "'");
  std::string line;
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,V") throw ParseError("potential file needs header 'x,V', got '" + line + "'");
  std::vector<double> xs, vs;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    double x = 0.0, v = 0.0;
    char comma = 0;
    if (!(ss >> x >> comma >> v) || comma != ',') throw ParseError("malformed row " + std::to_string(row));
    xs.push_back(x);
    vs.push_back(v);
  }
  if (xs.size() < 3) throw ParseError("potential file needs at least 3 rows");
  gridops::Grid1D grid(xs.front(), xs.back(), xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (std::abs(xs[i] - grid.x(i)) > 1e-3 * grid.dx()) throw ParseError("x column is not a uniform grid");
  return {grid, vs};
}

spin::cplx parse_amplitude(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() == 1) return parse_number(parts[0], "--state");
  if (parts.size() == 2) return {parse_number(parts[0], "--state"), parse_number(parts[1], "--state")};
  throw UsageError("--state amplitudes are RE or RE:IM");
}

manybody::Statistics parse_statistics(const std::string& kind) {
  if (kind == "mb") return manybody::Statistics::MaxwellBoltzmann;
  if (kind == "be") return manybody::Statistics::BoseEinstein;
  return manybody::Statistics::FermiDirac;
}

Table state_table(const manybody::ManyBodyState& s) {
  Table t{{"labels", "re", "im"}, {}};
  for (const auto& [labels, amp] : s.terms()) {
    std::string joined;
    for (std::size_t i = 0; i < labels.size(); ++i) joined += (i ? " " : "") + labels[i];
    t.rows.push_back({joined, amp.real(), amp.imag()});
  }
  return t;
}

json state_json(const manybody::ManyBodyState& s) {
  json j = {{"particles", s.particle_count()}, {"zero", s.is_zero()}};
  if (s.is_zero()) j["reason"] = s.zero_reason();
  json terms = json::array();
  for (const auto& [labels, amp] : s.terms()) terms.push_back({{"labels", labels}, {"re", amp.real()}, {"im", amp.imag()}});
  j["terms"] = terms;
  return j;
}

void print_state(Printer& p, const manybody::ManyBodyState& s) {
  if (p.format() == Format::Json) {
    p.json_value(state_json(s));
  } else if (s.is_zero()) {
    p.record({{"zero", std::string("true")}, {"reason", s.zero_reason()}});
  } else {
    p.table(state_table(s));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qmkit: quantum-mechanics numerics toolkit"};
  app.fallthrough();
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--units", cfg.units, "unit system")->check(CLI::IsMember({"si", "natural"}));
  app.add_option("--out", cfg.out, "output format")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--precision", cfg.precision, "significant digits")->check(CLI::Range(3, 17));
  app.add_option("--output", cfg.output, "write to FILE instead of stdout");
  app.add_option("--seed", cfg.seed, "seed for sampled outputs");
  app.add_option("--set", cfg.overrides, "override a constant, NAME=VALUE")->take_all();

  std::function<void(Printer&)> action;
  int status = 0;
  auto leaf = [&](CLI::App* sub, std::function<void(Printer&)> f) {
    sub->fallthrough();
    sub->callback([&action, f] { action = f; });
  };

  // constants
  bool constants_json = false;
  auto* constants = app.add_subcommand("constants", "physical constants of the unit system");
  constants->add_flag("--json", constants_json, "same as --out json");
  leaf(constants, [&](Printer& p) {
    const auto u = cfg.unit_system();
    Record r{{"units", cfg.units}};
    for (const auto& n : UnitSystem::constant_names()) r.emplace_back(n, u.get(n));
    std::string over;
    for (const auto& o : u.overridden()) over += (over.empty() ? "" : " ") + o;
    if (!over.empty()) r.emplace_back("overridden", over);
    p.record(r);
  });

  // quanta
  auto* quanta_cmd = app.add_subcommand("quanta", "photons, matter waves, Bohr model");
  quanta_cmd->require_subcommand(1);
  quanta_cmd->fallthrough();

  std::optional<double> q_freq, q_wavelength;
  auto* photon = quanta_cmd->add_subcommand("photon", "photon energy, momentum and wavelength");
  auto* photon_src = photon->add_option_group("source")->require_option(1);
  photon_src->add_option("--frequency", q_freq, "Hz");
  photon_src->add_option("--wavelength", q_wavelength, "m");
  leaf(photon, [&](Printer& p) {
    const auto u = cfg.unit_system();
    const double f = q_freq ? *q_freq : u.constants().c / *q_wavelength;
    const auto ph = quanta::photon_props(f, u);
    p.record({{"frequency", f},
              {"energy", ph.energy},
              {"energy_eV", ph.energy / u.ev()},
              {"momentum", ph.momentum},
              {"wavelength", ph.wavelength},
              {"omega", ph.omega},
              {"k", ph.k}});
  });

  std::string q_particle = "electron";
  std::optional<double> q_mass;
  double q_speed = 0.0;
  auto* matter = quanta_cmd->add_subcommand("matter", "de Broglie wavelength");
  matter->add_option("--particle", q_particle)->check(CLI::IsMember({"electron", "proton", "neutron"}));
  matter->add_option("--mass", q_mass, "overrides --particle");
  matter->add_option("--speed", q_speed)->required();
  leaf(matter, [&](Printer& p) {
    const auto u = cfg.unit_system();
    const auto w = quanta::matter_wave(particle_mass(u.constants(), q_particle, q_mass), q_speed, u);
    p.record({{"momentum", w.momentum}, {"wavelength", w.wavelength}, {"k", w.k}});
  });

  double q_work = 0.0, q_pe_freq = 0.0;
  auto* photoelectric = quanta_cmd->add_subcommand("photoelectric", "photo-electron kinetic energy");
  photoelectric->add_option("--frequency", q_pe_freq, "Hz")->required();
  photoelectric->add_option("--work-function", q_work, "eV")->required();
  leaf(photoelectric, [&](Printer& p) {
    const auto u = cfg.unit_system();
    const double threshold = quanta::photoelectric_threshold(q_work, u);
    p.record({{"kinetic_eV", quanta::photoelectric_kinetic(q_pe_freq, q_work, u)}, {"threshold_frequency", threshold}});
  });

  double f_lambda = 0.0, f_L = 0.0, f_d = 0.0;
  int f_n = 3;
  auto* fringes = quanta_cmd->add_subcommand("fringes", "two-slit bright fringes");
  fringes->add_option("--wavelength", f_lambda)->required();
  fringes->add_option("--L", f_L, "screen distance")->required();
  fringes->add_option("--d", f_d, "slit separation")->required();
  fringes->add_option("--n-max", f_n);
  leaf(fringes, [&](Printer& p) {
    const auto fp = quanta::fringe_positions(f_lambda, f_L, f_d, f_n);
    warn(fp.warnings);
    Table t{{"order", "position"}, {}};
    for (std::size_t i = 0; i < fp.orders.size(); ++i) t.rows.push_back({static_cast<long long>(fp.orders[i]), fp.positions[i]});
    p.table(t);
  });

  int b_n = 1;
  auto* bohr = quanta_cmd->add_subcommand("bohr", "Bohr orbit");
  bohr->add_option("--n", b_n);
  leaf(bohr, [&](Printer& p) {
    const auto u = cfg.unit_system();
    const auto o = quanta::bohr_orbit(b_n, u);
    p.record({{"n", static_cast<long long>(o.n)},
              {"radius", o.radius},
              {"speed", o.speed},
              {"energy", o.energy},
              {"energy_eV", o.energy / u.ev()}});
  });

  int r_n1 = 1;
  std::string r_n2 = "2";
  auto* rydberg = quanta_cmd->add_subcommand("rydberg", "hydrogen line between n1 and n2 (n2 may be inf)");
  rydberg->add_option("--n1", r_n1);
  rydberg->add_option("--n2", r_n2);
  leaf(rydberg, [&](Printer& p) {
    const auto u = cfg.unit_system();
    std::optional<quanta::Level> upper;
    if (r_n2 == "inf") {
      upper = quanta::Level::infinity();
    } else {
      const double n2 = parse_number(r_n2, "--n2");
      if (n2 != std::floor(n2)) throw UsageError("--n2 must be an integer or inf");
      upper = quanta::Level(static_cast<int>(n2));
    }
    const auto line = quanta::rydberg_wavelength(r_n1, *upper, u);
    p.record({{"wavelength", line.wavelength},
              {"photon_energy", line.photon_energy},
              {"photon_energy_eV", line.photon_energy / u.ev()},
              {"inverse_wavelength", line.inverse_wavelength}});
  });

  // solve
  std::string s_potential;
  double s_L = 1.0, s_omega = 1.0, s_xmax = 12.0, s_mass = 1.0, s_hbar = 1.0;
  std::size_t s_points = 2001, s_states = 3, s_wavefunction = 0;
  std::string s_boundary;
  auto* solve = app.add_subcommand("solve", "finite-difference eigenstates (dimensionless, default hbar = m = 1)");
  solve->add_option("--potential", s_potential, "box, sho or a CSV file with header x,V")->required();
  solve->add_option("--L", s_L, "box length");
  solve->add_option("--omega", s_omega, "oscillator frequency");
  solve->add_option("--xmax", s_xmax, "oscillator grid spans [-xmax, xmax]");
  solve->add_option("--points", s_points)->check(CLI::Range(std::size_t{5}, std::size_t{10000000}));
  solve->add_option("--states", s_states)->check(CLI::PositiveNumber);
  solve->add_option("--mass", s_mass);
  solve->add_option("--hbar", s_hbar);
  solve->add_option("--boundary", s_boundary, "hard or truncated")->check(CLI::IsMember({"hard", "truncated"}));
  solve->add_option("--wavefunction", s_wavefunction, "emit state N (1-based) as x,re,im CSV");
  leaf(solve, [&](Printer& p) {
    std::optional<gridops::Hamiltonian> h;
    gridops::BoundaryKind boundary = gridops::BoundaryKind::HardWall;
    if (s_potential == "box") {
      gridops::Grid1D g(0.0, s_L, s_points);
      h.emplace(gridops::assemble_hamiltonian(g, std::vector<double>(g.size(), 0.0), s_mass, s_hbar));
    } else if (s_potential == "sho") {
      gridops::Grid1D g(-s_xmax, s_xmax, s_points);
      const double k = s_mass * s_omega * s_omega;
      h.emplace(gridops::assemble_hamiltonian(g, [k](double x) { return 0.5 * k * x * x; }, s_mass, s_hbar));
      boundary = gridops::BoundaryKind::Truncated;
    } else {
      auto [g, v] = read_potential_csv(s_potential);
      h.emplace(gridops::assemble_hamiltonian(g, v, s_mass, s_hbar));
    }
    if (s_boundary == "hard") boundary = gridops::BoundaryKind::HardWall;
    if (s_boundary == "truncated") boundary = gridops::BoundaryKind::Truncated;
    const auto sp = gridops::solve_eigen(*h, std::max(s_states, s_wavefunction), boundary);
    warn(sp.warnings);
    if (s_wavefunction > 0) {
      io::write_wavefunction_csv(p.stream(), sp.states[s_wavefunction - 1], p.precision());
      return;
    }
    if (p.format() == Format::Json) {
      p.stream() << io::spectrum_json(sp) << '\n';
      return;
    }
    Table t{{"n", "energy", "residual"}, {}};
    for (std::size_t i = 0; i < sp.size(); ++i)
      t.rows.push_back({static_cast<long long>(i + 1), sp.energies[i], sp.residuals[i]});
    p.table(t);
  });

  // hydrogen
  int h_n = 1, h_l = 0, h_m = 0;
  double h_Z = 1.0, h_theta = 0.0, h_phi = 0.0;
  std::string h_sample;
  auto* hydrogen = app.add_subcommand("hydrogen", "hydrogen-like orbitals");
  hydrogen->add_option("--n", h_n);
  hydrogen->add_option("--l", h_l);
  hydrogen->add_option("--m", h_m);
  hydrogen->add_option("--Z", h_Z);
  hydrogen->add_option("--sample-r", h_sample, "start:stop:count; an 'a' suffix means Bohr radii");
  hydrogen->add_option("--theta", h_theta, "slice angle for the density");
  hydrogen->add_option("--phi", h_phi);
  leaf(hydrogen, [&](Printer& p) {
    const auto u = cfg.unit_system();
    const auto st = analytic::hydrogen_state(h_n, h_l, h_m, u, h_Z);
    if (h_sample.empty()) {
      p.record({{"n", static_cast<long long>(h_n)},
                {"l", static_cast<long long>(h_l)},
                {"m", static_cast<long long>(h_m)},
                {"label", analytic::orbital_label(h_n, h_l)},
                {"energy", st.energy()},
                {"energy_eV", st.energy() / u.ev()},
                {"length_scale", st.length_scale()},
                {"degeneracy", static_cast<long long>(analytic::hydrogen_degeneracy(h_n))}});
      return;
    }
    Table t{{"r", "R", "density"}, {}};
    for (double r : parse_range(h_sample, "--sample-r", 'a', st.length_scale()))
      t.rows.push_back({r, st.radial(r), std::norm(st(r, h_theta, h_phi))});
    p.data(t);
  });

  // sho
  int o_n = 0, o_dim = 8;
  double o_mass = 1.0, o_omega = 1.0, o_hbar = 1.0;
  bool o_matrices = false;
  std::string o_sample;
  auto* sho = app.add_subcommand("sho", "harmonic oscillator states and ladder matrices");
  sho->add_option("--n", o_n);
  sho->add_option("--dim", o_dim);
  sho->add_option("--mass", o_mass);
  sho->add_option("--omega", o_omega);
  sho->add_option("--hbar", o_hbar);
  sho->add_flag("--matrices", o_matrices, "dump a, a+, X, P, H in the truncated basis");
  sho->add_option("--sample-x", o_sample, "start:stop:count");
  leaf(sho, [&](Printer& p) {
    if (o_matrices) {
      const auto b = analytic::oscillator_basis(o_dim, o_mass, o_omega, o_hbar);
      if (p.format() == Format::Json) {
        p.json_value({{"dim", b.dim},
                      {"a", matrix_json(b.a)},
                      {"a_dagger", matrix_json(b.a_dagger)},
                      {"x", matrix_json(b.x)},
                      {"p", matrix_json(b.p)},
                      {"hamiltonian", matrix_json(b.hamiltonian)}});
      } else {
        Table t{{"matrix", "row", "col", "re", "im"}, {}};
        matrix_rows(t, "a", b.a);
        matrix_rows(t, "a_dagger", b.a_dagger);
        matrix_rows(t, "x", b.x);
        matrix_rows(t, "p", b.p);
        matrix_rows(t, "hamiltonian", b.hamiltonian);
        p.table(t);
      }
      return;
    }
    const auto psi = analytic::sho_wavefunction(o_n, o_mass, o_omega, o_hbar);
    if (!o_sample.empty()) {
      Table t{{"x", "psi"}, {}};
      for (double x : parse_range(o_sample, "--sample-x")) t.rows.push_back({x, psi(x)});
      p.data(t);
      return;
    }
    const auto un = analytic::sho_uncertainties(o_n, o_mass, o_omega, o_hbar);
    p.record({{"n", static_cast<long long>(o_n)},
              {"energy", psi.energy()},
              {"delta_x", un.delta_x},
              {"delta_p", un.delta_p},
              {"product", un.product}});
  });

  // transform
  std::string t_in;
  double t_hbar = 1.0;
  bool t_parseval = false;
  auto* transform = app.add_subcommand("transform", "momentum representation of an x,re,im CSV wave function");
  transform->add_option("--in", t_in)->required();
  transform->add_option("--hbar", t_hbar);
  transform->add_flag("--parseval", t_parseval, "print both norms instead of the transform");
  leaf(transform, [&](Printer& p) {
    std::ifstream in(t_in);
    if (!in) throw ParseError("cannot open '" + t_in + "'");
    const auto psi = io::read_wavefunction_csv(in);
    const auto phi = fourier::fourier_transform(psi, t_hbar);
    warn(phi.warnings);
    if (t_parseval) {
      const double nx = psi.norm_squared(), np = phi.norm_squared();
      p.record({{"norm_x", nx}, {"norm_p", np}, {"difference", np - nx}, {"mean_p", phi.mean()},
                {"delta_p", std::sqrt(phi.variance())}});
      return;
    }
    if (p.format() == Format::Json) {
      Table t{{"p", "re", "im"}, {}};
      for (std::size_t k = 0; k < phi.size(); ++k) t.rows.push_back({phi.p(k), phi.values()[k].real(), phi.values()[k].imag()});
      p.table(t);
      return;
    }
    io::write_momentum_csv(p.stream(), phi, p.precision());
  });

  // scatter
  auto* scatter = app.add_subcommand("scatter", "steps, barriers and wells (SI: energies in eV)");
  scatter->require_subcommand(1);
  scatter->fallthrough();
  std::string sc_particle = "electron";
  std::optional<double> sc_mass;
  auto mass_options = [&](CLI::App* sub) {
    sub->add_option("--particle", sc_particle)->check(CLI::IsMember({"electron", "proton", "neutron"}));
    sub->add_option("--mass", sc_mass, "overrides --particle");
  };

  std::optional<double> sc_E;
  std::string sc_sweep;
  double sc_V = 0.0, sc_width = 0.0;
  bool sc_wide = false;
  auto* step = scatter->add_subcommand("step", "potential step at x = 0");
  auto* step_e = step->add_option_group("energy")->require_option(1);
  step_e->add_option("--E", sc_E);
  step_e->add_option("--sweep", sc_sweep, "E0:E1:N");
  step->add_option("--V", sc_V)->required();
  mass_options(step);
  auto* barrier = scatter->add_subcommand("barrier", "rectangular barrier of the given width");
  auto* barrier_e = barrier->add_option_group("energy")->require_option(1);
  barrier_e->add_option("--E", sc_E);
  barrier_e->add_option("--sweep", sc_sweep, "E0:E1:N");
  barrier->add_option("--V", sc_V)->required();
  barrier->add_option("--width", sc_width, "full width 2a")->required();
  barrier->add_flag("--wide", sc_wide, "thick-barrier estimate");
  mass_options(barrier);

  auto scatter_run = [&](Printer& p, bool is_barrier) {
    const auto u = cfg.unit_system();
    const auto& c = u.constants();
    const double m = particle_mass(c, sc_particle, sc_mass), e = u.ev();
    const std::vector<double> energies = sc_E ? std::vector<double>{*sc_E} : parse_range(sc_sweep, "--sweep");
    Table t;
    if (is_barrier && sc_wide) {
      t.columns = {"E", "T", "log10T", "mu_a"};
      for (double E : energies) {
        const auto w = scattering::barrier_transmission_wide(E * e, sc_V * e, 0.5 * sc_width, m, c.hbar);
        warn(w.warnings);
        t.rows.push_back({E, w.T, w.log10_T, w.mu_a});
      }
    } else {
      t.columns = {"E", "R", "T", "log10T"};
      for (double E : energies) {
        const auto r = is_barrier ? scattering::barrier_transmission(E * e, sc_V * e, 0.5 * sc_width, m, c.hbar)
                                  : scattering::step_scatter(E * e, sc_V * e, m, c.hbar);
        warn(r.warnings);
        t.rows.push_back({E, r.R, r.T, r.log10_T});
      }
    }
    if (sc_E && p.format() != Format::Csv) {
      Record r;
      for (std::size_t i = 0; i < t.columns.size(); ++i) r.emplace_back(t.columns[i], t.rows[0][i]);
      p.record(r);
    } else {
      p.data(t);
    }
  };
  leaf(step, [&](Printer& p) { scatter_run(p, false); });
  leaf(barrier, [&](Printer& p) { scatter_run(p, true); });

  double w_V = 0.0, w_L = 0.0;
  auto* well = scatter->add_subcommand("well", "bound states of a finite well on (-L, L)");
  well->add_option("--V", w_V, "depth")->required();
  well->add_option("--L", w_L, "half width")->required();
  mass_options(well);
  leaf(well, [&](Printer& p) {
    const auto u = cfg.unit_system();
    const auto& c = u.constants();
    const double m = particle_mass(c, sc_particle, sc_mass);
    const auto states = scattering::finite_well_bound_states(w_V * u.ev(), w_L, m, c.hbar);
    Table t{{"index", "energy", "parity", "z"}, {}};
    for (std::size_t i = 0; i < states.size(); ++i)
      t.rows.push_back({static_cast<long long>(i), states[i].energy / u.ev(), std::string(states[i].even ? "even" : "odd"),
                        states[i].z});
    p.table(t);
  });

  // spin
  auto* spin_cmd = app.add_subcommand("spin", "spin-1/2 and angular momentum");
  spin_cmd->require_subcommand(1);
  spin_cmd->fallthrough();

  double sp_theta = 0.0, sp_phi = 0.0, sp_B = 1.0, sp_gamma = 1.0, sp_hbar = 1.0;
  std::string sp_t = "0:1:11";
  auto* larmor = spin_cmd->add_subcommand("larmor", "<S>(t) under H = -gamma B S_z");
  larmor->add_option("--theta", sp_theta);
  larmor->add_option("--phi", sp_phi);
  larmor->add_option("--B", sp_B);
  larmor->add_option("--gamma", sp_gamma);
  larmor->add_option("--hbar", sp_hbar);
  larmor->add_option("--t", sp_t, "t0:t1:N");
  leaf(larmor, [&](Printer& p) {
    Table t{{"t", "Sx", "Sy", "Sz"}, {}};
    for (double time : parse_range(sp_t, "--t")) {
      const auto q = spin::larmor_quantum({sp_theta, sp_phi}, sp_gamma, sp_B, time, sp_hbar);
      t.rows.push_back({time, q.expectation(0), q.expectation(1), q.expectation(2)});
    }
    p.data(t);
  });

  std::string m_state = "1,0", m_axis;
  std::size_t m_samples = 0;
  auto* measure = spin_cmd->add_subcommand("measure", "outcome probabilities along an axis");
  measure->add_option("--state", m_state, "up,down amplitudes, each RE or RE:IM");
  measure->add_option("--axis", m_axis)->check(CLI::IsMember({"x", "y", "z"}));
  measure->add_option("--theta", sp_theta);
  measure->add_option("--phi", sp_phi);
  measure->add_option("--samples", m_samples, "simulate N measurements (uses --seed)");
  leaf(measure, [&](Printer& p) {
    const auto parts = split(m_state, ',');
    if (parts.size() != 2) throw UsageError("--state needs two amplitudes");
    spin::Direction dir{sp_theta, sp_phi};
    if (m_axis == "x") dir = spin::Direction::x();
    if (m_axis == "y") dir = spin::Direction::y();
    if (m_axis == "z") dir = spin::Direction::z();
    const auto m = spin::measure_spin({parse_amplitude(parts[0]), parse_amplitude(parts[1])}, dir);
    Record r{{"p_plus", m.p_plus}, {"p_minus", m.p_minus}};
    if (m_samples > 0) {
      std::mt19937_64 rng(cfg.seed);
      std::bernoulli_distribution up(m.p_plus);
      long long plus = 0;
      for (std::size_t i = 0; i < m_samples; ++i) plus += up(rng) ? 1 : 0;
      r.emplace_back("plus_count", plus);
      r.emplace_back("minus_count", static_cast<long long>(m_samples) - plus);
    }
    p.record(r);
  });

  double z_B = 1.0, z_gamma = 1.76e11;
  auto* zeeman = spin_cmd->add_subcommand("zeeman", "spin Zeeman splitting");
  zeeman->add_option("--B", z_B);
  zeeman->add_option("--gamma", z_gamma);
  leaf(zeeman, [&](Printer& p) {
    const auto u = cfg.unit_system();
    const auto z = spin::zeeman_splitting(z_B, z_gamma, u.hbar());
    p.record({{"delta_E", z.delta_E}, {"delta_E_eV", z.delta_E / u.ev()}, {"frequency", z.frequency}});
  });

  double j_j = 0.5;
  auto* matrices = spin_cmd->add_subcommand("matrices", "angular momentum matrices for spin j");
  matrices->add_option("--j", j_j);
  matrices->add_option("--hbar", sp_hbar);
  leaf(matrices, [&](Printer& p) {
    const auto J = spin::angular_momentum_matrices(j_j, sp_hbar);
    const auto ladder = spin::ladder_operators(J.Jx, J.Jy, J.Jz, sp_hbar);
    if (p.format() == Format::Json) {
      p.json_value({{"j", j_j},
                    {"Jx", matrix_json(J.Jx)},
                    {"Jy", matrix_json(J.Jy)},
                    {"Jz", matrix_json(J.Jz)},
                    {"J_plus", matrix_json(ladder.plus)},
                    {"J_minus", matrix_json(ladder.minus)}});
      return;
    }
    Table t{{"matrix", "row", "col", "re", "im"}, {}};
    matrix_rows(t, "Jx", J.Jx);
    matrix_rows(t, "Jy", J.Jy);
    matrix_rows(t, "Jz", J.Jz);
    p.table(t);
  });

  // stats
  auto* stats = app.add_subcommand("stats", "occupation statistics (SI: energies in eV)");
  stats->require_subcommand(1);
  stats->fallthrough();
  std::string st_kind = "fd";
  double st_mu = 0.0, st_T = 300.0;
  std::string st_E = "0:1:11";
  auto* occupation = stats->add_subcommand("occupation", "n(E) for mb, be or fd");
  occupation->add_option("--kind", st_kind)->check(CLI::IsMember({"mb", "be", "fd"}));
  occupation->add_option("--mu", st_mu);
  occupation->add_option("--T", st_T);
  occupation->add_option("--E", st_E, "E0:E1:N");
  auto k_b = [&] { return cfg.units == "natural" ? cfg.unit_system().constants().k_boltzmann : manybody::kBoltzmannEv; };
  leaf(occupation, [&](Printer& p) {
    const manybody::OccupationModel model{parse_statistics(st_kind), st_T, st_mu, k_b()};
    Table t{{"E", "n"}, {}};
    for (double E : parse_range(st_E, "--E")) t.rows.push_back({E, manybody::occupation(E, model)});
    p.data(t);
  });

  double ra_i = 0.0, ra_j = 0.0;
  auto* ratio = stats->add_subcommand("ratio", "Boltzmann population ratio n_i / n_j");
  ratio->add_option("--Ei", ra_i)->required();
  ratio->add_option("--Ej", ra_j)->required();
  ratio->add_option("--T", st_T);
  leaf(ratio, [&](Printer& p) { p.record({{"ratio", manybody::boltzmann_ratio(ra_i, ra_j, st_T, k_b())}}); });

  std::string mu_levels;
  double mu_N = 1.0;
  auto* chem = stats->add_subcommand("mu", "chemical potential for a level list");
  chem->add_option("--levels", mu_levels, "E:g,E:g,...")->required();
  chem->add_option("--N", mu_N);
  chem->add_option("--T", st_T);
  chem->add_option("--kind", st_kind)->check(CLI::IsMember({"mb", "be", "fd"}));
  leaf(chem, [&](Printer& p) {
    std::vector<manybody::Level> levels;
    for (const auto& item : split(mu_levels, ',')) {
      const auto eg = split(item, ':');
      if (eg.size() > 2 || eg.empty()) throw UsageError("--levels entries are E or E:g");
      levels.push_back({parse_number(eg[0], "--levels"), eg.size() == 2 ? parse_number(eg[1], "--levels") : 1.0});
    }
    p.record({{"mu", manybody::solve_chemical_potential(levels, mu_N, st_T, parse_statistics(st_kind), k_b())}});
  });

  double fe_density = 1e27;
  auto* fermi = stats->add_subcommand("fermi", "Fermi energy of an electron gas");
  fermi->add_option("--density", fe_density, "particles per unit volume");
  leaf(fermi, [&](Printer& p) {
    const auto u = cfg.unit_system();
    const double ef = manybody::fermi_energy(fe_density, 1.0, u.constants().m_e, u.hbar());
    p.record({{"fermi_energy", ef}, {"fermi_energy_eV", ef / u.ev()}});
  });

  // manybody
  auto* mb_cmd = app.add_subcommand("manybody", "identical particles");
  mb_cmd->require_subcommand(1);
  mb_cmd->fallthrough();
  std::string mb_labels;
  auto* antisym = mb_cmd->add_subcommand("antisym", "antisymmetrized product state");
  antisym->add_option("--labels", mb_labels, "comma separated")->required();
  leaf(antisym, [&](Printer& p) { print_state(p, manybody::antisymmetrize(split(mb_labels, ','))); });
  auto* sym = mb_cmd->add_subcommand("sym", "symmetrized product state");
  sym->add_option("--labels", mb_labels, "comma separated")->required();
  leaf(sym, [&](Printer& p) { print_state(p, manybody::symmetrize(split(mb_labels, ','))); });

  int osc_n = 0, osc_m = 1;
  double osc_omega = 1.0;
  auto* osc = mb_cmd->add_subcommand("oscillator", "two fermions in one oscillator");
  osc->add_option("--n", osc_n);
  osc->add_option("--m", osc_m);
  osc->add_option("--omega", osc_omega);
  leaf(osc, [&](Printer& p) {
    const auto r = manybody::two_oscillator_eigen(osc_n, osc_m, osc_omega);
    if (p.format() == Format::Json) {
      p.json_value({{"energy", r.energy}, {"forbidden", r.forbidden}, {"state", state_json(r.state)}});
      return;
    }
    p.record({{"energy", r.energy}, {"forbidden", std::string(r.forbidden ? "true" : "false")}});
    if (!r.forbidden) p.table(state_table(r.state));
  });

  int sh_Z = 1;
  auto* shells = mb_cmd->add_subcommand("shells", "hydrogenic shell filling");
  shells->add_option("--Z", sh_Z)->required();
  leaf(shells, [&](Printer& p) {
    const auto s = manybody::fill_shells(sh_Z);
    if (p.format() == Format::Table) {
      p.record({{"Z", static_cast<long long>(sh_Z)}, {"configuration", manybody::configuration_string(s)}});
      return;
    }
    Table t{{"label", "n", "l", "occupancy"}, {}};
    for (const auto& sub : s)
      t.rows.push_back({sub.label, static_cast<long long>(sub.n), static_cast<long long>(sub.l),
                        static_cast<long long>(sub.occupancy)});
    p.table(t);
  });

  // bands
  bands::KPParams kp{1.0, 0.3, 10.0};
  double kp_emax = 60.0;
  std::size_t kp_scan = 8000;
  bool kp_curve = false;
  auto* bands_cmd = app.add_subcommand("bands", "Kronig-Penney bands and gaps (hbar = m = 1 by default)");
  bands_cmd->add_option("--a", kp.a, "half width of the free region");
  bands_cmd->add_option("--b", kp.b, "barrier width");
  bands_cmd->add_option("--V", kp.V, "barrier height");
  bands_cmd->add_option("--mass", kp.mass);
  bands_cmd->add_option("--hbar", kp.hbar);
  bands_cmd->add_option("--Emax", kp_emax);
  bands_cmd->add_option("--scan", kp_scan)->check(CLI::PositiveNumber);
  bands_cmd->add_flag("--curve", kp_curve, "emit E,f(E) on the scan grid");
  leaf(bands_cmd, [&](Printer& p) {
    if (kp_curve) {
      Table t{{"E", "f"}, {}};
      for (std::size_t i = 1; i <= kp_scan; ++i) {
        const double E = kp_emax * static_cast<double>(i) / static_cast<double>(kp_scan);
        t.rows.push_back({E, bands::kp_dispersion(E, kp)});
      }
      p.data(t);
      return;
    }
    const auto bs = bands::kp_bands(kp, kp_emax, kp_scan);
    warn(bs.warnings);
    if (p.format() == Format::Json) {
      auto intervals = [](const std::vector<bands::Interval>& v) {
        json a = json::array();
        for (const auto& i : v) a.push_back({i.lo, i.hi});
        return a;
      };
      json j = {{"bands", intervals(bs.bands)}, {"gaps", intervals(bs.gaps)}};
      j["bottom_gap"] = bs.bottom_gap ? json{bs.bottom_gap->lo, bs.bottom_gap->hi} : json(nullptr);
      j["last_band_open"] = bs.last_band_open;
      j["e_max"] = bs.e_max;
      j["n_scan"] = bs.n_scan;
      j["tolerance"] = bs.tolerance;
      j["max_edge_residual"] = bs.max_edge_residual;
      j["warnings"] = bs.warnings;
      p.json_value(j);
      return;
    }
    Table t{{"kind", "index", "lo", "hi", "width"}, {}};
    if (bs.bottom_gap) t.rows.push_back({std::string("gap"), 0LL, bs.bottom_gap->lo, bs.bottom_gap->hi, bs.bottom_gap->width()});
    for (std::size_t i = 0; i < bs.bands.size(); ++i) {
      const auto& b = bs.bands[i];
      t.rows.push_back({std::string("band"), static_cast<long long>(i + 1), b.lo, b.hi, b.width()});
      if (i < bs.gaps.size()) {
        const auto& g = bs.gaps[i];
        t.rows.push_back({std::string("gap"), static_cast<long long>(i + 1), g.lo, g.hi, g.width()});
      }
    }
    p.table(t);
  });

  // exercises
  std::optional<int> ex_chapter;
  auto* ex = app.add_subcommand("exercises", "rerun the exercise catalogue against stored oracle values");
  ex->add_option("--chapter", ex_chapter);
  leaf(ex, [&](Printer& p) {
    const auto report = exercises::run(ex_chapter);
    Table t{{"id", "chapter", "value", "reference", "deviation", "tolerance", "status"}, {}};
    for (const auto& r : report.results) {
      const std::string result = r.error.empty() ? (r.passed ? "PASS" : "FAIL") : "ERROR: " + r.error;
      t.rows.push_back({r.id, static_cast<long long>(r.chapter), r.value, r.reference, r.deviation, r.tolerance, result});
    }
    p.table(t);
    if (!report.all_passed()) status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (constants_json) cfg.out = "json";
  std::ostringstream buffer;
  Printer printer(cfg, buffer);
  try {
    action(printer);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const BelowThresholdError& e) {
    std::cerr << "error: " << e.what() << " (threshold frequency " << io::format_sci(e.threshold_frequency(), cfg.precision)
              << " Hz)\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (cfg.output.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write '" << cfg.output << "'\n";
      return 1;
    }
    file << buffer.str();
  }
  return status;
}
