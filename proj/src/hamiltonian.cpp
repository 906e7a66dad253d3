#include "qmkit/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qmkit/error.hpp"

namespace qmkit::gridops {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Symmetric tridiagonal matrix with diagonal d and constant off-diagonal e.
struct Tridiagonal {
  std::vector<double> d;
  double e;

  std::size_t size() const { return d.size(); }

  // Number of eigenvalues strictly below x (Sturm sequence of LDL^T pivots).
  std::size_t count_below(double x, double pivmin) const {
    std::size_t count = 0;
    double q = d[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
      q = d[i] - x - e * e / q;
      if (std::abs(q) < pivmin) q = -pivmin;
      if (q < 0.0) ++count;
    }
    return count;
  }

  void multiply(const std::vector<double>& x, std::vector<double>& y) const {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i) {
      double s = d[i] * x[i];
      if (i > 0) s += e * x[i - 1];
      if (i + 1 < n) s += e * x[i + 1];
      y[i] = s;
    }
  }
};

// LU factorization with partial pivoting of (T - shift I), LAPACK dgttrf layout.
class ShiftedLU {
 public:
  ShiftedLU(const Tridiagonal& t, double shift, double tiny) : n_(t.size()) {
    d_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) d_[i] = t.d[i] - shift;
    dl_.assign(n_ > 0 ? n_ - 1 : 0, t.e);
    du_.assign(n_ > 0 ? n_ - 1 : 0, t.e);
    du2_.assign(n_ > 1 ? n_ - 2 : 0, 0.0);
    swap_.assign(n_, false);
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (d_[i] == 0.0) d_[i] = tiny;
        const double fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      } else {
        const double fact = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = fact;
        const double temp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = temp - fact * d_[i + 1];
        if (i + 2 < n_) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -fact * du_[i + 1];
        }
        swap_[i] = true;
      }
    }
    for (auto& v : d_) {
      if (std::abs(v) < tiny) v = v < 0.0 ? -tiny : tiny;
    }
  }

  void solve(std::vector<double>& b) const {
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (!swap_[i]) {
        b[i + 1] -= dl_[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl_[i] * b[i];
      }
    }
    for (std::size_t ii = n_; ii-- > 0;) {
      double s = b[ii];
      if (ii + 1 < n_) s -= du_[ii] * b[ii + 1];
      if (ii + 2 < n_) s -= du2_[ii] * b[ii + 2];
      b[ii] = s / d_[ii];
    }
  }

 private:
  std::size_t n_;
  std::vector<double> d_, dl_, du_, du2_;
  std::vector<bool> swap_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void scale_to_unit(std::vector<double>& v) {
  const double n = std::sqrt(dot(v, v));
  for (auto& x : v) x /= n;
}

}  // namespace

Hamiltonian::Hamiltonian(Grid1D grid, std::vector<double> potential, double mass, double hbar)
    : grid_(grid), potential_(std::move(potential)), mass_(mass), hbar_(hbar) {
  if (!(mass > 0.0) || !(hbar > 0.0)) throw DomainError("Hamiltonian needs positive mass and hbar");
  if (potential_.size() != grid_.size()) throw ShapeError("potential sample count does not match grid size");
  for (std::size_t i = 1; i + 1 < potential_.size(); ++i) {
    if (!std::isfinite(potential_[i])) throw DomainError("potential must be finite at interior points");
  }
  off_ = -hbar * hbar / (2.0 * mass * grid_.dx() * grid_.dx());
}

std::vector<double> Hamiltonian::diagonal() const {
  std::vector<double> d(interior_size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = -2.0 * off_ + potential_[i + 1];
  return d;
}

double Hamiltonian::matrix_norm() const {
  double best = 0.0;
  const auto d = diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const int neighbours = (i > 0) + (i + 1 < d.size());
    best = std::max(best, std::abs(d[i]) + neighbours * std::abs(off_));
  }
  return best;
}

Eigen::MatrixXd Hamiltonian::dense() const {
  const auto d = diagonal();
  const auto n = static_cast<Eigen::Index>(d.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = d[static_cast<std::size_t>(i)];
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = off_;
  }
  return m;
}

WaveFunction Hamiltonian::apply(const WaveFunction& psi) const {
  require_same_grid(grid_, psi.grid());
  const auto& f = psi.values();
  const std::size_t n = f.size();
  std::vector<cplx> out(n);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const cplx left = i > 1 ? f[i - 1] : cplx{};
    const cplx right = i + 2 < n ? f[i + 1] : cplx{};
    out[i] = (-2.0 * off_ + potential_[i]) * f[i] + off_ * (left + right);
  }
  return WaveFunction(grid_, std::move(out));
}

Hamiltonian Hamiltonian::shifted(double c) const {
  std::vector<double> v = potential_;
  for (auto& x : v) x += c;
  Hamiltonian h(grid_, std::move(v), mass_, hbar_);
  h.description = description;
  return h;
}

Hamiltonian assemble_hamiltonian(const Grid1D& grid, const std::vector<double>& potential, double mass, double hbar) {
  return Hamiltonian(grid, potential, mass, hbar);
}

Hamiltonian assemble_hamiltonian(const Grid1D& grid, const std::function<double(double)>& potential, double mass,
                                 double hbar) {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = potential(grid.x(i));
  return Hamiltonian(grid, std::move(v), mass, hbar);
}

Spectrum solve_eigen(const Hamiltonian& h, std::size_t k, BoundaryKind boundary) {
  const std::size_t m = h.interior_size();
  if (k == 0 || k > m) throw DomainError("number of requested states must be in 1..n_points-2");

  Tridiagonal t{h.diagonal(), h.off_diagonal()};
  const double norm = h.matrix_norm();
  const double scale = norm > 0.0 ? norm : 1.0;
  const double pivmin = std::numeric_limits<double>::min() / kEps * std::max(1.0, t.e * t.e);

  // Gershgorin interval
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = ((i > 0) + (i + 1 < m)) * std::abs(t.e);
    lo = std::min(lo, t.d[i] - r);
    hi = std::max(hi, t.d[i] + r);
  }
  lo -= 2.0 * kEps * scale;
  hi += 2.0 * kEps * scale;

  std::vector<double> energies(k);
  for (std::size_t j = 0; j < k; ++j) {
    // smallest x with count_below(x) > j
    double a = j > 0 ? energies[j - 1] - 4.0 * kEps * scale : lo;
    a = std::max(a, lo);
    double b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (t.count_below(mid, pivmin) > j) {
        b = mid;
      } else {
        a = mid;
      }
      if (b - a <= 2.0 * kEps * std::max(std::abs(a), std::abs(b))) break;
    }
    energies[j] = 0.5 * (a + b);
  }

  Spectrum s{{}, {}, {}, h.grid(), h.mass(), h.hbar(), h.description, {}};
  std::vector<std::vector<double>> vectors;
  vectors.reserve(k);
  std::vector<double> work(m);
  const double tiny = kEps * scale;
  const double dx = h.grid().dx();

  for (std::size_t j = 0; j < k; ++j) {
    const double lambda = energies[j];
    // deterministic, non-symmetric start so no eigenvector is missed by parity
    std::vector<double> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = 1.0 + 0.37 * std::sin(1.3 * static_cast<double>(i) + 0.5 * j);
    scale_to_unit(v);
    ShiftedLU lu(t, lambda, tiny);
    for (int it = 0; it < 4; ++it) {
      lu.solve(v);
      for (const auto& prev : vectors) {
        const double c = dot(prev, v);
        for (std::size_t i = 0; i < m; ++i) v[i] -= c * prev[i];
      }
      scale_to_unit(v);
    }
    t.multiply(v, work);
    double res = 0.0;
    for (std::size_t i = 0; i < m; ++i) res += (work[i] - lambda * v[i]) * (work[i] - lambda * v[i]);
    res = std::sqrt(res);
    if (!(res < 1e-10 * scale)) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "eigenpair %zu did not converge: residual %.3e exceeds %.3e", j, res,
                    1e-10 * scale);
      throw SolverError(buf, res);
    }
    vectors.push_back(v);

    // grid normalization and sign convention
    double vmax = 0.0;
    for (std::size_t i = 0; i < m; ++i) vmax = std::max(vmax, std::abs(v[i]));
    std::size_t imax = 0;
    while (std::abs(v[imax]) < vmax * (1.0 - 1e-8)) ++imax;
    const double sign = v[imax] < 0.0 ? -1.0 : 1.0;
    const double factor = sign / std::sqrt(dx);
    std::vector<cplx> full(m + 2);
    for (std::size_t i = 0; i < m; ++i) full[i + 1] = v[i] * factor;
    s.energies.push_back(lambda);
    s.residuals.push_back(res);
    s.states.emplace_back(h.grid(), std::move(full));

    if (boundary == BoundaryKind::Truncated) {
      const double edge = std::max(std::abs(v.front()), std::abs(v.back()));
      if (edge > 1e-6 * std::abs(v[imax])) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "state %zu has not decayed at the domain edge (|psi_edge|/max = %.2e); enlarge the domain", j,
                      edge / std::abs(v[imax]));
        s.warnings.emplace_back(buf);
      }
    }
  }
  return s;
}

WaveFunction evolve(const Spectrum& spectrum, const std::vector<cplx>& coefficients, double t) {
  if (coefficients.size() > spectrum.size()) throw DomainError("more coefficients than states in the spectrum");
  WaveFunction out = WaveFunction::zeros(spectrum.grid);
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    const cplx phase = std::polar(1.0, -spectrum.energies[n] * t / spectrum.hbar);
    const cplx c = coefficients[n] * phase;
    const auto& psi = spectrum.states[n].values();
    for (std::size_t i = 0; i < psi.size(); ++i) out[i] += c * psi[i];
  }
  return out;
}

}  // namespace qmkit::gridops
