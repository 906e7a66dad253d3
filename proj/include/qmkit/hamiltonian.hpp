#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qmkit/grid.hpp"

namespace qmkit::gridops {

/// Finite-difference Hamiltonian H = V(X) - (hbar^2 / 2m) D^2 with hard walls
/// at x_min and x_max. The wall nodes carry psi = 0, so the matrix acts on the
/// n - 2 interior nodes: diagonal hbar^2/(m dx^2) + V_i, off-diagonal
/// -hbar^2/(2 m dx^2).
class Hamiltonian {
 public:
  Hamiltonian(Grid1D grid, std::vector<double> potential, double mass, double hbar);

  const Grid1D& grid() const noexcept { return grid_; }
  const std::vector<double>& potential() const noexcept { return potential_; }
  double mass() const noexcept { return mass_; }
  double hbar() const noexcept { return hbar_; }

  std::size_t interior_size() const noexcept { return grid_.size() - 2; }
  /// Interior diagonal entries.
  std::vector<double> diagonal() const;
  double off_diagonal() const noexcept { return off_; }
  /// Infinity norm of the interior matrix.
  double matrix_norm() const;
  /// Interior matrix as a dense array (small problems and tests).
  Eigen::MatrixXd dense() const;

  /// Applies H to psi with the wall values treated as zero; the result is
  /// zero at the walls.
  WaveFunction apply(const WaveFunction& psi) const;

  /// Same operator with V replaced by V + c.
  Hamiltonian shifted(double c) const;

  std::string description;

 private:
  Grid1D grid_;
  std::vector<double> potential_;
  double mass_;
  double hbar_;
  double off_;
};

/// Throws DomainError for non-positive mass/hbar or non-finite interior V,
/// ShapeError if V has the wrong length.
Hamiltonian assemble_hamiltonian(const Grid1D& grid, const std::vector<double>& potential, double mass,
                                 double hbar = 1.0);
Hamiltonian assemble_hamiltonian(const Grid1D& grid, const std::function<double(double)>& potential, double mass,
                                 double hbar = 1.0);

/// HardWall: the walls are physical (box). Truncated: the grid cuts off an
/// unbounded domain, and eigenvectors that have not decayed at the edges are
/// reported in Spectrum::warnings.
enum class BoundaryKind { HardWall, Truncated };

struct Spectrum {
  std::vector<double> energies;
  std::vector<WaveFunction> states;
  std::vector<double> residuals;  // ||H psi - E psi|| / ||psi|| per state
  Grid1D grid;
  double mass;
  double hbar;
  std::string description;
  std::vector<std::string> warnings;

  std::size_t size() const noexcept { return energies.size(); }
};

/// k lowest eigenpairs by Sturm-sequence bisection and inverse iteration.
/// Eigenvectors are trapezoid-normalized and signed so that the
/// largest-magnitude sample is positive (the leftmost one when several agree
/// to 1e-8). Throws SolverError when a residual
/// exceeds 1e-10 * ||H||.
Spectrum solve_eigen(const Hamiltonian& h, std::size_t k, BoundaryKind boundary = BoundaryKind::HardWall);

/// psi(t) = sum_n c_n exp(-i E_n t / hbar) psi_n.
WaveFunction evolve(const Spectrum& spectrum, const std::vector<cplx>& coefficients, double t);

}  // namespace qmkit::gridops
