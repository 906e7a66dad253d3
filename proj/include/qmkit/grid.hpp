#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace qmkit::gridops {

using cplx = std::complex<double>;

/// Uniform 1D grid. Both end points are nodes.
class Grid1D {
 public:
  /// Throws DomainError unless x_max > x_min and n_points >= 3.
  Grid1D(double x_min, double x_max, std::size_t n_points);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  std::size_t size() const noexcept { return n_; }
  double dx() const noexcept { return dx_; }
  double x(std::size_t i) const noexcept { return i + 1 == n_ ? x_max_ : x_min_ + static_cast<double>(i) * dx_; }
  std::vector<double> points() const;

  /// x_min == -x_max up to 1e-12 of the extent.
  bool is_symmetric() const noexcept;

  bool operator==(const Grid1D& other) const noexcept;
  bool operator!=(const Grid1D& other) const noexcept { return !(*this == other); }

 private:
  double x_min_;
  double x_max_;
  std::size_t n_;
  double dx_;
};

/// Complex samples of psi(x) on a grid.
class WaveFunction {
 public:
  /// Throws ShapeError if the sample count differs from the grid size.
  WaveFunction(Grid1D grid, std::vector<cplx> values);
  WaveFunction(Grid1D grid, const std::vector<double>& values);

  static WaveFunction zeros(const Grid1D& grid);
  static WaveFunction sample(const Grid1D& grid, const std::function<cplx(double)>& f);

  const Grid1D& grid() const noexcept { return grid_; }
  const std::vector<cplx>& values() const noexcept { return values_; }
  std::vector<cplx>& values() noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const cplx& operator[](std::size_t i) const { return values_[i]; }
  cplx& operator[](std::size_t i) { return values_[i]; }

  /// Trapezoid norm squared, sum |psi_i|^2 w_i.
  double norm_squared() const;
  double norm() const;
  /// |norm^2 - 1| < 1e-9.
  bool is_normalized() const;

  WaveFunction& operator+=(const WaveFunction& other);
  WaveFunction& operator-=(const WaveFunction& other);
  WaveFunction& operator*=(cplx s);

 private:
  Grid1D grid_;
  std::vector<cplx> values_;
};

WaveFunction operator+(WaveFunction a, const WaveFunction& b);
WaveFunction operator-(WaveFunction a, const WaveFunction& b);
WaveFunction operator*(cplx s, WaveFunction a);

/// Trapezoid weight of node i (dx/2 at the ends, dx inside).
double trapezoid_weight(const Grid1D& grid, std::size_t i);

void require_same_grid(const Grid1D& a, const Grid1D& b);

}  // namespace qmkit::gridops
