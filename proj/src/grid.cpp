#include "qmkit/grid.hpp"

#include <cmath>

#include "qmkit/error.hpp"

namespace qmkit::gridops {

Grid1D::Grid1D(double x_min, double x_max, std::size_t n_points) : x_min_(x_min), x_max_(x_max), n_(n_points) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
    throw DomainError("grid needs finite x_min < x_max");
  }
  if (n_points < 3) throw DomainError("grid needs at least 3 points");
  dx_ = (x_max - x_min) / static_cast<double>(n_points - 1);
}

std::vector<double> Grid1D::points() const {
  std::vector<double> xs(n_);
  for (std::size_t i = 0; i < n_; ++i) xs[i] = x(i);
  return xs;
}

bool Grid1D::is_symmetric() const noexcept {
  return std::abs(x_min_ + x_max_) <= 1e-12 * (x_max_ - x_min_);
}

bool Grid1D::operator==(const Grid1D& other) const noexcept {
  return n_ == other.n_ && x_min_ == other.x_min_ && x_max_ == other.x_max_;
}

double trapezoid_weight(const Grid1D& grid, std::size_t i) {
  return (i == 0 || i + 1 == grid.size()) ? 0.5 * grid.dx() : grid.dx();
}

void require_same_grid(const Grid1D& a, const Grid1D& b) {
  if (a != b) throw ShapeError("wave functions live on different grids");
}

WaveFunction::WaveFunction(Grid1D grid, std::vector<cplx> values) : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw ShapeError("sample count does not match grid size");
}

WaveFunction::WaveFunction(Grid1D grid, const std::vector<double>& values)
    : WaveFunction(grid, std::vector<cplx>(values.begin(), values.end())) {}

WaveFunction WaveFunction::zeros(const Grid1D& grid) { return WaveFunction(grid, std::vector<cplx>(grid.size())); }

WaveFunction WaveFunction::sample(const Grid1D& grid, const std::function<cplx(double)>& f) {
  std::vector<cplx> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = f(grid.x(i));
  return WaveFunction(grid, std::move(v));
}

double WaveFunction::norm_squared() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) s += std::norm(values_[i]) * trapezoid_weight(grid_, i);
  return s;
}

double WaveFunction::norm() const { return std::sqrt(norm_squared()); }

bool WaveFunction::is_normalized() const { return std::abs(norm_squared() - 1.0) < 1e-9; }

WaveFunction& WaveFunction::operator+=(const WaveFunction& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

WaveFunction& WaveFunction::operator-=(const WaveFunction& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

WaveFunction& WaveFunction::operator*=(cplx s) {
  for (auto& v : values_) v *= s;
  return *this;
}

WaveFunction operator+(WaveFunction a, const WaveFunction& b) { return a += b; }
WaveFunction operator-(WaveFunction a, const WaveFunction& b) { return a -= b; }
WaveFunction operator*(cplx s, WaveFunction a) { return a *= s; }

}  // namespace qmkit::gridops
