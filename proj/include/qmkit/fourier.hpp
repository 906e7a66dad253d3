#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "qmkit/grid.hpp"

namespace qmkit::fourier {

using cplx = std::complex<double>;
using gridops::Grid1D;
using gridops::WaveFunction;

/// f(x) ~ a0/2 + sum_k [a_k cos(kx) + b_k sin(kx)] on one 2pi period.
struct FourierSeries {
  int K;
  double a0;
  std::vector<double> a;  // a[k-1] = a_k, k = 1..K
  std::vector<double> b;

  double operator()(double x) const;
};

/// Sample positions x_j = -pi + 2 pi j / N, j = 0..N-1, of one period.
std::vector<double> period_samples(std::size_t n);

/// Coefficients by trapezoid quadrature of periodic samples taken at
/// period_samples(N). Throws ResolutionError when N < 8 K.
FourierSeries fourier_series(const std::vector<double>& samples, int K);
FourierSeries fourier_series(const std::function<double(double)>& f, int K, std::size_t n_samples);

/// psi(p) on a uniform momentum grid p_k = p_min + k dp.
class MomentumWaveFunction {
 public:
  MomentumWaveFunction(double p_min, double dp, std::vector<cplx> values);

  std::size_t size() const noexcept { return values_.size(); }
  double p(std::size_t k) const noexcept { return p_min_ + static_cast<double>(k) * dp_; }
  double dp() const noexcept { return dp_; }
  const std::vector<cplx>& values() const noexcept { return values_; }

  double norm_squared() const;
  /// <P> and Var(P) of the momentum distribution |psi(p)|^2.
  double mean() const;
  double variance() const;

  std::vector<std::string> warnings;

 private:
  double p_min_;
  double dp_;
  std::vector<cplx> values_;
};

/// psi(p) = (2 pi hbar)^{-1/2} int dx psi(x) e^{-ipx/hbar} by direct trapezoid
/// quadrature. The momentum grid has N points spaced 2 pi hbar / (N dx),
/// symmetric about 0 and spanning [-pi hbar/dx, pi hbar/dx]. A leakage warning
/// is attached when |psi| at either grid end exceeds 1e-3 max|psi|.
MomentumWaveFunction fourier_transform(const WaveFunction& psi, double hbar = 1.0);

/// psi(x) = (2 pi hbar)^{-1/2} int dp psi(p) e^{ipx/hbar} sampled on `grid`.
WaveFunction inverse_fourier_transform(const MomentumWaveFunction& phi, const Grid1D& grid, double hbar = 1.0);

/// Momentum representation of the box state sqrt(2/L) sin(n pi x/L), in closed
/// form with the removable singularities at p = +-n pi hbar / L resolved by series.
cplx box_momentum_rep(int n, double L, double p, double hbar = 1.0);

/// 2 sin(K y) / y, equal to 2K at y = 0.
double dirichlet_kernel(double K, double y);

/// Rectangle of width ~1/n centred at 0 with unit trapezoid integral. Its edges
/// are snapped to grid nodes, which carry half height. Throws ResolutionError
/// when the width spans fewer than 8 grid points or does not fit in the grid.
WaveFunction delta_approximant(int n, const Grid1D& grid);

/// || test - sum_i <b_i|test> b_i || for an orthonormal set b_i.
double completeness_residual(const std::vector<WaveFunction>& basis, const WaveFunction& test);

/// (2 pi sigma^2)^{-1/4} exp(-(x-x0)^2 / 4 sigma^2) exp(i p0 x / hbar); its
/// momentum-space width is hbar / (2 sigma).
WaveFunction gaussian_packet(const Grid1D& grid, double sigma, double x0 = 0.0, double p0 = 0.0, double hbar = 1.0);

}  // namespace qmkit::fourier
