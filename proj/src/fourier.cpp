#include "qmkit/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qmkit/error.hpp"

namespace qmkit::fourier {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr std::size_t kResync = 64;  // exact phase every kResync terms bounds recurrence drift
}

double FourierSeries::operator()(double x) const {
  double s = 0.5 * a0;
  for (int k = 1; k <= K; ++k) s += a[k - 1] * std::cos(k * x) + b[k - 1] * std::sin(k * x);
  return s;
}

std::vector<double> period_samples(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
  return x;
}

FourierSeries fourier_series(const std::vector<double>& samples, int K) {
  if (K < 0) throw DomainError("series order must be non-negative");
  const std::size_t n = samples.size();
  if (n == 0 || n < 8 * static_cast<std::size_t>(K)) {
    throw ResolutionError("Fourier series of order K needs at least 8K samples per period");
  }
  const auto x = period_samples(n);
  const double w = 2.0 / static_cast<double>(n);  // (1/pi) * (2 pi / N)
  FourierSeries fs{K, 0.0, std::vector<double>(K), std::vector<double>(K)};
  for (std::size_t j = 0; j < n; ++j) fs.a0 += w * samples[j];
  for (int k = 1; k <= K; ++k) {
    double ak = 0.0;
    double bk = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      ak += samples[j] * std::cos(k * x[j]);
      bk += samples[j] * std::sin(k * x[j]);
    }
    fs.a[k - 1] = w * ak;
    fs.b[k - 1] = w * bk;
  }
  return fs;
}

FourierSeries fourier_series(const std::function<double(double)>& f, int K, std::size_t n_samples) {
  const auto x = period_samples(n_samples);
  std::vector<double> s(n_samples);
  for (std::size_t j = 0; j < n_samples; ++j) s[j] = f(x[j]);
  return fourier_series(s, K);
}

MomentumWaveFunction::MomentumWaveFunction(double p_min, double dp, std::vector<cplx> values)
    : p_min_(p_min), dp_(dp), values_(std::move(values)) {
  if (!(dp > 0.0)) throw DomainError("momentum spacing must be positive");
}

double MomentumWaveFunction::norm_squared() const {
  double s = 0.0;
  for (const auto& v : values_) s += std::norm(v);
  return s * dp_;
}

double MomentumWaveFunction::mean() const {
  double s = 0.0;
  double w = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    s += p(k) * std::norm(values_[k]);
    w += std::norm(values_[k]);
  }
  if (!(w > 0.0)) throw ZeroNormError("momentum distribution is zero");
  return s / w;
}

double MomentumWaveFunction::variance() const {
  const double mu = mean();
  double s = 0.0;
  double w = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const double d = p(k) - mu;
    s += d * d * std::norm(values_[k]);
    w += std::norm(values_[k]);
  }
  return s / w;
}

MomentumWaveFunction fourier_transform(const WaveFunction& psi, double hbar) {
  if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
  const Grid1D& g = psi.grid();
  const std::size_t n = psi.size();
  const double dp = 2.0 * kPi * hbar / (static_cast<double>(n) * g.dx());
  const double p_min = -0.5 * static_cast<double>(n - 1) * dp;
  const double pref = 1.0 / std::sqrt(2.0 * kPi * hbar);

  std::vector<cplx> weighted(n);
  for (std::size_t j = 0; j < n; ++j) weighted[j] = psi[j] * gridops::trapezoid_weight(g, j);

  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double p = p_min + static_cast<double>(k) * dp;
    const cplx step = std::polar(1.0, -p * g.dx() / hbar);
    cplx s{};
    cplx phase{};
    for (std::size_t j = 0; j < n; ++j) {
      phase = j % kResync == 0 ? std::polar(1.0, -p * g.x(j) / hbar) : phase * step;
      s += weighted[j] * phase;
    }
    out[k] = pref * s;
  }
  MomentumWaveFunction phi(p_min, dp, std::move(out));

  double peak = 0.0;
  for (const auto& v : psi.values()) peak = std::max(peak, std::abs(v));
  const double edge = std::max(std::abs(psi[0]), std::abs(psi[n - 1]));
  if (edge > 1e-3 * peak) {
    phi.warnings.emplace_back("wave function has not decayed at the grid boundary; transform suffers leakage");
  }
  return phi;
}

WaveFunction inverse_fourier_transform(const MomentumWaveFunction& phi, const Grid1D& grid, double hbar) {
  if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
  const double pref = phi.dp() / std::sqrt(2.0 * kPi * hbar);
  std::vector<cplx> out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    const cplx step = std::polar(1.0, phi.dp() * x / hbar);
    cplx s{};
    cplx phase{};
    for (std::size_t k = 0; k < phi.size(); ++k) {
      phase = k % kResync == 0 ? std::polar(1.0, phi.p(k) * x / hbar) : phase * step;
      s += phi.values()[k] * phase;
    }
    out[j] = pref * s;
  }
  return WaveFunction(grid, std::move(out));
}

namespace {

// (e^{iLc} - 1) / (ic), the integral of e^{ixc} over [0, L]
cplx box_edge_term(double c, double L) {
  const double z = L * c;
  if (std::abs(z) < 1e-4) {
    return L * cplx{1.0 - z * z / 6.0, z / 2.0 - z * z * z / 24.0};
  }
  return (std::polar(1.0, z) - 1.0) / cplx{0.0, c};
}

}  // namespace

cplx box_momentum_rep(int n, double L, double p, double hbar) {
  if (n < 1) throw DomainError("box state needs n >= 1");
  if (!(L > 0.0) || !(hbar > 0.0)) throw DomainError("box length and hbar must be positive");
  const double c1 = -p / hbar + n * kPi / L;
  const double c2 = -p / hbar - n * kPi / L;
  const cplx pref = 1.0 / cplx{0.0, 2.0} * std::sqrt(1.0 / (kPi * hbar * L));
  return pref * (box_edge_term(c1, L) - box_edge_term(c2, L));
}

double dirichlet_kernel(double K, double y) {
  const double z = K * y;
  if (std::abs(z) < 1e-6) return 2.0 * K * (1.0 - z * z / 6.0);
  return 2.0 * std::sin(z) / y;
}

WaveFunction delta_approximant(int n, const Grid1D& grid) {
  if (n < 1) throw DomainError("delta approximant needs n >= 1");
  const double half = 0.5 / n;
  const auto node = [&](double x) { return static_cast<long>(std::lround((x - grid.x_min()) / grid.dx())); };
  const long i0 = node(-half);
  const long i1 = node(half);
  if (i0 < 1 || i1 > static_cast<long>(grid.size()) - 2) {
    throw ResolutionError("delta approximant does not fit inside the grid");
  }
  if (i1 - i0 + 1 < 8) throw ResolutionError("delta approximant width spans fewer than 8 grid points");
  const double width = static_cast<double>(i1 - i0) * grid.dx();
  const double height = 1.0 / width;
  WaveFunction chi = WaveFunction::zeros(grid);
  for (long i = i0; i <= i1; ++i) chi[static_cast<std::size_t>(i)] = height;
  chi[static_cast<std::size_t>(i0)] = 0.5 * height;
  chi[static_cast<std::size_t>(i1)] = 0.5 * height;
  return chi;
}

double completeness_residual(const std::vector<WaveFunction>& basis, const WaveFunction& test) {
  WaveFunction rest = test;
  for (const auto& b : basis) {
    gridops::require_same_grid(b.grid(), test.grid());
    cplx c{};
    for (std::size_t i = 0; i < test.size(); ++i) {
      c += std::conj(b[i]) * test[i] * gridops::trapezoid_weight(test.grid(), i);
    }
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= c * b[i];
  }
  return rest.norm();
}

WaveFunction gaussian_packet(const Grid1D& grid, double sigma, double x0, double p0, double hbar) {
  if (!(sigma > 0.0) || !(hbar > 0.0)) throw DomainError("Gaussian packet needs sigma > 0 and hbar > 0");
  const double amp = std::pow(2.0 * kPi * sigma * sigma, -0.25);
  return WaveFunction::sample(grid, [&](double x) {
    const double d = x - x0;
    return amp * std::exp(-d * d / (4.0 * sigma * sigma)) * std::polar(1.0, p0 * x / hbar);
  });
}

}  // namespace qmkit::fourier
