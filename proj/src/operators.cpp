#include "qmkit/operators.hpp"

#include <cstdio>
#include <optional>

#include "qmkit/error.hpp"

namespace qmkit::gridops {

struct GridOperator::Node {
  Kind kind;
  std::string name;
  double hbar = 1.0;
  std::function<cplx(double)> function;
  std::vector<cplx> samples;
  std::optional<Hamiltonian> hamiltonian;
  std::vector<std::pair<cplx, GridOperator>> terms;  // Sum terms, or the two factors of a Composition
};

namespace {

using Node = GridOperator::Node;

std::vector<cplx> first_derivative(const WaveFunction& psi) {
  const auto& f = psi.values();
  const std::size_t n = f.size();
  const double h = psi.grid().dx();
  std::vector<cplx> out(n);
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
  out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  out[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  return out;
}

std::vector<cplx> second_derivative_samples(const WaveFunction& psi) {
  const auto& f = psi.values();
  const std::size_t n = f.size();
  const double h2 = psi.grid().dx() * psi.grid().dx();
  std::vector<cplx> out(n);
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / h2;
  if (n >= 4) {
    out[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
    out[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
  } else {
    out[0] = out[n - 1] = out[1];
  }
  return out;
}

}  // namespace

GridOperator GridOperator::position() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Position;
  n->name = "X";
  return GridOperator(n);
}

GridOperator GridOperator::derivative() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Derivative;
  n->name = "D";
  return GridOperator(n);
}

GridOperator GridOperator::momentum(double hbar) {
  if (!(hbar > 0.0)) throw DomainError("momentum operator needs hbar > 0");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Momentum;
  n->name = "P";
  n->hbar = hbar;
  return GridOperator(n);
}

GridOperator GridOperator::second_derivative() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::SecondDerivative;
  n->name = "D^2";
  return GridOperator(n);
}

GridOperator GridOperator::multiply(std::function<cplx(double)> g, std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Multiply;
  n->name = std::move(name);
  n->function = std::move(g);
  return GridOperator(n);
}

GridOperator GridOperator::multiply(std::vector<cplx> samples, std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Multiply;
  n->name = std::move(name);
  n->samples = std::move(samples);
  return GridOperator(n);
}

GridOperator GridOperator::hamiltonian(const Hamiltonian& h) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Hamiltonian;
  n->name = "H";
  n->hamiltonian = h;
  n->hbar = h.hbar();
  return GridOperator(n);
}

GridOperator GridOperator::parity() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Parity;
  n->name = "R";
  return GridOperator(n);
}

GridOperator GridOperator::identity() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Identity;
  n->name = "I";
  return GridOperator(n);
}

GridOperator GridOperator::sum(std::vector<std::pair<cplx, GridOperator>> terms) {
  if (terms.empty()) throw DomainError("operator sum needs at least one term");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->terms = std::move(terms);
  return GridOperator(n);
}

GridOperator GridOperator::compose(const GridOperator& a, const GridOperator& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Composition;
  n->terms = {{cplx{1.0}, a}, {cplx{1.0}, b}};
  return GridOperator(n);
}

GridOperator::Kind GridOperator::kind() const noexcept { return node_->kind; }

std::string GridOperator::describe() const {
  switch (node_->kind) {
    case Kind::Sum: {
      std::string s = "(";
      for (std::size_t i = 0; i < node_->terms.size(); ++i) {
        if (i > 0) s += " + ";
        const cplx c = node_->terms[i].first;
        if (c != cplx{1.0}) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "(%g%+gi)", c.real(), c.imag());
          s += buf;
        }
        s += node_->terms[i].second.describe();
      }
      return s + ")";
    }
    case Kind::Composition:
      return node_->terms[0].second.describe() + node_->terms[1].second.describe();
    default:
      return node_->name;
  }
}

WaveFunction GridOperator::apply(const WaveFunction& psi) const {
  const Grid1D& grid = psi.grid();
  const std::size_t n = psi.size();
  switch (node_->kind) {
    case Kind::Identity:
      return psi;
    case Kind::Position: {
      WaveFunction out = psi;
      for (std::size_t i = 0; i < n; ++i) out[i] *= grid.x(i);
      return out;
    }
    case Kind::Derivative:
      return WaveFunction(grid, first_derivative(psi));
    case Kind::Momentum: {
      auto d = first_derivative(psi);
      const cplx factor{0.0, -node_->hbar};
      for (auto& v : d) v *= factor;
      return WaveFunction(grid, std::move(d));
    }
    case Kind::SecondDerivative:
      return WaveFunction(grid, second_derivative_samples(psi));
    case Kind::Multiply: {
      WaveFunction out = psi;
      if (node_->function) {
        for (std::size_t i = 0; i < n; ++i) out[i] *= node_->function(grid.x(i));
      } else {
        if (node_->samples.size() != n) throw ShapeError("multiplication samples do not match the grid");
        for (std::size_t i = 0; i < n; ++i) out[i] *= node_->samples[i];
      }
      return out;
    }
    case Kind::Hamiltonian:
      return node_->hamiltonian->apply(psi);
    case Kind::Parity: {
      if (!grid.is_symmetric()) throw DomainError("parity needs a grid symmetric about x = 0");
      std::vector<cplx> out(n);
      for (std::size_t i = 0; i < n; ++i) out[i] = psi[n - 1 - i];
      return WaveFunction(grid, std::move(out));
    }
    case Kind::Sum: {
      WaveFunction out = WaveFunction::zeros(grid);
      for (const auto& [c, op] : node_->terms) {
        const WaveFunction part = op.apply(psi);
        for (std::size_t i = 0; i < n; ++i) out[i] += c * part[i];
      }
      return out;
    }
    case Kind::Composition:
      return node_->terms[0].second.apply(node_->terms[1].second.apply(psi));
  }
  throw Error("unknown operator kind");
}

GridOperator operator+(const GridOperator& a, const GridOperator& b) {
  return GridOperator::sum({{cplx{1.0}, a}, {cplx{1.0}, b}});
}

GridOperator operator-(const GridOperator& a, const GridOperator& b) {
  return GridOperator::sum({{cplx{1.0}, a}, {cplx{-1.0}, b}});
}

GridOperator operator*(cplx s, const GridOperator& a) { return GridOperator::sum({{s, a}}); }

GridOperator operator*(const GridOperator& a, const GridOperator& b) { return GridOperator::compose(a, b); }

GridOperator commutator(const GridOperator& a, const GridOperator& b) { return a * b - b * a; }

WaveFunction apply(const GridOperator& op, const WaveFunction& psi) { return op.apply(psi); }

WaveFunction commutator_apply(const GridOperator& a, const GridOperator& b, const WaveFunction& f) {
  WaveFunction ab = a.apply(b.apply(f));
  ab -= b.apply(a.apply(f));
  return ab;
}

}  // namespace qmkit::gridops
