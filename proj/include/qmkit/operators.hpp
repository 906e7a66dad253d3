#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qmkit/grid.hpp"
#include "qmkit/hamiltonian.hpp"

namespace qmkit::gridops {

/// Linear operator acting on grid wave functions. Cheap to copy; composite
/// operators share their operands.
class GridOperator {
 public:
  enum class Kind {
    Position,
    Derivative,
    Momentum,
    SecondDerivative,
    Multiply,
    Hamiltonian,
    Parity,
    Identity,
    Sum,
    Composition
  };

  static GridOperator position();
  /// Central differences inside, second-order one-sided at the end nodes.
  static GridOperator derivative();
  /// -i hbar D.
  static GridOperator momentum(double hbar);
  static GridOperator second_derivative();
  static GridOperator multiply(std::function<cplx(double)> g, std::string name = "g(x)");
  /// Pointwise samples; must match the grid of every function it is applied to.
  static GridOperator multiply(std::vector<cplx> samples, std::string name = "g_i");
  static GridOperator hamiltonian(const Hamiltonian& h);
  /// psi(x) -> psi(-x); needs a symmetric grid.
  static GridOperator parity();
  static GridOperator identity();
  /// sum_i c_i A_i
  static GridOperator sum(std::vector<std::pair<cplx, GridOperator>> terms);
  /// A B (B acts first).
  static GridOperator compose(const GridOperator& a, const GridOperator& b);

  Kind kind() const noexcept;
  std::string describe() const;

  WaveFunction apply(const WaveFunction& psi) const;

  struct Node;

 private:
  explicit GridOperator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

GridOperator operator+(const GridOperator& a, const GridOperator& b);
GridOperator operator-(const GridOperator& a, const GridOperator& b);
GridOperator operator*(cplx s, const GridOperator& a);
/// Composition: (a * b) psi = a (b psi).
GridOperator operator*(const GridOperator& a, const GridOperator& b);

/// [A, B] = AB - BA as an operator.
GridOperator commutator(const GridOperator& a, const GridOperator& b);

WaveFunction apply(const GridOperator& op, const WaveFunction& psi);
/// (AB - BA) f.
WaveFunction commutator_apply(const GridOperator& a, const GridOperator& b, const WaveFunction& f);

}  // namespace qmkit::gridops
