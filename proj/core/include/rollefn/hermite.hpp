#pragma once

#include <vector>

#include "rollefn/differentiable_function.hpp"
#include "rollefn/polynomial.hpp"

namespace rollefn {

/// Strictly increasing interpolation nodes x_0 < ... < x_n, at least two.
class NodeSet {
public:
  explicit NodeSet(std::vector<double> nodes);

  const std::vector<double>& values() const noexcept { return nodes_; }
  std::size_t count() const noexcept { return nodes_.size(); }
  double front() const noexcept { return nodes_.front(); }
  double back() const noexcept { return nodes_.back(); }

private:
  std::vector<double> nodes_;
};

/// Hermite interpolant of degree <= 2n+1: matches f and f' at every node.
struct HermiteInterpolant {
  Polynomial poly;
  NodeSet nodes;
  std::vector<double> f_values;   // f(x_k)
  std::vector<double> df_values;  // f'(x_k)
};

/// Constructs the unique interpolant via confluent divided differences in
/// Newton form, then converts to monomial coefficients. The interpolatory
/// conditions are verified at every node after construction.
HermiteInterpolant build_hermite(const DifferentiableFunction& f, const NodeSet& nodes);

/// Monic node polynomial of degree n+1 with roots exactly at the nodes.
Polynomial node_polynomial(const NodeSet& nodes);

/// True pointwise interpolation error f(x) - H(x).
double pointwise_error(const DifferentiableFunction& f, const HermiteInterpolant& hermite,
                       double x);

/// Remainder model f^(2n+2)(xi) / (2n+2)! * prod_k (x - x_k)^2 evaluated with a
/// prescribed xi. Requires f.max_order >= 2n+2 and at most 81 nodes (n <= 80),
/// keeping the factorial inside double range.
double remainder_model(const DifferentiableFunction& f, const NodeSet& nodes, double xi,
                       double x);

/// m! as a floating-point product; exact up to m = 22, ample beyond.
double factorial(int m);

}  // namespace rollefn
