#pragma once

#include <functional>
#include <string>
#include <vector>

namespace rollefn {

/// A target function together with its derivative stack: deriv(k, x) returns
/// f^(k)(x) for 0 <= k <= max_order(). Derivatives are supplied in closed form
/// by the constructor; nothing is differentiated automatically.
class DifferentiableFunction {
public:
  DifferentiableFunction(std::string name, int max_order,
                         std::function<double(int, double)> deriv);

  /// f^(k)(x). Throws order_out_of_range for k < 0 or k > max_order().
  double deriv(int k, double x) const;

  double operator()(double x) const { return deriv(0, x); }

  int max_order() const noexcept { return max_order_; }
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
  int max_order_;
  std::function<double(int, double)> deriv_;
};

/// f(x) = e^x sin x with the closed-form stack f^(k)(x) = 2^(k/2) e^x sin(x + k pi/4),
/// valid for every order.
DifferentiableFunction builtin_exp_sin();

/// Wraps an explicit list of callbacks; derivs[k] evaluates f^(k).
DifferentiableFunction from_callbacks(std::vector<std::function<double(double)>> derivs,
                                      std::string name = "callbacks");

}  // namespace rollefn
