#include "rollefn/differentiable_function.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <utility>

#include "rollefn/errors.hpp"

namespace rollefn {

DifferentiableFunction::DifferentiableFunction(std::string name, int max_order,
                                               std::function<double(int, double)> deriv)
    : name_(std::move(name)), max_order_(max_order), deriv_(std::move(deriv)) {
  if (max_order_ < 0) {
    throw Error(ErrorKind::invalid_input, "DifferentiableFunction: max_order must be >= 0");
  }
  if (!deriv_) {
    throw Error(ErrorKind::invalid_input, "DifferentiableFunction: empty derivative callback");
  }
}

double DifferentiableFunction::deriv(int k, double x) const {
  if (k < 0 || k > max_order_) {
    throw Error(ErrorKind::order_out_of_range,
                "derivative order " + std::to_string(k) + " outside [0, " +
                    std::to_string(max_order_) + "] for function '" + name_ + "'");
  }
  return deriv_(k, x);
}

DifferentiableFunction builtin_exp_sin() {
  // f^(k)(x) = Im((1+i)^k e^{(1+i)x}) = 2^{k/2} e^x sin(x + k pi/4).
  auto deriv = [](int k, double x) {
    const double quarter_pi = std::numbers::pi / 4.0;
    return std::pow(2.0, 0.5 * k) * std::exp(x) * std::sin(x + k * quarter_pi);
  };
  return DifferentiableFunction("exp-sin", 200, deriv);
}

DifferentiableFunction from_callbacks(std::vector<std::function<double(double)>> derivs,
                                      std::string name) {
  if (derivs.empty()) {
    throw Error(ErrorKind::invalid_input, "from_callbacks: need at least one callback");
  }
  for (const auto& cb : derivs) {
    if (!cb) {
      throw Error(ErrorKind::invalid_input, "from_callbacks: null callback in stack");
    }
  }
  const int max_order = static_cast<int>(derivs.size()) - 1;
  auto stack = std::make_shared<std::vector<std::function<double(double)>>>(std::move(derivs));
  auto deriv = [stack](int k, double x) { return (*stack)[static_cast<std::size_t>(k)](x); };
  return DifferentiableFunction(std::move(name), max_order, deriv);
}

}  // namespace rollefn
