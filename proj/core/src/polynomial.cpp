#include "rollefn/polynomial.hpp"

#include <cmath>
#include <utility>

#include "rollefn/errors.hpp"

namespace rollefn {

namespace {

void trim_trailing_zeros(std::vector<double>& coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0.0) {
    coeffs.pop_back();
  }
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    coeffs_.push_back(0.0);
  }
  trim_trailing_zeros(coeffs_);
}

double Polynomial::operator()(double x) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coeffs();
  if (c.size() == 1) {
    return Polynomial();
  }
  std::vector<double> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) {
    out[k - 1] = static_cast<double>(k) * c[k];
  }
  return Polynomial(std::move(out));
}

Polynomial antiderivative(const Polynomial& p) {
  const auto& c = p.coeffs();
  std::vector<double> out(c.size() + 1, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    out[k + 1] = c[k] / static_cast<double>(k + 1);
  }
  return Polynomial(std::move(out));
}

double integrate_definite(const Polynomial& p, double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorKind::invalid_input, "integrate_definite: bounds must be finite");
  }
  if (a > b) {
    throw Error(ErrorKind::invalid_input, "integrate_definite: requires a <= b");
  }
  const Polynomial big = antiderivative(p);
  return big(b) - big(a);
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
  const auto& pc = p.coeffs();
  const auto& qc = q.coeffs();
  std::vector<double> out(std::max(pc.size(), qc.size()), 0.0);
  for (std::size_t k = 0; k < pc.size(); ++k) out[k] += pc[k];
  for (std::size_t k = 0; k < qc.size(); ++k) out[k] += qc[k];
  return Polynomial(std::move(out));
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
  const auto& pc = p.coeffs();
  const auto& qc = q.coeffs();
  std::vector<double> out(pc.size() + qc.size() - 1, 0.0);
  for (std::size_t i = 0; i < pc.size(); ++i) {
    for (std::size_t j = 0; j < qc.size(); ++j) {
      out[i + j] += pc[i] * qc[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial scale(const Polynomial& p, double factor) {
  std::vector<double> out = p.coeffs();
  for (double& c : out) c *= factor;
  return Polynomial(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  const auto& c = p.coeffs();
  os << "poly[";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0) os << ", ";
    os << c[k];
  }
  return os << "]";
}

}  // namespace rollefn
