#pragma once

#include <ostream>
#include <vector>

namespace rollefn {

/// Dense univariate polynomial with real coefficients in ascending powers:
/// coeffs()[k] multiplies x^k. Trailing zero coefficients are trimmed exactly
/// (no epsilon), so degree() never changes silently under roundoff.
class Polynomial {
public:
  /// The zero polynomial, stored as the single coefficient [0].
  Polynomial() : coeffs_{0.0} {}

  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial constant(double value) { return Polynomial({value}); }

  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

  /// Horner evaluation. Non-finite x propagates to a non-finite result.
  double operator()(double x) const noexcept;

private:
  std::vector<double> coeffs_;
};

Polynomial derivative(const Polynomial& p);

/// Antiderivative with zero constant term.
Polynomial antiderivative(const Polynomial& p);

/// Exact definite integral over [a, b]. Requires finite a <= b.
double integrate_definite(const Polynomial& p, double a, double b);

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, double factor);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
inline Polynomial operator*(double s, const Polynomial& p) { return scale(p, s); }
inline Polynomial operator*(const Polynomial& p, double s) { return scale(p, s); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace rollefn
