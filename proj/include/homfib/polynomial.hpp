#pragma once

// Dense univariate polynomials and rational functions over Q.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace homfib {

using Rational = mpq_class;

/// Coefficients indexed by degree; trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coeffs);
  QPolynomial(const Rational& constant);  // NOLINT: implicit scalar promotion

  /// c * t^k
  static QPolynomial monomial(std::size_t k, const Rational& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& t) const;
  QPolynomial monic() const;
  /// p(t) -> p(t^k)
  QPolynomial substitute_power(std::size_t k) const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: returns (quotient, remainder). Divisor must be nonzero.
std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
QPolynomial gcd(QPolynomial a, QPolynomial b);

/// numerator / denominator in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(QPolynomial num, QPolynomial den);

  const QPolynomial& numerator() const { return num_; }
  const QPolynomial& denominator() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);

 private:
  void normalize();
  QPolynomial num_;
  QPolynomial den_;
};

}  // namespace homfib
